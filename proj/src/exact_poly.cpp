#include "signpat/exact_poly.hpp"

#include <algorithm>

#include "signpat/error.hpp"

namespace signpat {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::EmptyInput, "empty rational");
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw Error(Errc::IllegalCharacter, "not a rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
  }
  // Decimal: shift the point out and divide by a power of ten.
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const auto frac_len = s.size() - dot - 1;
  mpz_class num;
  if (digits.empty() || digits == "-" || digits == "+" ||
      num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) {
    throw Error(Errc::IllegalCharacter, "not a rational: '" + s + "'");
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_pq_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string ExactPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = coeffs_[k];
    if (a == 0) continue;
    const bool negative = a < 0;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    const Rational mag = abs(a);
    const bool unit = mag == 1;
    if (!unit || k == 0) {
      out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
      if (k > 0) out += "*";
    }
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ExactPoly(std::move(out));
}

RootSet::RootSet(std::vector<Rational> roots) : roots_(std::move(roots)) {
  std::vector<Rational> moduli;
  moduli.reserve(roots_.size());
  for (auto& r : roots_) {
    r.canonicalize();
    if (r == 0) throw Error(Errc::InvalidRootSet, "zero root");
    moduli.push_back(abs(r));
  }
  std::sort(moduli.begin(), moduli.end());
  if (std::adjacent_find(moduli.begin(), moduli.end()) != moduli.end()) {
    throw Error(Errc::InvalidRootSet, "two roots share a modulus");
  }
}

ExactPoly poly_from_roots(const RootSet& roots) {
  // Multiply in one factor (x - r) at a time, in place; c[k] multiplies x^k.
  std::vector<Rational> c{1};
  for (const auto& r : roots.roots()) {
    c.push_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      c[k] = c[k - 1] - r * c[k];
    }
    c[0] = -r * c[0];
  }
  return ExactPoly(std::move(c));
}

SignPattern pattern_of_poly(const ExactPoly& poly) {
  const int d = poly.degree();
  if (d < 0) throw Error(Errc::ZeroCoefficient, "zero polynomial", 0);
  if (poly.leading() < 0) {
    throw Error(Errc::LeadingMinus, "leading coefficient is negative");
  }
  std::vector<Sign> signs;
  signs.reserve(d + 1);
  for (int k = d; k >= 0; --k) {
    const int s = sgn(poly[k]);
    if (s == 0) {
      throw Error(Errc::ZeroCoefficient,
                  "coefficient of x^" + std::to_string(k) + " vanishes", k);
    }
    signs.push_back(s > 0 ? Sign::Plus : Sign::Minus);
  }
  return SignPattern(signs);
}

ModuliOrder moduli_order_of_roots(const RootSet& roots) {
  std::vector<const Rational*> sorted;
  for (const auto& r : roots.roots()) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const Rational* a, const Rational* b) {
    return abs(*a) < abs(*b);
  });
  std::vector<Letter> letters;
  letters.reserve(sorted.size());
  for (const Rational* r : sorted) letters.push_back(*r > 0 ? Letter::P : Letter::N);
  return ModuliOrder(letters);
}

}  // namespace signpat
