#include "signpat/adjacency.hpp"

#include <algorithm>

#include "signpat/error.hpp"

namespace signpat {

namespace {

Ambig from_sign(Sign s) { return s == Sign::Plus ? Ambig::Plus : Ambig::Minus; }

}  // namespace

AmbiguousPattern::AmbiguousPattern(std::vector<Ambig> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::EmptyInput, "ambiguous pattern is empty");
  if (entries_.front() != Ambig::Plus) {
    throw Error(Errc::LeadingMinus, "leading entry must be +");
  }
}

int AmbiguousPattern::ambiguous_count() const noexcept {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), Ambig::Either));
}

std::string AmbiguousPattern::compact() const {
  std::string out;
  for (Ambig a : entries_) {
    out += a == Ambig::Plus ? '+' : a == Ambig::Minus ? '-' : '*';
  }
  return out;
}

std::string AmbiguousPattern::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i] == Ambig::Plus ? "+" : entries_[i] == Ambig::Minus ? "-" : "±";
  }
  return out + ")";
}

AmbiguousPattern parse_ambiguous(std::string_view text) {
  std::vector<Ambig> entries;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      entries.push_back(Ambig::Plus);
    } else if (text[i] == '-') {
      entries.push_back(Ambig::Minus);
    } else if (text[i] == '*') {
      entries.push_back(Ambig::Either);
    } else if (text.substr(i, 2) == "±") {
      entries.push_back(Ambig::Either);
      ++i;
    } else {
      throw Error(Errc::IllegalCharacter, "unexpected character in ambiguous pattern",
                  static_cast<int>(i));
    }
  }
  return AmbiguousPattern(std::move(entries));
}

ExactPoly lift_poly(const ExactPoly& wstar) {
  return ExactPoly({-1, 0, 1}) * wstar;
}

AmbiguousPattern symbolic_lift(const SignPattern& source) {
  if (source.size() < 2 || source[1] != Sign::Plus) {
    throw Error(Errc::BadNormalization,
                "source " + source.str() + " must begin with (+,+)");
  }
  // source[i] is the sign of u_i (u_0 = 1); W has degree d = |source| + 1 and
  // its coefficient list, leading first, is u_j - u_{j-2} with u_j = 0 out of
  // range.
  const int d = source.size() + 1;
  std::vector<Ambig> out(d + 1);
  out[0] = Ambig::Plus;
  out[1] = from_sign(source[1]);
  for (int j = 2; j <= d - 2; ++j) {
    out[j] = source[j] != source[j - 2] ? from_sign(source[j]) : Ambig::Either;
  }
  out[d - 1] = from_sign(-source[d - 3]);
  out[d] = from_sign(-source[d - 2]);
  return AmbiguousPattern(std::move(out));
}

std::vector<SignPattern> expand_S(const AmbiguousPattern& amb) {
  std::uint64_t fixed = 0;
  std::vector<int> free;
  for (int i = 0; i < amb.size(); ++i) {
    if (amb[i] == Ambig::Minus) fixed |= std::uint64_t{1} << i;
    if (amb[i] == Ambig::Either) free.push_back(i);
  }
  std::vector<SignPattern> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::uint64_t bits = fixed;
    for (std::size_t f = 0; f < free.size(); ++f) {
      if ((mask >> f) & 1U) bits |= std::uint64_t{1} << free[f];
    }
    out.push_back(SignPattern::from_bits(bits, amb.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignPattern> filter_T(const std::vector<SignPattern>& s,
                                  const SignPattern& source) {
  const int target = sign_counts(source).changes + 1;
  std::vector<SignPattern> out;
  std::copy_if(s.begin(), s.end(), std::back_inserter(out),
               [&](const SignPattern& p) { return sign_counts(p).changes == target; });
  return out;
}

bool STReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& hits) { return !hits.empty(); });
}

STReport st_report(const SignPattern& source) {
  AmbiguousPattern lift = symbolic_lift(source);
  std::vector<SignPattern> s = expand_S(lift);
  std::vector<SignPattern> t = filter_T(s, source);
  std::vector<std::vector<ConfigHit>> verdicts;
  verdicts.reserve(t.size());
  for (const auto& p : t) verdicts.push_back(find_configurations(p));
  return {source, std::move(lift), std::move(s), std::move(t), std::move(verdicts)};
}

std::vector<STReport> verify_proposition(int d) {
  if (d < 3) throw Error(Errc::DegreeZero, "proposition check needs d >= 3");
  if (d > 40) throw Error(Errc::DegreeTooLarge, "proposition check capped at d = 40");
  // Sources have length d-1 and begin (+,+): bits 0 and 1 clear.
  const int free_bits = d - 3;
  std::vector<STReport> reports;
  reports.reserve(std::size_t{1} << free_bits);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << free_bits); ++v) {
    reports.push_back(st_report(SignPattern::from_bits(v << 2, d - 1)));
  }
  return reports;
}

bool all_hold(const std::vector<STReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const STReport& r) { return r.holds(); });
}

ExactPoly build_wstar(const SignPattern& source, const SignPattern& resolution) {
  const AmbiguousPattern lift = symbolic_lift(source);
  if (resolution.size() != lift.size()) {
    throw Error(Errc::BadNormalization, "resolution has the wrong length");
  }
  for (int j = 0; j < lift.size(); ++j) {
    if (lift[j] != Ambig::Either && lift[j] != from_sign(resolution[j])) {
      throw Error(Errc::BadNormalization,
                  resolution.str() + " is not a resolution of " + lift.compact());
    }
  }
  const int n = source.size();  // u_0 .. u_{n-1}
  std::vector<Rational> magnitude(n, Rational(1));
  for (int j = 2; j < n; ++j) {
    // Coefficient j of W (leading first) is u_j - u_{j-2}.
    if (source[j] == source[j - 2]) {
      const bool grow = resolution[j] == source[j];
      magnitude[j] = grow ? Rational(magnitude[j - 2] * 2) : Rational(magnitude[j - 2] / 2);
    } else {
      magnitude[j] = magnitude[j - 2];
    }
  }
  // ExactPoly is indexed by exponent: u_i multiplies x^(n-1-i).
  std::vector<Rational> coeffs(n);
  for (int i = 0; i < n; ++i) {
    coeffs[n - 1 - i] = source[i] == Sign::Plus ? magnitude[i] : Rational(-magnitude[i]);
  }
  return ExactPoly(std::move(coeffs));
}

std::vector<std::vector<Sign>> raise_degree(std::span<const Sign> w_signs, Sign next_u) {
  if (w_signs.size() < 2) {
    throw Error(Errc::BadNormalization, "need the last two signs of W_d");
  }
  const std::size_t n = w_signs.size();
  // The last two signs of W_d are -sgn(u_{d-3}) and -sgn(u_{d-2}).
  const Sign u_back2 = -w_signs[n - 2];
  std::vector<Sign> base(w_signs.begin(), w_signs.end() - 2);
  std::vector<Sign> middle;
  if (next_u != u_back2) {
    middle = {next_u};
  } else {
    middle = {Sign::Plus, Sign::Minus};
  }
  std::vector<std::vector<Sign>> out;
  for (Sign m : middle) {
    std::vector<Sign> seq = base;
    seq.push_back(m);                // u_{d-1} - u_{d-3}
    seq.push_back(w_signs[n - 1]);   // -u_{d-2}, unchanged
    seq.push_back(-next_u);          // -u_{d-1}
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace signpat
