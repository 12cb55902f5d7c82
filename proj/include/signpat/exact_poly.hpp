#pragma once

// Exact rational polynomials built from their roots.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "signpat/signs.hpp"

namespace signpat {

using Rational = mpq_class;

/// Parses "p/q", "p" or a decimal like "-1.25".
Rational parse_rational(std::string_view text);
/// Always "p/q" in lowest terms, q > 0 ("4/1" for an integer).
std::string to_pq_string(const Rational& value);

/// Dense polynomial; coefficient k multiplies x^k. Trailing zero coefficients
/// are trimmed so the leading coefficient is nonzero (the zero polynomial has
/// no coefficients).
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  /// e.g. "x^3+x^2-14*x-24".
  std::string str() const;

  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Nonzero rationals with pairwise distinct absolute values.
class RootSet {
 public:
  RootSet() = default;
  /// Throws Error(InvalidRootSet) on a zero root or tied moduli.
  explicit RootSet(std::vector<Rational> roots);

  int size() const noexcept { return static_cast<int>(roots_.size()); }
  const std::vector<Rational>& roots() const noexcept { return roots_; }

 private:
  std::vector<Rational> roots_;
};

/// Monic product of (x - r) over the roots.
ExactPoly poly_from_roots(const RootSet& roots);

/// Throws Error(ZeroCoefficient, k) for a vanishing x^k coefficient and
/// Error(LeadingMinus) for a negative leading coefficient.
SignPattern pattern_of_poly(const ExactPoly& poly);

ModuliOrder moduli_order_of_roots(const RootSet& roots);

}  // namespace signpat
