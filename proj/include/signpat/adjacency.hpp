#pragma once

// Sign patterns of W = (x^2 - 1) W* in terms of the sign pattern of W*, and
// the exhaustive check that every pattern gaining exactly one sign change
// contains one of the windows A-D.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signpat/exact_poly.hpp"
#include "signpat/signs.hpp"

namespace signpat {

enum class Ambig : std::uint8_t { Plus, Minus, Either };

/// Signs of W known from sign(W*) alone; Either where the coefficient
/// u_k - u_{k-2} compares two numbers of the same sign.
class AmbiguousPattern {
 public:
  explicit AmbiguousPattern(std::vector<Ambig> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  Ambig operator[](int i) const { return entries_.at(i); }
  const std::vector<Ambig>& entries() const noexcept { return entries_; }
  int ambiguous_count() const noexcept;

  /// ASCII form, '*' for an undetermined sign: "++**--".
  std::string compact() const;
  /// "(+,+,±,±,-,-)".
  std::string str() const;

  friend bool operator==(const AmbiguousPattern&, const AmbiguousPattern&) = default;

 private:
  std::vector<Ambig> entries_;
};

/// Accepts the compact form; '±' is accepted in place of '*'.
AmbiguousPattern parse_ambiguous(std::string_view text);

/// (x^2 - 1) * wstar.
ExactPoly lift_poly(const ExactPoly& wstar);

/// Throws Error(BadNormalization) unless the source has at least two signs
/// and begins (+,+).
AmbiguousPattern symbolic_lift(const SignPattern& source);

/// Every resolution of the undetermined entries, sorted.
std::vector<SignPattern> expand_S(const AmbiguousPattern& amb);

/// Members of S with exactly one more sign change than the source.
std::vector<SignPattern> filter_T(const std::vector<SignPattern>& s,
                                  const SignPattern& source);

struct STReport {
  SignPattern source;
  AmbiguousPattern lift;
  std::vector<SignPattern> s;
  std::vector<SignPattern> t;
  std::vector<std::vector<ConfigHit>> verdicts;  // parallel to t

  bool holds() const;
};

STReport st_report(const SignPattern& source);

/// One report per source of length d-1 beginning (+,+), in increasing bit
/// order of the source. Requires d >= 3.
std::vector<STReport> verify_proposition(int d);

bool all_hold(const std::vector<STReport>& reports);

/// A monic W* with sign pattern `source` whose lift has sign pattern exactly
/// `resolution`. Magnitudes along each parity chain u_0, u_2, ... and
/// u_1, u_3, ... are doubled or halved to force every undetermined
/// difference. Throws Error(BadNormalization) when `resolution` is not in
/// expand_S(symbolic_lift(source)).
ExactPoly build_wstar(const SignPattern& source, const SignPattern& resolution);

/// Signs of W_{d+1} from those of W_d and the sign of the new coefficient
/// u_{d-1} of W*_{d+1}: only the last two signs move and one is appended.
/// Works on any trailing window of at least two signs; returns one or two
/// sequences.
std::vector<std::vector<Sign>> raise_degree(std::span<const Sign> w_signs,
                                            Sign next_u);

}  // namespace signpat
