#pragma once

// Sign patterns of real univariate polynomials and orders of moduli of their
// roots: counting, canonical order, configuration windows, canonicity and
// rigidity.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signpat {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Coefficient signs of a polynomial, leading coefficient first. The leading
/// sign is always +; at most kMaxLength signs (degree 63).
///
/// Stored as a bitmask: bit i is set when sign i (0 = leading) is minus.
class SignPattern {
 public:
  static constexpr int kMaxLength = 64;

  /// The degree-0 pattern (+).
  SignPattern() = default;

  /// Throws Error(EmptyInput | LeadingMinus | DegreeTooLarge).
  explicit SignPattern(std::span<const Sign> signs);

  /// Throws Error(LeadingMinus) when bit 0 is set and Error(DegreeTooLarge)
  /// when the length is out of range; bits at or above `length` are ignored.
  static SignPattern from_bits(std::uint64_t minus_bits, int length);

  int size() const noexcept { return length_; }
  int degree() const noexcept { return length_ - 1; }
  Sign operator[](int i) const noexcept {
    return ((bits_ >> i) & 1U) ? Sign::Minus : Sign::Plus;
  }
  /// Sign of the coefficient of x^k.
  Sign coefficient_sign(int k) const noexcept { return (*this)[degree() - k]; }
  std::uint64_t minus_bits() const noexcept { return bits_; }

  std::vector<Sign> signs() const;
  /// Compact form, e.g. "++--".
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern& a, const SignPattern& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.str() <=> b.str();
  }

 private:
  std::uint64_t bits_ = 0;
  int length_ = 1;
};

enum class Letter : std::uint8_t { N, P };

constexpr char to_char(Letter l) noexcept { return l == Letter::N ? 'N' : 'P'; }

/// Relative position of the root moduli on the positive half-line, smallest
/// modulus first: N for a negative root, P for a positive one.
class ModuliOrder {
 public:
  static constexpr int kMaxLength = 64;

  ModuliOrder() = default;
  explicit ModuliOrder(std::span<const Letter> letters);
  static ModuliOrder from_bits(std::uint64_t positive_bits, int length);

  int size() const noexcept { return length_; }
  /// Letter of the (i+1)-th smallest modulus.
  Letter operator[](int i) const noexcept {
    return ((bits_ >> i) & 1U) ? Letter::P : Letter::N;
  }
  std::uint64_t positive_bits() const noexcept { return bits_; }
  int count_p() const noexcept;
  int count_n() const noexcept { return length_ - count_p(); }

  ModuliOrder reversed() const;
  std::vector<Letter> letters() const;
  /// Display form "N<P<N"; the empty order prints as "".
  std::string str() const;
  /// Bare letters "NPN".
  std::string compact() const;

  friend bool operator==(const ModuliOrder&, const ModuliOrder&) = default;
  friend auto operator<=>(const ModuliOrder& a, const ModuliOrder& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.compact() <=> b.compact();
  }

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

enum class ConfigKind : std::uint8_t { A, B, C, D };

constexpr char to_char(ConfigKind k) noexcept {
  return static_cast<char>('A' + static_cast<int>(k));
}

struct ConfigHit {
  int position;  // 1-based index of the leftmost of the four signs
  ConfigKind kind;
  friend bool operator==(const ConfigHit&, const ConfigHit&) = default;
};

struct SignCounts {
  int changes;        // c
  int preservations;  // p
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

struct IsolatedFeatures {
  std::vector<int> changes;        // label triples (p,c,p), middle position
  std::vector<int> preservations;  // label triples (c,p,c), middle position
};

struct RigidVerdict {
  bool rigid = false;
  std::optional<SignPattern> pattern;  // the unique realizable pattern
};

/// Accepts "++--" or "+,-,-,+" (whitespace around commas is ignored).
SignPattern parse_pattern(std::string_view text);
/// Accepts "N<P<N" or "NPN". The empty string is the empty order.
ModuliOrder parse_order(std::string_view text);

SignCounts sign_counts(const SignPattern& pattern);

/// Read right to left: P for each opposite adjacent pair, N for equal ones.
/// Throws Error(DegreeZero) for a single sign.
ModuliOrder canonical_order(const SignPattern& pattern);

/// Inverse of canonical_order: the leading-+ pattern whose canonical order
/// is `order`.
SignPattern pattern_with_canonical_order(const ModuliOrder& order);

/// Pattern of Q(-x), renormalized to a leading +.
SignPattern negate_variable(const SignPattern& pattern);

/// Mirror image, renormalized to a leading +.
SignPattern reverse_pattern(const SignPattern& pattern);

/// All windows equal to A, B, C or D, by increasing position.
std::vector<ConfigHit> find_configurations(const SignPattern& pattern);

/// Number of A, B, C and D windows, in that order.
std::array<int, 4> configuration_counts(const SignPattern& pattern);

bool is_canonical(const SignPattern& pattern);

IsolatedFeatures isolated_features(const SignPattern& pattern);

/// Rigid orders are the strictly alternating and the constant ones.
RigidVerdict classify_rigid(const ModuliOrder& order);

/// All 2^d patterns of degree d with leading +, in increasing bit order.
std::vector<SignPattern> all_patterns(int degree);

}  // namespace signpat
