#include "signpat/signs.hpp"

#include <bit>
#include <cctype>

#include "signpat/error.hpp"

namespace signpat {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::IllegalCharacter: return "IllegalCharacter";
    case Errc::LeadingMinus: return "LeadingMinus";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::InvalidRootSet: return "InvalidRootSet";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::RatioCapExceeded: return "RatioCapExceeded";
    case Errc::IncompatibleCounts: return "IncompatibleCounts";
    case Errc::BadNormalization: return "BadNormalization";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::InvalidRatio: return "InvalidRatio";
  }
  return "Unknown";
}

namespace {

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

// Four-sign windows read from the pattern bits, leftmost sign in the low
// bit, minus = 1.
constexpr std::uint64_t kA = 0b1100;  // (+,+,-,-)
constexpr std::uint64_t kB = 0b0011;  // (-,-,+,+)
constexpr std::uint64_t kC = 0b0110;  // (+,-,-,+)
constexpr std::uint64_t kD = 0b1001;  // (-,+,+,-)

int window_kind(std::uint64_t window) {
  switch (window) {
    case kA: return 0;
    case kB: return 1;
    case kC: return 2;
    case kD: return 3;
    default: return -1;
  }
}

// Pair labels: bit k set when signs k and k+1 differ (a sign change).
std::uint64_t change_labels(const SignPattern& pattern) {
  const std::uint64_t bits = pattern.minus_bits();
  return (bits ^ (bits >> 1)) & low_mask(pattern.degree());
}

}  // namespace

SignPattern::SignPattern(std::span<const Sign> signs) {
  if (signs.empty()) throw Error(Errc::EmptyInput, "sign pattern is empty");
  if (signs.size() > static_cast<std::size_t>(kMaxLength)) {
    throw Error(Errc::DegreeTooLarge, "sign pattern longer than 64 signs");
  }
  if (signs.front() == Sign::Minus) {
    throw Error(Errc::LeadingMinus, "leading sign must be +");
  }
  length_ = static_cast<int>(signs.size());
  for (int i = 0; i < length_; ++i) {
    if (signs[i] == Sign::Minus) bits_ |= std::uint64_t{1} << i;
  }
}

SignPattern SignPattern::from_bits(std::uint64_t minus_bits, int length) {
  if (length < 1 || length > kMaxLength) {
    throw Error(Errc::DegreeTooLarge, "sign pattern length out of range");
  }
  if (minus_bits & 1U) throw Error(Errc::LeadingMinus, "leading sign must be +");
  SignPattern p;
  p.bits_ = minus_bits & low_mask(length);
  p.length_ = length;
  return p;
}

std::vector<Sign> SignPattern::signs() const {
  std::vector<Sign> out(length_);
  for (int i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

std::string SignPattern::str() const {
  std::string s(length_, '+');
  for (int i = 0; i < length_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

ModuliOrder::ModuliOrder(std::span<const Letter> letters) {
  if (letters.size() > static_cast<std::size_t>(kMaxLength)) {
    throw Error(Errc::DegreeTooLarge, "order of moduli longer than 64 letters");
  }
  length_ = static_cast<int>(letters.size());
  for (int i = 0; i < length_; ++i) {
    if (letters[i] == Letter::P) bits_ |= std::uint64_t{1} << i;
  }
}

ModuliOrder ModuliOrder::from_bits(std::uint64_t positive_bits, int length) {
  if (length < 0 || length > kMaxLength) {
    throw Error(Errc::DegreeTooLarge, "order length out of range");
  }
  ModuliOrder o;
  o.bits_ = positive_bits & low_mask(length);
  o.length_ = length;
  return o;
}

int ModuliOrder::count_p() const noexcept { return std::popcount(bits_); }

ModuliOrder ModuliOrder::reversed() const {
  std::uint64_t out = 0;
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) out |= std::uint64_t{1} << (length_ - 1 - i);
  }
  return from_bits(out, length_);
}

std::vector<Letter> ModuliOrder::letters() const {
  std::vector<Letter> out(length_);
  for (int i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

std::string ModuliOrder::str() const {
  std::string s;
  for (int i = 0; i < length_; ++i) {
    if (i) s += '<';
    s += to_char((*this)[i]);
  }
  return s;
}

std::string ModuliOrder::compact() const {
  std::string s(length_, 'N');
  for (int i = 0; i < length_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

SignPattern parse_pattern(std::string_view text) {
  std::vector<Sign> signs;
  bool expect_sign = true;
  const bool separated = text.find(',') != std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (separated && std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+' || ch == '-') {
      if (separated && !expect_sign) {
        throw Error(Errc::IllegalCharacter, "missing ',' before sign",
                    static_cast<int>(i));
      }
      signs.push_back(ch == '+' ? Sign::Plus : Sign::Minus);
      expect_sign = !separated;
    } else if (separated && ch == ',' && !expect_sign) {
      expect_sign = true;
    } else {
      throw Error(Errc::IllegalCharacter,
                  std::string("unexpected character '") + ch + "'",
                  static_cast<int>(i));
    }
  }
  if (signs.empty()) throw Error(Errc::EmptyInput, "sign pattern is empty");
  if (separated && expect_sign) {
    throw Error(Errc::IllegalCharacter, "trailing ','",
                static_cast<int>(text.size()));
  }
  return SignPattern(signs);
}

ModuliOrder parse_order(std::string_view text) {
  std::vector<Letter> letters;
  const bool separated = text.find('<') != std::string_view::npos;
  bool expect_letter = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == 'N' || ch == 'P') {
      if (separated && !expect_letter) {
        throw Error(Errc::IllegalCharacter, "missing '<' before letter",
                    static_cast<int>(i));
      }
      letters.push_back(ch == 'N' ? Letter::N : Letter::P);
      expect_letter = !separated;
    } else if (separated && ch == '<' && !expect_letter) {
      expect_letter = true;
    } else {
      throw Error(Errc::IllegalCharacter,
                  std::string("unexpected character '") + ch + "'",
                  static_cast<int>(i));
    }
  }
  if (separated && expect_letter) {
    throw Error(Errc::IllegalCharacter, "trailing '<'",
                static_cast<int>(text.size()));
  }
  return ModuliOrder(letters);
}

SignCounts sign_counts(const SignPattern& pattern) {
  const int c = std::popcount(change_labels(pattern));
  return {c, pattern.degree() - c};
}

ModuliOrder canonical_order(const SignPattern& pattern) {
  const int d = pattern.degree();
  if (d == 0) throw Error(Errc::DegreeZero, "single sign has an empty order");
  // Letter k (1-based) compares x^k and x^(k-1), i.e. signs d-k and d-k+1:
  // change label d-k.
  const std::uint64_t labels = change_labels(pattern);
  std::uint64_t positive = 0;
  for (int k = 1; k <= d; ++k) {
    if ((labels >> (d - k)) & 1U) positive |= std::uint64_t{1} << (k - 1);
  }
  return ModuliOrder::from_bits(positive, d);
}

SignPattern pattern_with_canonical_order(const ModuliOrder& order) {
  const int d = order.size();
  std::uint64_t bits = 0;
  Sign current = Sign::Plus;
  for (int i = 1; i <= d; ++i) {
    // Sign i differs from sign i-1 when letter d-i+1 is P.
    if (order[d - i] == Letter::P) current = -current;
    if (current == Sign::Minus) bits |= std::uint64_t{1} << i;
  }
  return SignPattern::from_bits(bits, d + 1);
}

SignPattern negate_variable(const SignPattern& pattern) {
  const int d = pattern.degree();
  std::uint64_t bits = pattern.minus_bits();
  for (int i = 0; i <= d; ++i) {
    if ((d - i) % 2 == 1) bits ^= std::uint64_t{1} << i;
  }
  if (bits & 1U) bits = ~bits;
  return SignPattern::from_bits(bits & low_mask(pattern.size()), pattern.size());
}

SignPattern reverse_pattern(const SignPattern& pattern) {
  const int n = pattern.size();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (pattern[i] == Sign::Minus) bits |= std::uint64_t{1} << (n - 1 - i);
  }
  if (bits & 1U) bits = ~bits;
  return SignPattern::from_bits(bits & low_mask(n), n);
}

std::vector<ConfigHit> find_configurations(const SignPattern& pattern) {
  std::vector<ConfigHit> hits;
  const std::uint64_t bits = pattern.minus_bits();
  for (int i = 0; i + 3 < pattern.size(); ++i) {
    const int kind = window_kind((bits >> i) & 0xF);
    if (kind >= 0) hits.push_back({i + 1, static_cast<ConfigKind>(kind)});
  }
  return hits;
}

std::array<int, 4> configuration_counts(const SignPattern& pattern) {
  std::array<int, 4> counts{};
  const std::uint64_t bits = pattern.minus_bits();
  for (int i = 0; i + 3 < pattern.size(); ++i) {
    const int kind = window_kind((bits >> i) & 0xF);
    if (kind >= 0) ++counts[kind];
  }
  return counts;
}

bool is_canonical(const SignPattern& pattern) {
  return find_configurations(pattern).empty();
}

IsolatedFeatures isolated_features(const SignPattern& pattern) {
  IsolatedFeatures out;
  const std::uint64_t labels = change_labels(pattern);
  const int d = pattern.degree();
  for (int k = 1; k + 1 < d; ++k) {
    const bool left = (labels >> (k - 1)) & 1U;
    const bool mid = (labels >> k) & 1U;
    const bool right = (labels >> (k + 1)) & 1U;
    if (mid && !left && !right) out.changes.push_back(k + 1);
    if (!mid && left && right) out.preservations.push_back(k + 1);
  }
  return out;
}

RigidVerdict classify_rigid(const ModuliOrder& order) {
  const int d = order.size();
  bool alternating = true;
  for (int i = 1; i < d; ++i) {
    if (order[i] == order[i - 1]) alternating = false;
  }
  const bool constant = order.count_p() == 0 || order.count_n() == 0;
  if (d == 0 || !(alternating || constant)) return {};
  return {true, pattern_with_canonical_order(order)};
}

std::vector<SignPattern> all_patterns(int degree) {
  if (degree < 0 || degree >= SignPattern::kMaxLength) {
    throw Error(Errc::DegreeTooLarge, "degree out of range");
  }
  if (degree > 30) throw Error(Errc::DegreeTooLarge, "too many patterns to list");
  std::vector<SignPattern> out;
  out.reserve(std::size_t{1} << degree);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << degree); ++v) {
    out.push_back(SignPattern::from_bits(v << 1, degree + 1));
  }
  return out;
}

}  // namespace signpat
