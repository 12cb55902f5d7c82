#pragma once

// Exhaustive statistics over all sign patterns of a degree, and desk-scale
// checks of the canonicity criterion against witness search.

#include <array>
#include <cstdint>
#include <vector>

#include "signpat/realize.hpp"
#include "signpat/signs.hpp"

namespace signpat {

inline constexpr int kCensusCeiling = 24;

struct CensusRow {
  int degree = 0;
  std::uint64_t total = 0;
  std::uint64_t canonical = 0;
  std::uint64_t noncanonical = 0;
  std::array<std::uint64_t, 4> windows{};  // A, B, C, D occurrences

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Classifies all 2^d leading-+ patterns by their A-D windows.
/// Throws Error(DegreeTooLarge) above `ceiling`.
CensusRow census(int degree, int ceiling = kCensusCeiling);

/// Canonical count from the isolated change / preservation criterion alone.
std::uint64_t count_canonical_by_isolated_features(int degree,
                                                   int ceiling = kCensusCeiling);

struct PatternOutcome {
  SignPattern pattern;
  bool canonical = false;
  // Non-canonical orders for which a witness was found. For a canonical
  // pattern a nonempty list is a failure; for a non-canonical one, an empty
  // list is.
  std::vector<FoundOrder> noncanonical_witnesses;
  std::uint64_t samples_used = 0;
  bool passed = false;
};

struct TheoremReport {
  int degree = 0;
  std::vector<PatternOutcome> outcomes;

  bool passed() const;
};

/// For a non-canonical pattern, searches the non-canonical orders until one
/// witness turns up. For a canonical pattern, runs the full budget on every
/// other compatible order.
TheoremReport verify_theorem_small(int degree, std::uint64_t budget = 100000,
                                   std::uint64_t seed = 42);

/// All patterns of length d+1 made of blocks of at least three +'s separated
/// by single -'s, e.g. (+,+,+,-,+,+,+,-).
std::vector<SignPattern> canonical_family(int degree);

/// True iff every member of canonical_family(degree) is canonical.
bool canonical_family_check(int degree);

}  // namespace signpat
