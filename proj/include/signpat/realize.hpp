#pragma once

// Realizing sign patterns by orders of moduli: the canonical construction and
// a seeded randomized search for witnesses of other orders.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "signpat/exact_poly.hpp"
#include "signpat/signs.hpp"

namespace signpat {

struct WitnessRequest {
  SignPattern pattern;
  ModuliOrder order;
  std::uint64_t budget = 100000;  // candidate root sets to try
  std::uint64_t seed = 42;
};

struct FoundOrder {
  ModuliOrder order;
  RootSet witness;
};

struct SearchReport {
  SignPattern pattern;
  ModuliOrder canonical;
  std::vector<FoundOrder> orders;  // sorted by order
  std::uint64_t samples_used = 0;
};

struct WitnessOutcome {
  std::optional<RootSet> witness;
  std::uint64_t samples_used = 0;
};

/// Roots with moduli ratio^1..ratio^d and signs from the canonical order,
/// doubling the ratio until the exact expansion has the requested pattern.
///
/// Throws Error(InvalidRatio) if ratio <= 1 and
/// Error(RatioCapExceeded) if the ratio grows past 2^20.
RootSet realize_canonical(const SignPattern& pattern, const Rational& ratio = 4);

/// All orders with `changes` P's and `preservations` N's, lexicographic
/// (N before P).
std::vector<ModuliOrder> enumerate_orders(int changes, int preservations);

/// Throws Error(IncompatibleCounts) unless the order has c(pattern) P's and
/// p(pattern) N's.
WitnessOutcome search_witness(const WitnessRequest& request);

/// search_witness without the sample count. An empty result means "none
/// within budget", never "not realizable".
std::optional<RootSet> witness_search(const WitnessRequest& request);

/// Canonical order (always present) plus every other Descartes-compatible
/// order for which search_witness succeeds, each with its own budget.
SearchReport realizable_orders(const SignPattern& pattern,
                               std::uint64_t budget = 100000,
                               std::uint64_t seed = 42);

/// Candidate root sets for a fixed order of moduli. Moduli are doubles with
/// short mantissas, so every candidate is an exact rational. The first four
/// draws are geometric grids with ratios 3/2, 2, 4 and 10; later draws are
/// seeded log-scale random walks mixing near-ties with wide gaps.
class RootSampler {
 public:
  RootSampler(const ModuliOrder& order, std::uint64_t seed);

  /// Signed roots sorted by increasing modulus.
  const std::vector<double>& next();

  /// Moves one modulus by a small relative amount without changing the order;
  /// used when the previous candidate produced a vanishing coefficient.
  const std::vector<double>& perturb();

  std::uint64_t draws() const noexcept { return draws_; }

 private:
  void draw_random_moduli();
  void assign_signs();

  ModuliOrder order_;
  std::mt19937_64 rng_;
  std::vector<double> moduli_;
  std::vector<double> roots_;
  std::uint64_t draws_ = 0;
};

/// Floating-point screen: false only when some coefficient of the product of
/// (x - r) provably has the wrong sign, using a forward error bound.
bool may_match(const std::vector<double>& roots, const SignPattern& target);

RootSet to_root_set(const std::vector<double>& roots);

}  // namespace signpat
