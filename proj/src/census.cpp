#include "signpat/census.hpp"

#include <algorithm>
#include <string>

#include "signpat/error.hpp"

namespace signpat {

namespace {

void check_degree(int degree, int ceiling) {
  if (degree < 0) throw Error(Errc::DegreeTooLarge, "negative degree");
  if (degree > ceiling || degree >= SignPattern::kMaxLength) {
    throw Error(Errc::DegreeTooLarge, "degree " + std::to_string(degree) +
                                          " above the exhaustive ceiling " +
                                          std::to_string(ceiling));
  }
}

void family_members(int remaining, bool after_minus, std::string& prefix,
                    std::vector<SignPattern>& out) {
  if (remaining == 0) {
    out.push_back(parse_pattern(prefix));
    return;
  }
  if (!after_minus && !prefix.empty()) {
    // A block just closed; either end here or place a separator.
    prefix.push_back('-');
    family_members(remaining - 1, true, prefix, out);
    prefix.pop_back();
    return;
  }
  for (int block = 3; block <= remaining; ++block) {
    prefix.append(block, '+');
    family_members(remaining - block, false, prefix, out);
    prefix.resize(prefix.size() - block);
  }
}

}  // namespace

CensusRow census(int degree, int ceiling) {
  check_degree(degree, ceiling);
  CensusRow row;
  row.degree = degree;
  row.total = std::uint64_t{1} << degree;
  for (std::uint64_t v = 0; v < row.total; ++v) {
    const auto counts = configuration_counts(SignPattern::from_bits(v << 1, degree + 1));
    bool canonical = true;
    for (int k = 0; k < 4; ++k) {
      row.windows[k] += counts[k];
      if (counts[k]) canonical = false;
    }
    ++(canonical ? row.canonical : row.noncanonical);
  }
  return row;
}

std::uint64_t count_canonical_by_isolated_features(int degree, int ceiling) {
  check_degree(degree, ceiling);
  std::uint64_t canonical = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << degree); ++v) {
    const auto features = isolated_features(SignPattern::from_bits(v << 1, degree + 1));
    if (features.changes.empty() && features.preservations.empty()) ++canonical;
  }
  return canonical;
}

bool TheoremReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const PatternOutcome& o) { return o.passed; });
}

TheoremReport verify_theorem_small(int degree, std::uint64_t budget,
                                   std::uint64_t seed) {
  check_degree(degree, 16);
  TheoremReport report;
  report.degree = degree;
  for (const SignPattern& pattern : all_patterns(degree)) {
    PatternOutcome outcome;
    outcome.pattern = pattern;
    outcome.canonical = is_canonical(pattern);
    if (degree == 0) {
      outcome.passed = true;
      report.outcomes.push_back(std::move(outcome));
      continue;
    }
    const ModuliOrder canonical = canonical_order(pattern);
    const SignCounts counts = sign_counts(pattern);
    for (const ModuliOrder& order : enumerate_orders(counts.changes, counts.preservations)) {
      if (order == canonical) continue;
      WitnessOutcome found = search_witness({pattern, order, budget, seed});
      outcome.samples_used += found.samples_used;
      if (found.witness) {
        outcome.noncanonical_witnesses.push_back({order, std::move(*found.witness)});
        if (!outcome.canonical) break;
      }
    }
    outcome.passed = outcome.canonical == outcome.noncanonical_witnesses.empty();
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

std::vector<SignPattern> canonical_family(int degree) {
  std::vector<SignPattern> out;
  if (degree < 0 || degree >= SignPattern::kMaxLength) return out;
  std::string prefix;
  family_members(degree + 1, false, prefix, out);
  return out;
}

bool canonical_family_check(int degree) {
  const auto family = canonical_family(degree);
  return std::all_of(family.begin(), family.end(),
                     [](const SignPattern& p) { return is_canonical(p); });
}

}  // namespace signpat
