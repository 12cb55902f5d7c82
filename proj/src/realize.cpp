#include "signpat/realize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signpat/error.hpp"

namespace signpat {

namespace {

constexpr int kMantissaBits = 24;
constexpr int kMaxPerturbations = 8;

double round_mantissa(double x) {
  int exp = 0;
  const double frac = std::frexp(x, &exp);
  return std::ldexp(std::nearbyint(std::ldexp(frac, kMantissaBits)),
                    exp - kMantissaBits);
}

std::uint64_t stream_seed(std::uint64_t seed, const SignPattern& pattern,
                          const ModuliOrder& order) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(pattern.minus_bits()),
                    static_cast<std::uint32_t>(pattern.minus_bits() >> 32),
                    static_cast<std::uint32_t>(pattern.size()),
                    static_cast<std::uint32_t>(order.positive_bits()),
                    static_cast<std::uint32_t>(order.positive_bits() >> 32),
                    static_cast<std::uint32_t>(order.size())};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// Exact check of a candidate. Nullopt when some coefficient vanishes.
std::optional<bool> exact_match(const RootSet& roots, const SignPattern& pattern,
                                const ModuliOrder& order) {
  try {
    return pattern_of_poly(poly_from_roots(roots)) == pattern &&
           moduli_order_of_roots(roots) == order;
  } catch (const Error& e) {
    if (e.code() == Errc::ZeroCoefficient) return std::nullopt;
    throw;
  }
}

}  // namespace

RootSet to_root_set(const std::vector<double>& roots) {
  std::vector<Rational> exact;
  exact.reserve(roots.size());
  for (double r : roots) exact.emplace_back(r);
  return RootSet(std::move(exact));
}

RootSampler::RootSampler(const ModuliOrder& order, std::uint64_t seed)
    : order_(order), rng_(seed), moduli_(order.size()), roots_(order.size()) {}

const std::vector<double>& RootSampler::next() {
  static constexpr double kGridRatios[] = {1.5, 2.0, 4.0, 10.0};
  const int d = order_.size();
  if (draws_ < std::size(kGridRatios)) {
    double m = 1.0;
    for (int i = 0; i < d; ++i) {
      m *= kGridRatios[draws_];
      moduli_[i] = m;
    }
  } else {
    draw_random_moduli();
  }
  ++draws_;
  assign_signs();
  return roots_;
}

void RootSampler::draw_random_moduli() {
  const int d = order_.size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return std::exp(std::log(lo) + unit(rng_) * (std::log(hi) - std::log(lo)));
  };
  for (;;) {
    const int mode = static_cast<int>(rng_() % 3);
    const double scale = log_uniform(1e-4, 3.0);
    double t = -3.0 + 6.0 * unit(rng_);
    for (int i = 0; i < d; ++i) {
      moduli_[i] = round_mantissa(std::exp(t));
      double gap = 0.0;
      switch (mode) {
        case 0: gap = log_uniform(1e-4, 3.0); break;
        case 1: gap = scale * (0.05 + 0.95 * unit(rng_)); break;
        default:
          gap = unit(rng_) < 0.5 ? log_uniform(1e-5, 1e-1) : log_uniform(0.1, 3.0);
          break;
      }
      t += gap;
    }
    if (std::adjacent_find(moduli_.begin(), moduli_.end(),
                           std::greater_equal<>()) == moduli_.end()) {
      return;
    }
  }
}

const std::vector<double>& RootSampler::perturb() {
  const int d = order_.size();
  if (d == 0) return roots_;
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (;;) {
    const int i = pick(rng_);
    const double step = std::ldexp(1.0, -12) * (rng_() % 2 ? 1.0 : -1.0);
    const double moved = round_mantissa(moduli_[i] * (1.0 + step));
    const bool above_prev = i == 0 || moved > moduli_[i - 1];
    const bool below_next = i == d - 1 || moved < moduli_[i + 1];
    if (moved > 0 && moved != moduli_[i] && above_prev && below_next) {
      moduli_[i] = moved;
      break;
    }
  }
  assign_signs();
  return roots_;
}

void RootSampler::assign_signs() {
  for (int i = 0; i < order_.size(); ++i) {
    roots_[i] = order_[i] == Letter::P ? moduli_[i] : -moduli_[i];
  }
}

bool may_match(const std::vector<double>& roots, const SignPattern& target) {
  const int n = static_cast<int>(roots.size());
  if (target.degree() != n) return false;
  // c: coefficients of prod (x - r); b: of prod (x + |r|), which bounds the
  // accumulated rounding error of every c[k].
  double c[SignPattern::kMaxLength + 1] = {1.0};
  double b[SignPattern::kMaxLength + 1] = {1.0};
  for (int j = 0; j < n; ++j) {
    const double r = roots[j];
    const double a = std::fabs(r);
    c[j + 1] = c[j];
    b[j + 1] = b[j];
    for (int k = j; k > 0; --k) {
      c[k] = c[k - 1] - r * c[k];
      b[k] = b[k - 1] + a * b[k];
    }
    c[0] = -r * c[0];
    b[0] = a * b[0];
  }
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  const double steps = 2.0 * n + 2.0;
  const double gamma = 2.0 * steps * u / (1.0 - steps * u);
  for (int k = 0; k <= n; ++k) {
    if (!std::isfinite(c[k]) || !std::isfinite(b[k])) return true;
    if (std::fabs(c[k]) <= gamma * b[k]) continue;
    const Sign computed = c[k] > 0 ? Sign::Plus : Sign::Minus;
    if (computed != target.coefficient_sign(k)) return false;
  }
  return true;
}

RootSet realize_canonical(const SignPattern& pattern, const Rational& ratio) {
  if (ratio <= 1) throw Error(Errc::InvalidRatio, "ratio must exceed 1");
  const int d = pattern.degree();
  if (d == 0) return RootSet{};
  const ModuliOrder order = canonical_order(pattern);
  const Rational cap = Rational(1 << 20);
  for (Rational q = ratio; q <= cap; q *= 2) {
    std::vector<Rational> roots;
    Rational m = 1;
    for (int k = 0; k < d; ++k) {
      m *= q;
      roots.push_back(order[k] == Letter::P ? m : Rational(-m));
    }
    RootSet set(std::move(roots));
    if (exact_match(set, pattern, order).value_or(false)) return set;
  }
  throw Error(Errc::RatioCapExceeded,
              "no canonical realization of " + pattern.str() + " up to ratio 2^20");
}

std::vector<ModuliOrder> enumerate_orders(int changes, int preservations) {
  std::vector<ModuliOrder> out;
  if (changes < 0 || preservations < 0) return out;
  const int d = changes + preservations;
  if (d > ModuliOrder::kMaxLength) {
    throw Error(Errc::DegreeTooLarge, "order length above 64");
  }
  // Letters as a string of N/P, stepped through in lexicographic order.
  std::string letters(preservations, 'N');
  letters.append(changes, 'P');
  do {
    out.push_back(parse_order(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

WitnessOutcome search_witness(const WitnessRequest& request) {
  const SignCounts counts = sign_counts(request.pattern);
  const ModuliOrder& order = request.order;
  if (order.size() != request.pattern.degree() || order.count_p() != counts.changes ||
      order.count_n() != counts.preservations) {
    throw Error(Errc::IncompatibleCounts,
                "order " + order.str() + " is not Descartes-compatible with " +
                    request.pattern.str());
  }
  WitnessOutcome outcome;
  RootSampler sampler(order, stream_seed(request.seed, request.pattern, order));
  for (std::uint64_t i = 0; i < request.budget; ++i) {
    const std::vector<double>* roots = &sampler.next();
    ++outcome.samples_used;
    for (int attempt = 0; attempt <= kMaxPerturbations; ++attempt) {
      if (!may_match(*roots, request.pattern)) break;
      RootSet candidate = to_root_set(*roots);
      const auto verdict = exact_match(candidate, request.pattern, order);
      if (verdict.has_value()) {
        if (*verdict) outcome.witness = std::move(candidate);
        break;
      }
      roots = &sampler.perturb();
    }
    if (outcome.witness) break;
  }
  return outcome;
}

std::optional<RootSet> witness_search(const WitnessRequest& request) {
  return search_witness(request).witness;
}

SearchReport realizable_orders(const SignPattern& pattern, std::uint64_t budget,
                               std::uint64_t seed) {
  SearchReport report;
  report.pattern = pattern;
  report.canonical = canonical_order(pattern);
  report.orders.push_back({report.canonical, realize_canonical(pattern)});
  const SignCounts counts = sign_counts(pattern);
  for (const ModuliOrder& order : enumerate_orders(counts.changes, counts.preservations)) {
    if (order == report.canonical) continue;
    WitnessOutcome found = search_witness({pattern, order, budget, seed});
    report.samples_used += found.samples_used;
    if (found.witness) report.orders.push_back({order, std::move(*found.witness)});
  }
  std::sort(report.orders.begin(), report.orders.end(),
            [](const FoundOrder& a, const FoundOrder& b) { return a.order < b.order; });
  return report;
}

}  // namespace signpat
