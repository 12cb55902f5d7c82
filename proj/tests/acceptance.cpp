// One line per acceptance criterion; exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "signpat/adjacency.hpp"
#include "signpat/census.hpp"
#include "signpat/error.hpp"
#include "signpat/realize.hpp"

using namespace signpat;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::string> names(const std::vector<SignPattern>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.str());
  return out;
}

Verdict example_d5() {
  Verdict v;
  const SignPattern source = parse_pattern("++++");
  const auto start = Clock::now();
  const auto s = expand_S(symbolic_lift(source));
  const auto t = filter_T(s, source);
  const double elapsed = seconds_since(start);
  const auto s_names = names(s);
  const auto t_names = names(t);
  if (s_names != std::set<std::string>{"++++--", "+++---", "++-+--", "++----"})
    v.fail("S differs");
  if (t_names != std::set<std::string>{"++++--", "+++---", "++----"}) v.fail("T differs");
  std::set<std::string> rest;
  std::set_difference(s_names.begin(), s_names.end(), t_names.begin(), t_names.end(),
                      std::inserter(rest, rest.end()));
  // (+,+,-,+,-,-) is the only member of (+,+,*,*,-,-) with three changes.
  if (rest != std::set<std::string>{"++-+--"}) v.fail("S minus T differs");
  if (elapsed >= 1e-3) v.fail("took " + std::to_string(elapsed * 1e3) + " ms");
  v.detail = v.ok ? "elapsed " + std::to_string(elapsed * 1e6) + " us" : v.detail;
  return v;
}

Verdict example_d6() {
  Verdict v;
  // (b, r, g) signs appended to (+,+) give the source; expected lifts.
  const std::pair<const char*, const char*> cases[] = {
      {"++-++", "++-*+--"}, {"++-+-", "++-**-+"}, {"++--+", "++--++-"},
      {"++---", "++--*++"}, {"+++-+", "++*-*+-"}, {"+++--", "++*--++"},
      {"++++-", "++**--+"},
  };
  for (const auto& [src, lift] : cases) {
    const std::string got = symbolic_lift(parse_pattern(src)).compact();
    if (got != lift) v.fail(std::string(src) + " lifts to " + got);
  }
  const SignPattern case7 = parse_pattern("++++-");
  const auto s7 = names(expand_S(symbolic_lift(case7)));
  const auto t7 = names(filter_T(expand_S(symbolic_lift(case7)), case7));
  if (!s7.contains("++-+--+")) v.fail("case 7 resolution missing from S");
  if (t7.contains("++-+--+")) v.fail("case 7 resolution kept in T");
  return v;
}

Verdict proposition() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t sources = 0;
  std::string violations;
  for (int d = 3; d <= 14; ++d) {
    const auto reports = verify_proposition(d);
    sources += reports.size();
    const auto bad = std::count_if(reports.begin(), reports.end(),
                                   [](const STReport& r) { return !r.holds(); });
    if (bad) {
      violations += (violations.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(bad);
      v.ok = false;
    }
  }
  const double elapsed = seconds_since(start);
  const std::string timing = std::to_string(sources) + " sources, " + std::to_string(elapsed) + " s";
  if (!violations.empty()) v.detail = "violating sources per d " + violations + "; " + timing;
  if (elapsed >= 60) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.ok) v.detail = timing;
  return v;
}

Verdict theorem() {
  Verdict v;
  std::size_t noncanonical = 0;
  for (int d = 2; d <= 6; ++d) {
    const TheoremReport report = verify_theorem_small(d, 100000, 42);
    for (const auto& o : report.outcomes) {
      if (!o.passed) v.fail(o.pattern.str() + " failed");
      if (o.canonical) continue;
      ++noncanonical;
      for (const auto& w : o.noncanonical_witnesses) {
        if (pattern_of_poly(poly_from_roots(w.witness)) != o.pattern ||
            moduli_order_of_roots(w.witness) != w.order ||
            w.order == canonical_order(o.pattern)) {
          v.fail(o.pattern.str() + " has a bad witness");
        }
      }
    }
  }
  if (v.ok) v.detail = std::to_string(noncanonical) + " non-canonical patterns witnessed";
  return v;
}

Verdict classifiers_agree() {
  Verdict v;
  const auto start = Clock::now();
  for (int d = 0; d <= 16; ++d) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      const SignPattern p = SignPattern::from_bits(bits << 1, d + 1);
      const auto f = isolated_features(p);
      const bool by_features = f.changes.empty() && f.preservations.empty();
      if (by_features != is_canonical(p)) v.fail("disagree on " + p.str());
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.ok) v.detail = std::to_string(elapsed) + " s";
  return v;
}

Verdict descartes() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<Rational> roots;
      std::vector<Rational> moduli;
      while (static_cast<int>(roots.size()) < n) {
        Rational m(static_cast<long>(1 + rng() % 1000), static_cast<long>(1 + rng() % 30));
        m.canonicalize();
        if (std::find(moduli.begin(), moduli.end(), m) != moduli.end()) continue;
        moduli.push_back(m);
        roots.push_back(rng() % 2 ? m : Rational(-m));
      }
      const int pos = static_cast<int>(
          std::count_if(roots.begin(), roots.end(), [](const Rational& x) { return x > 0; }));
      try {
        const SignCounts c = sign_counts(pattern_of_poly(poly_from_roots(RootSet(roots))));
        if (c.changes != pos || c.preservations != n - pos)
          v.fail("mismatch at degree " + std::to_string(n));
        ++checked;
      } catch (const Error& e) {
        if (e.code() != Errc::ZeroCoefficient) throw;
        ++skipped;
      }
    }
  }
  if (v.ok)
    v.detail = std::to_string(checked) + " checked, " + std::to_string(skipped) + " skipped";
  return v;
}

Verdict rigidity() {
  Verdict v;
  std::size_t sampled = 0;
  auto sample = [&](const ModuliOrder& order, const SignPattern& expected) {
    RootSampler sampler(order, 42);
    for (int i = 0; i < 10000; ++i) {
      try {
        const SignPattern got = pattern_of_poly(poly_from_roots(to_root_set(sampler.next())));
        if (got != expected) v.fail(order.str() + " produced " + got.str());
        ++sampled;
      } catch (const Error& e) {
        if (e.code() != Errc::ZeroCoefficient) throw;
      }
    }
  };
  for (int d = 3; d <= 5; ++d) {
    for (const std::string& letters :
         {std::string("NP"), std::string("PN"), std::string("NN"), std::string("PP")}) {
      std::string text;
      for (int i = 0; i < d; ++i) text += letters[i % 2];
      const ModuliOrder order = parse_order(text);
      const RigidVerdict verdict = classify_rigid(order);
      if (!verdict.rigid || !verdict.pattern) {
        v.fail(text + " not rigid");
        continue;
      }
      if (letters[0] == letters[1]) {
        std::string expected = "+";
        for (int i = 1; i <= d; ++i) expected += letters[0] == 'N' || i % 2 == 0 ? '+' : '-';
        if (verdict.pattern->str() != expected) v.fail(text + " constant pattern differs");
      }
      sample(order, *verdict.pattern);
    }
  }
  if (v.ok) v.detail = std::to_string(sampled) + " samples";
  return v;
}

Verdict census_points() {
  Verdict v;
  const CensusRow r3 = census(3);
  const CensusRow r4 = census(4);
  if (r3.total != 8 || r3.canonical != 6) v.fail("census(3) differs");
  if (r4.total != 16 || r4.canonical != 10) v.fail("census(4) differs");
  if (count_canonical_by_isolated_features(3) != 6) v.fail("feature count at 3 differs");
  if (count_canonical_by_isolated_features(4) != 10) v.fail("feature count at 4 differs");
  for (int d = 3; d <= 20; ++d) {
    if (!canonical_family_check(d)) v.fail("family check at d=" + std::to_string(d));
  }
  return v;
}

}  // namespace

// With an argument k in 1..8, runs only criterion k.
int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"d=5 lift sets S and T", example_d5},
      {"d=6 lift cases and case 7 exclusion", example_d6},
      {"configuration in every T member, 3<=d<=14", proposition},
      {"non-canonical witnesses, 2<=d<=6", theorem},
      {"two classifiers agree, d<=16", classifiers_agree},
      {"sign counts match root signs, degrees 2..8", descartes},
      {"rigid orders yield one pattern, d=3..5", rigidity},
      {"census fixed points and canonical family", census_points},
  };
  if (only < 0 || only > static_cast<int>(std::size(criteria))) {
    std::fprintf(stderr, "usage: acceptance [1-%zu]\n", std::size(criteria));
    return 1;
  }
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    if (only && ++index != only) continue;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s%s%s\n", v.ok ? "PASS" : "FAIL", name, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
