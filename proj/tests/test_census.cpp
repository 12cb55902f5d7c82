#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "signpat/census.hpp"
#include "signpat/error.hpp"

using namespace signpat;

TEST_CASE("census fixed points") {
  CensusRow r = census(2);
  CHECK(r.total == 4);
  CHECK(r.canonical == 4);
  r = census(3);
  CHECK(r.total == 8);
  CHECK(r.canonical == 6);
  CHECK(r.noncanonical == 2);
  r = census(4);
  CHECK(r.total == 16);
  CHECK(r.canonical == 10);
  CHECK(census(0).total == 1);
  CHECK(census(0).canonical == 1);
}

TEST_CASE("census matches the literal window oracle") {
  for (int d = 0; d <= 14; ++d) {
    std::uint64_t canonical = 0;
    std::array<std::uint64_t, 4> windows{};
    for (const auto& s : oracle::patterns(d)) {
      const std::string hits = oracle::windows(s);
      if (hits.empty()) ++canonical;
      for (char c : hits) {
        if (c >= 'A' && c <= 'D') ++windows[c - 'A'];
      }
    }
    const CensusRow row = census(d);
    REQUIRE(row.canonical == canonical);
    REQUIRE(row.canonical + row.noncanonical == row.total);
    REQUIRE(row.windows == windows);
    REQUIRE(count_canonical_by_isolated_features(d) == canonical);
  }
}

TEST_CASE("census refuses degrees above the ceiling") {
  try {
    census(25);
    FAIL("expected DegreeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeTooLarge);
  }
  CHECK_THROWS_AS(census(10, 8), Error);
}

TEST_CASE("canonical family members") {
  auto has = [](int d, const char* p) {
    const auto family = canonical_family(d);
    return std::find(family.begin(), family.end(), parse_pattern(p)) != family.end();
  };
  CHECK(has(7, "+++-+++-"));
  CHECK(has(3, "+++-"));
  CHECK(has(6, "+++-+++"));
  CHECK(has(4, "+++++"));
  CHECK_FALSE(has(9, "+++-+++-+-"));
  CHECK_FALSE(has(5, "++-+++"));
  CHECK(canonical_family(2).empty() == false);  // (+,+,+)
  for (int d = 3; d <= 20; ++d) {
    for (const auto& p : canonical_family(d)) REQUIRE(p.degree() == d);
    CHECK(canonical_family_check(d));
  }
  // The family alone grows without bound.
  CHECK(canonical_family(20).size() > canonical_family(10).size());
}

TEST_CASE("verify_theorem_small at d = 2 and d = 3") {
  const TheoremReport d2 = verify_theorem_small(2);
  CHECK(d2.outcomes.size() == 4);
  CHECK(d2.passed());
  CHECK(std::all_of(d2.outcomes.begin(), d2.outcomes.end(),
                    [](const PatternOutcome& o) { return o.canonical; }));

  const TheoremReport d3 = verify_theorem_small(3, 100000, 42);
  CHECK(d3.outcomes.size() == 8);
  CHECK(d3.passed());
  int noncanonical = 0;
  for (const auto& o : d3.outcomes) {
    if (o.canonical) {
      CHECK(o.noncanonical_witnesses.empty());
      continue;
    }
    ++noncanonical;
    REQUIRE_FALSE(o.noncanonical_witnesses.empty());
    const auto& w = o.noncanonical_witnesses.front();
    CHECK(w.order != canonical_order(o.pattern));
    CHECK(pattern_of_poly(poly_from_roots(w.witness)) == o.pattern);
    CHECK(moduli_order_of_roots(w.witness) == w.order);
  }
  CHECK(noncanonical == 2);
}
