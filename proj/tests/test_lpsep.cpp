#include <doctest.h>

#include <algorithm>
#include <random>

#include "simplegames/certificates.hpp"
#include "simplegames/hierarchical.hpp"
#include "simplegames/lpsep.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace simplegames;

namespace {

WeightedRep rep(std::vector<Rational> w, Rational q) { return {std::move(w), std::move(q)}; }

SimpleGame un_council() {
  return game_from_predicate(15, [](Coalition x) { return (x.bits() & 0x1F) == 0x1F && x.size() >= 9; });
}

}  // namespace

TEST_CASE("UN council and majority representations") {
  const SimpleGame un = un_council();
  std::vector<Rational> w(15, Rational(1));
  for (int i = 0; i < 5; ++i) w[static_cast<std::size_t>(i)] = 7;
  CHECK(verify_representation(un, rep(w, 39)));
  const auto found = is_weighted(un);
  REQUIRE(found);
  CHECK(verify_representation(un, *found));
  const auto sep = separable(15, un.min_winning(), maximal_losing(un));
  REQUIRE(sep);
  CHECK(verify_representation(un, *sep));

  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  CHECK(verify_representation(maj, rep({1, 1, 1, 1, 1}, 3)));
  CHECK_FALSE(verify_representation(maj, rep({1, 1, 1, 1, 0}, 3)));
  CHECK(is_weighted(maj));
  CHECK(weighted_game(rep({1, 1, 1, 1, 1}, 3)) == maj);
}

TEST_CASE("hierarchical examples") {
  const SimpleGame h24 = build({HierarchyKind::Disjunctive, {2, 4}, {2, 4}});
  CHECK_FALSE(is_weighted(h24));
  const auto rough = is_roughly_weighted(h24);
  REQUIRE(rough);
  CHECK(verify_representation(h24, *rough));
  CHECK(is_weighted(build({HierarchyKind::Disjunctive, {2, 3}, {2, 3}})));
  // Y_0 = {a_0, b_0, b_1}, Y_1 = {a_1, b_2, b_3}
  const Coalition ys[] = {Coalition::of({0, 2, 3}), Coalition::of({1, 4, 5})};
  CHECK_FALSE(separable(6, h24.min_winning(), ys));
}

TEST_CASE("a conjunctive game that is not roughly weighted") {
  const SimpleGame g = build({HierarchyKind::Conjunctive, {2, 5}, {1, 3}});
  CHECK_FALSE(testing::class_vertex_roughly_weighted(g));
  CHECK_FALSE(is_roughly_weighted(g));
}

TEST_CASE("separable edge cases") {
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  const auto any = separable(5, maj.min_winning(), {});
  REQUIRE(any);
  for (Coalition x : maj.min_winning()) CHECK(any->wins(x));
  // the empty coalition must win: only the all-winning game works
  const Coalition empty[] = {Coalition{}};
  const Coalition loser[] = {Coalition::of({0})};
  CHECK_FALSE(separable(3, empty, loser));
  CHECK(separable(3, empty, {}));
  // nothing has to win: the all-losing game separates anything
  const Coalition everyone[] = {Coalition::all(3)};
  CHECK(separable(3, {}, everyone));
}

TEST_CASE("rough representations must not be all zero") {
  const SimpleGame maj = game_from_predicate(3, [](Coalition x) { return x.size() >= 2; });
  CHECK_FALSE(verify_representation(maj, RoughRep{{0, 0, 0}, 0}));
  CHECK(verify_representation(maj, RoughRep{{1, 1, 1}, 2}));
}

TEST_CASE("exact arithmetic: 11/10 against 1") {
  // [5; 4, 11/10, 1, 1, 1]: {1,2,3,4} has weight 41/10 and must lose
  const WeightedRep r = rep({4, Rational(11, 10), 1, 1, 1}, 5);
  CHECK_FALSE(r.wins(Coalition::of({1, 2, 3, 4})));
  CHECK(r.wins(Coalition::of({0, 2})));
  CHECK(r.wins(Coalition::of({0, 1})));
  CHECK(to_string(Rational(11, 10)) == "11/10");
  CHECK(r.to_string() == "[5; 4,11/10,1,1,1]");
}

TEST_CASE("oracle: weightedness of every monotone game on n <= 5 players") {
  // Expected weighted counts (threshold functions of n variables): 2, 3, 6, 20, 150, 3287.
  const std::size_t expected[] = {2, 3, 6, 20, 150, 3287};
  for (int n = 0; n <= 5; ++n) {
    const auto tables = testing::threshold_tables(n, n <= 4 ? 16 : 12);
    CHECK(tables.size() == expected[n]);
    std::size_t weighted = 0;
    for (std::uint64_t t : testing::monotone_tables(n)) {
      const SimpleGame g = testing::game_from_table(n, t);
      const auto r = is_weighted(g);
      const bool in_tables = std::binary_search(tables.begin(), tables.end(), t);
      CHECK(r.has_value() == in_tables);
      if (r) {
        ++weighted;
        CHECK(verify_representation(g, *r));
      }
    }
    CHECK(weighted == expected[n]);
  }
}

TEST_CASE("property: rough weightedness agrees with the class-vertex oracle") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 80) {
    const int m = 1 + static_cast<int>(rng() % 3);
    HierarchicalSpec spec{rng() % 2 ? HierarchyKind::Disjunctive : HierarchyKind::Conjunctive, {}, {}};
    int k = 0;
    for (int i = 0; i < m; ++i) {
      spec.sizes.push_back(1 + static_cast<int>(rng() % 3));
      k += 1 + static_cast<int>(rng() % 3);
      spec.thresholds.push_back(k);
    }
    try {
      validate_structure(spec);
    } catch (const std::exception&) {
      continue;
    }
    ++checked;
    const SimpleGame g = build(spec);
    const auto rough = is_roughly_weighted(g);
    CHECK(rough.has_value() == testing::class_vertex_roughly_weighted(g));
    if (rough) CHECK(verify_representation(g, *rough));
  }
}

TEST_CASE("property: witnesses verify, scale, and separability is antitone") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SimpleGame g = testing::random_game(rng, n, 5);
    const auto r = is_weighted(g);
    if (r) {
      CHECK(verify_representation(g, *r));
      const Rational t(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 7));
      WeightedRep scaled = *r;
      for (Rational& w : scaled.weights) w *= t;
      scaled.quota *= t;
      CHECK(verify_representation(g, scaled));
    } else {
      // a non-weighted verdict is confirmed by a certificate
      const auto cert = find_certificate(g, 6);
      REQUIRE(cert.certificate);
      CHECK(verify_certificate(g, *cert.certificate));
    }
    const auto losing = maximal_losing(g);
    std::vector<Coalition> subset, superset;
    for (Coalition y : losing) {
      superset.push_back(y);
      if (rng() % 2) subset.push_back(y);
    }
    if (separable(n, g.min_winning(), superset)) CHECK(separable(n, g.min_winning(), subset));
    if (!separable(n, g.min_winning(), subset)) CHECK_FALSE(separable(n, g.min_winning(), superset));
  }
}
