#include <doctest.h>

#include <algorithm>
#include <random>

#include "simplegames/errors.hpp"
#include "simplegames/hierarchical.hpp"
#include "support/oracles.hpp"

using namespace simplegames;

namespace {

// Random conjunctive specs that pass both the structural and partiteness
// checks. Dummies appear when the last two thresholds coincide.
HierarchicalSpec random_conjunctive(std::mt19937_64& rng, int max_players) {
  while (true) {
    const int m = 2 + static_cast<int>(rng() % 3);
    HierarchicalSpec spec{HierarchyKind::Conjunctive, {}, {}};
    int total = 0, k = 0;
    for (int i = 0; i < m; ++i) {
      const int n = 1 + static_cast<int>(rng() % 4);
      total += n;
      k += static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      spec.sizes.push_back(n);
      spec.thresholds.push_back(std::max(k, 1));
    }
    if (total > max_players) continue;
    try {
      if (validate_partiteness(spec).true_m_partite) return spec;
    } catch (const InvalidInput&) {
    }
  }
}

HierarchicalSpec random_disjunctive(std::mt19937_64& rng, int max_players) {
  while (true) {
    const int m = 1 + static_cast<int>(rng() % 3);
    HierarchicalSpec spec{HierarchyKind::Disjunctive, {}, {}};
    int total = 0, k = 0;
    for (int i = 0; i < m; ++i) {
      const int n = 1 + static_cast<int>(rng() % 4);
      total += n;
      k += 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      spec.sizes.push_back(n);
      spec.thresholds.push_back(k);
    }
    if (total > max_players) continue;
    if (validate_partiteness(spec).true_m_partite) return spec;
  }
}

bool is_veto(const SimpleGame& g, int p) {
  for (Coalition w : g.min_winning())
    if (!w.contains(p)) return false;
  return true;
}

bool is_dummy(const SimpleGame& g, int p) {
  for (Coalition w : g.min_winning())
    if (w.contains(p)) return false;
  return true;
}

std::vector<Model> sorted(std::vector<Model> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("build: examples") {
  const HierarchicalSpec disj{HierarchyKind::Disjunctive, {2, 5}, {2, 5}};
  const SimpleGame h = build(disj);
  CHECK(sorted(minimal_winning_models(h, disj.partition())) == std::vector<Model>{{0, 5}, {1, 4}, {2, 0}});

  const HierarchicalSpec conj{HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}};
  CHECK(sorted(shift_maximal_losing(build(conj), conj.partition())) == std::vector<Model>{{1, 4, 4}, {3, 0, 4}, {4, 2, 0}});

  const SimpleGame dictator = build({HierarchyKind::Disjunctive, {1}, {1}});
  CHECK(dictator.min_winning() == std::vector<Coalition>{Coalition::of({0})});

  CHECK_THROWS_AS(build({HierarchyKind::Disjunctive, {2, 2}, {2, 2}}), InvalidInput);
  CHECK_THROWS_AS(build({HierarchyKind::Conjunctive, {2, 2, 2}, {2, 2, 3}}), InvalidInput);
  CHECK_THROWS_AS(build({HierarchyKind::Conjunctive, {2, 0}, {1, 2}}), InvalidInput);
  CHECK_NOTHROW(build({HierarchyKind::Conjunctive, {2, 2}, {2, 2}}));
}

TEST_CASE("property: build agrees with the winning predicate") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const HierarchicalSpec spec = round % 2 ? random_conjunctive(rng, 10) : random_disjunctive(rng, 10);
    const SimpleGame g = build(spec);
    const auto table = winning_table(g);
    for (std::uint64_t x = 0; x < table.size(); ++x) CHECK(table[x] == hierarchical_wins(spec, Coalition(x)));
    CHECK(is_complete(g));
    CHECK(equivalence_classes(g) == spec.partition());
  }
}

TEST_CASE("validate_partiteness") {
  CHECK(validate_partiteness({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}}).true_m_partite);
  const auto boundary = validate_partiteness({HierarchyKind::Conjunctive, {2, 1}, {2, 3}});
  CHECK_FALSE(boundary.true_m_partite);
  CHECK(boundary.violations.size() == 1);
  const auto big_k1 = validate_partiteness({HierarchyKind::Conjunctive, {3, 2}, {4, 5}});
  CHECK_FALSE(big_k1.true_m_partite);
  CHECK(big_k1.violations.size() == 1);
}

TEST_CASE("property: partiteness criterion matches the class count") {
  std::mt19937_64 rng(17);
  int agree_true = 0, agree_false = 0;
  for (int round = 0; round < 200; ++round) {
    const int m = 2 + static_cast<int>(rng() % 2);
    HierarchicalSpec spec{HierarchyKind::Conjunctive, {}, {}};
    int k = 0;
    for (int i = 0; i < m; ++i) {
      spec.sizes.push_back(1 + static_cast<int>(rng() % 3));
      k += 1 + static_cast<int>(rng() % 3);
      spec.thresholds.push_back(k);
    }
    if (spec.player_count() < spec.thresholds.back()) continue;  // nothing wins
    const bool claimed = validate_partiteness(spec).true_m_partite;
    const bool actual = equivalence_classes(build(spec)) == spec.partition();
    CHECK(claimed == actual);
    (claimed ? agree_true : agree_false)++;
  }
  CHECK(agree_true > 10);
  CHECK(agree_false > 10);
}

TEST_CASE("property: consequences of partiteness") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    const HierarchicalSpec spec = random_conjunctive(rng, 16);
    int prefix = 0;
    const std::size_t m = spec.sizes.size();
    for (std::size_t i = 0; i < m; ++i) {
      prefix += spec.sizes[i];
      CHECK(spec.thresholds[i] <= prefix - static_cast<int>(i));
      if (i > 0 && i + 1 < m) CHECK(spec.sizes[i] > 1);
    }
  }
}

TEST_CASE("veto and dummy players") {
  const HierarchicalSpec plain{HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}};
  CHECK(veto_players(plain).empty());
  CHECK(dummy_players(plain).empty());

  const HierarchicalSpec veto{HierarchyKind::Conjunctive, {2, 3}, {2, 4}};
  CHECK(veto_players(veto) == Coalition::of({0, 1}));
  CHECK(dummy_players(veto).empty());

  const HierarchicalSpec dummies{HierarchyKind::Conjunctive, {3, 2, 4}, {2, 4, 4}};
  CHECK(veto_players(dummies).empty());
  CHECK(dummy_players(dummies) == Coalition::of({5, 6, 7, 8}));

  CHECK_THROWS_AS(veto_players({HierarchyKind::Disjunctive, {2, 3}, {2, 4}}), PreconditionError);
}

TEST_CASE("property: veto and dummy classes match the game") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    const HierarchicalSpec spec = random_conjunctive(rng, 12);
    const SimpleGame g = build(spec);
    const Coalition v = veto_players(spec), d = dummy_players(spec);
    for (int p = 0; p < g.player_count(); ++p) {
      CHECK(v.contains(p) == is_veto(g, p));
      CHECK(d.contains(p) == is_dummy(g, p));
    }
  }
}

TEST_CASE("reduce") {
  const HierarchicalSpec spec{HierarchyKind::Conjunctive, {2, 3, 4, 2}, {2, 3, 5, 5}};
  const HierarchicalSpec r = reduce(spec);
  CHECK(r.sizes == std::vector<int>{3, 4});
  CHECK(r.thresholds == std::vector<int>{1, 3});
  CHECK(r.sizes[0] > r.thresholds[0]);
  CHECK(r.thresholds[0] < r.thresholds[1]);

  // the reduced game is the original with veto players present and dummies gone
  const SimpleGame g = build(spec), rg = build(r);
  const Coalition veto = veto_players(spec);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << 7); ++x) {
    const Coalition lifted(veto.bits() | (x << 2));
    CHECK(rg.is_winning(Coalition(x)) == g.is_winning(lifted));
  }
  CHECK_THROWS_AS(reduce({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}}), PreconditionError);
}

TEST_CASE("shiftmax_models_closed_form") {
  CHECK(shiftmax_models_closed_form({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}}) ==
        std::vector<Model>{{1, 4, 4}, {3, 0, 4}, {4, 2, 0}});
  // k_2 = k_1 + n_2 here, so P_1 and P_2 merge and the game is bipartite:
  // the formula still lists M_1 and M_2, but M_1 is shift-dominated by M_2
  const HierarchicalSpec merged{HierarchyKind::Conjunctive, {3, 2, 4}, {2, 4, 4}};
  CHECK(shiftmax_models_closed_form(merged) == std::vector<Model>{{1, 2, 4}, {3, 0, 4}});
  CHECK(sorted(shift_maximal_losing(build(merged), merged.partition())) == std::vector<Model>{{3, 0, 4}});

  const HierarchicalSpec dummies{HierarchyKind::Conjunctive, {3, 3, 4}, {2, 4, 4}};
  REQUIRE(validate_partiteness(dummies).true_m_partite);
  const auto models = shiftmax_models_closed_form(dummies);
  CHECK(models == std::vector<Model>{{1, 3, 4}, {3, 0, 4}});
  CHECK(models == sorted(shift_maximal_losing(build(dummies), dummies.partition())));
}

TEST_CASE("property: closed-form shift-maximal models match brute force") {
  std::mt19937_64 rng(41);
  int with_dummies = 0;
  for (int round = 0; round < 30; ++round) {
    HierarchicalSpec spec = random_conjunctive(rng, 12);
    if (round % 3 == 0 && spec.sizes.size() >= 2 && spec.thresholds[spec.sizes.size() - 2] < spec.thresholds.back())
      spec.thresholds.back() = spec.thresholds[spec.sizes.size() - 2];
    if (!validate_partiteness(spec).true_m_partite) continue;
    if (!dummy_players(spec).empty()) ++with_dummies;
    const SimpleGame g = build(spec);
    CHECK(shiftmax_models_closed_form(spec) ==
          sorted(testing::brute_shift_maximal_models(g, spec.partition())));
  }
  CHECK(with_dummies > 3);
}

TEST_CASE("property: duals of hierarchical games swap kinds") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 30; ++round) {
    const bool disjunctive = round % 2 == 0;
    const HierarchicalSpec spec = disjunctive ? random_disjunctive(rng, 12) : random_conjunctive(rng, 12);
    const SimpleGame d = dual(build(spec));
    const auto other = disjunctive ? HierarchyKind::Conjunctive : HierarchyKind::Disjunctive;
    const auto extracted = extract_hierarchical(d, other);
    REQUIRE(extracted);
    CHECK(build(*extracted).min_winning() == d.min_winning());
  }
  const auto conj = extract_hierarchical(dual(build({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}})),
                                         HierarchyKind::Disjunctive);
  CHECK(conj.has_value());
}

TEST_CASE("os3_witness_set") {
  const auto prop5 = os3_witness_set(2, 2);
  CHECK(prop5.spec.sizes == std::vector<int>{2, 4});
  CHECK(prop5.spec.thresholds == std::vector<int>{2, 4});
  CHECK(prop5.witnesses == std::vector<Coalition>{Coalition::of({0, 2, 3}), Coalition::of({1, 4, 5})});

  for (int k = 2; k <= 3; ++k)
    for (int m = 2; m <= 3; ++m) {
      const auto w = os3_witness_set(k, m);
      std::size_t expected = 1;
      for (int t = 1; t < m; ++t) expected *= static_cast<std::size_t>(k);
      CHECK(w.witnesses.size() == expected);
      CHECK(w.game.player_count() == k + 2 * k * (m - 1));
      for (Coalition y : w.witnesses) CHECK_FALSE(w.game.is_winning(y));
    }
  CHECK_THROWS_AS(os3_witness_set(1, 3), InvalidInput);
  CHECK_THROWS_AS(os3_witness_set(4, 9), InvalidInput);
}

TEST_CASE("os3 maximal losing counts") {
  // Coalitions whose model is shift-maximal losing number k (k(2k-1))^(m-1);
  // the full maximal losing family is larger.
  for (auto [k, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto w = os3_witness_set(k, m);
    const ClassPartition part = w.spec.partition();
    const auto shiftmax = shift_maximal_losing(w.game, part);
    std::size_t with_model = 0;
    for (Coalition l : maximal_losing(w.game))
      if (std::find(shiftmax.begin(), shiftmax.end(), model_of(part, l)) != shiftmax.end()) ++with_model;
    std::size_t expected = static_cast<std::size_t>(k);
    for (int t = 1; t < m; ++t) expected *= static_cast<std::size_t>(k * (2 * k - 1));
    CHECK(with_model == expected);
  }
  CHECK(maximal_losing(os3_witness_set(2, 3).game).size() == 158);
}

TEST_CASE("build_delta1") {
  const SimpleGame a = build_delta1({2, 2, 2}, {1, 2, 3});
  CHECK(a.is_winning(Coalition::of({0})));
  const SimpleGame b = build_delta1({2, 2, 2}, {2, 2, 3});
  CHECK_FALSE(b.is_winning(Coalition::of({2})));
  CHECK_FALSE(b.is_winning(Coalition::of({2, 3})));
  CHECK(b.is_winning(Coalition::of({0, 2, 4})));
  CHECK(b.is_winning(Coalition::of({0, 1})));
  CHECK_THROWS_AS(build_delta1({2, 2, 2}, {3, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(build_delta1({2, 2}, {1, 2}), InvalidInput);

  const SimpleGame c = build_delta1({2, 3, 3}, {2, 3, 5});
  for (std::uint64_t x = 0; x < 256; ++x) {
    const Coalition s(x);
    const int c1 = (s & Coalition::all(2)).size();
    const int c2 = (s & Coalition(0b11100)).size();
    const int c3 = (s & Coalition(0b11100000)).size();
    CHECK(c.is_winning(s) == (c1 >= 2 || (c1 + c2 >= 3 && c1 + c2 + c3 >= 5)));
  }
}
