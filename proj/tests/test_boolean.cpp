#include <doctest.h>

#include <random>

#include "simplegames/boolean.hpp"
#include "simplegames/dimension.hpp"
#include "simplegames/errors.hpp"
#include "simplegames/hierarchical.hpp"
#include "support/corpus.hpp"

using namespace simplegames;

namespace {

WeightedRep rep_of(std::vector<Rational> weights, Rational quota) { return WeightedRep{std::move(weights), std::move(quota)}; }

BoolFormula leaf(std::vector<Rational> weights, Rational quota) { return BoolFormula::make_leaf(rep_of(std::move(weights), std::move(quota))); }

// G1 or (G2 and G3) with cumulative-count leaves for sizes n and thresholds k.
BoolFormula delta1_formula(const std::vector<int>& n, const std::vector<int>& k) {
  const int total = n[0] + n[1] + n[2];
  auto cumulative = [&](std::size_t classes, int quota) {
    std::vector<Rational> w(static_cast<std::size_t>(total), Rational(0));
    int upto = 0;
    for (std::size_t c = 0; c < classes; ++c) upto += n[c];
    for (int p = 0; p < upto; ++p) w[static_cast<std::size_t>(p)] = 1;
    return leaf(std::move(w), quota);
  };
  return BoolFormula::make_or({cumulative(1, k[0]), BoolFormula::make_and({cumulative(2, k[1]), cumulative(3, k[2])})});
}

BoolFormula random_formula(std::mt19937_64& rng, int n, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    std::vector<Rational> w;
    int total = 0;
    for (int p = 0; p < n; ++p) {
      const int v = static_cast<int>(rng() % 4);
      w.emplace_back(v);
      total += v;
    }
    return leaf(std::move(w), 1 + static_cast<int>(rng() % static_cast<unsigned>(total + 1)));
  }
  std::vector<BoolFormula> children;
  const int count = 2 + static_cast<int>(rng() % 2);
  for (int i = 0; i < count; ++i) children.push_back(random_formula(rng, n, depth - 1));
  return rng() % 2 ? BoolFormula::make_and(std::move(children)) : BoolFormula::make_or(std::move(children));
}

}  // namespace

TEST_CASE("eval_formula") {
  const BoolFormula maj = leaf({1, 1, 1, 1, 1}, 3);
  CHECK(eval_formula(maj, Coalition::of({0, 2, 4})));
  CHECK_FALSE(eval_formula(maj, Coalition::of({0, 2})));

  const BoolFormula d = delta1_formula({2, 2, 2}, {1, 2, 3});
  CHECK(eval_formula(d, Coalition::of({1})));
  const BoolFormula e = delta1_formula({2, 2, 2}, {2, 2, 3});
  CHECK_FALSE(eval_formula(e, Coalition::of({0, 2})));
  CHECK(eval_formula(e, Coalition::of({0, 2, 4})));
}

TEST_CASE("formula_game") {
  for (auto [n, k] : {std::pair{std::vector<int>{2, 2, 2}, std::vector<int>{1, 2, 3}},
                      std::pair{std::vector<int>{2, 3, 3}, std::vector<int>{2, 3, 5}},
                      std::pair{std::vector<int>{3, 2, 4}, std::vector<int>{2, 3, 6}}}) {
    const BoolFormula f = delta1_formula(n, k);
    const int total = n[0] + n[1] + n[2];
    CHECK(formula_game(f, total) == build_delta1(n, k));
    CHECK(verify_boolean_rep(build_delta1(n, k), f));
    CHECK(formula_size(f) == 3);
  }

  const HierarchicalSpec conj{HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}};
  std::vector<BoolFormula> parts;
  for (const WeightedRep& p : conjunctive_intersection_rep(conj).parts) parts.push_back(BoolFormula::make_leaf(p));
  const BoolFormula all = BoolFormula::make_and(parts);
  CHECK(formula_game(all, 12) == build(conj));
  CHECK(formula_size(all) == 3);

  const BoolFormula single = leaf({2, 1, 1}, 2);
  CHECK(formula_game(BoolFormula::make_or({single}), 3) == weighted_game(single.leaf));
  CHECK(formula_size(single) == 1);

  CHECK_THROWS_AS(formula_player_count(BoolFormula::make_and({leaf({1, 1}, 1), leaf({1, 1, 1}, 1)})), InvalidInput);
  CHECK_THROWS_AS(formula_player_count(BoolFormula::make_or({})), InvalidInput);
}

TEST_CASE("verify_boolean_rep") {
  const SimpleGame h = build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}});
  std::vector<BoolFormula> parts;
  for (std::uint64_t x = 0; x < 32; ++x) {
    if (std::popcount(x) != 3) continue;
    std::vector<Rational> w{3, 3, 0, 0, 0, 0, 0};
    for (int i = 0; i < 5; ++i)
      if ((x >> i) & 1U) w[static_cast<std::size_t>(2 + i)] = 2;
    parts.push_back(leaf(std::move(w), 6));
  }
  CHECK(verify_boolean_rep(h, BoolFormula::make_and(parts)));
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  CHECK(verify_boolean_rep(maj, leaf({1, 1, 1, 1, 1}, 3)));
  CHECK_FALSE(verify_boolean_rep(maj, leaf({1, 1, 1, 1, 1}, 4)));
}

TEST_CASE("formula_dual") {
  const BoolFormula a = leaf({2, 1, 1, 0}, 2), b = leaf({1, 1, 1, 1}, 3);
  const BoolFormula d = formula_dual(BoolFormula::make_and({a, b}));
  REQUIRE(d.kind == BoolFormula::Kind::Or);
  REQUIRE(d.children.size() == 2);
  CHECK(weighted_game(d.children[0].leaf) == dual(weighted_game(a.leaf)));
  CHECK(weighted_game(d.children[1].leaf) == dual(weighted_game(b.leaf)));

  const BoolFormula f = delta1_formula({2, 3, 3}, {2, 3, 5});
  const BoolFormula fd = formula_dual(f);
  CHECK(formula_size(fd) == 3);
  CHECK(formula_game(fd, 8) == dual(build_delta1({2, 3, 3}, {2, 3, 5})));
  CHECK(formula_game(formula_dual(fd), 8) == formula_game(f, 8));
}

TEST_CASE("property: de Morgan on random formulas, n <= 10") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const BoolFormula f = random_formula(rng, n, 3);
    const SimpleGame g = formula_game(f, n);
    const BoolFormula fd = formula_dual(f);
    CHECK(formula_game(fd, n) == dual(g));
    CHECK(formula_size(fd) == formula_size(f));
    CHECK(formula_game(formula_dual(fd), n) == g);
    // monotone: adding a player never turns a winner into a loser
    const auto table = winning_table(g);
    for (std::uint64_t x = 0; x < table.size(); ++x)
      for (int p = 0; p < n; ++p)
        if (table[x]) CHECK(table[x | (std::uint64_t{1} << p)]);
  }
}

TEST_CASE("property: intersection representations are Boolean representations") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 20; ++round) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const SimpleGame g = testing::random_game(rng, n, 4);
    const auto r = exact_dimension(g);
    std::vector<BoolFormula> parts;
    for (const WeightedRep& p : r.witness_upper.parts) parts.push_back(BoolFormula::make_leaf(p));
    const BoolFormula f = BoolFormula::make_and(parts);
    CHECK(verify_boolean_rep(g, f));
    CHECK(formula_size(f) == r.upper);
  }
}

TEST_CASE("parse and print") {
  const BoolFormula f = parse_formula("OR(WG(2; 1,1,0,0), AND(WG(3; 1,1,1,0), WG(5; 1,1,1,1)))");
  CHECK(f.kind == BoolFormula::Kind::Or);
  CHECK(formula_size(f) == 3);
  CHECK(parse_formula(f.to_string()).to_string() == f.to_string());
  const BoolFormula g = parse_formula("WG(5; 4, 1.1, 1, 1, 1, 1, 1)");
  CHECK(g.leaf.weights[1] == Rational(11, 10));
  CHECK(parse_formula("  and( wg(1;1) , WG(1/2; 1/3) )").kind == BoolFormula::Kind::And);

  std::mt19937_64 rng(59);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const BoolFormula r = random_formula(rng, n, 3);
    const BoolFormula back = parse_formula(r.to_string());
    CHECK(back.to_string() == r.to_string());
    CHECK(formula_game(back, n) == formula_game(r, n));
  }

  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/7") == Rational(-2, 7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_formula("AND(WG(1; 1)"), InvalidInput);
  CHECK_THROWS_AS(parse_formula("WG(1; 1) trailing"), InvalidInput);
  CHECK_THROWS_AS(parse_formula("XOR(WG(1; 1))"), InvalidInput);
  try {
    parse_formula("AND(WG(1; 1), WG(1; z))");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}
