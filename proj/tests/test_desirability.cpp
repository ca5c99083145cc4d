#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "simplegames/desirability.hpp"
#include "simplegames/errors.hpp"
#include "simplegames/hierarchical.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace simplegames;

namespace {

SimpleGame un_council() {
  return game_from_predicate(15, [](Coalition x) { return (x.bits() & 0x1F) == 0x1F && x.size() >= 9; });
}

std::set<Model> as_set(const std::vector<Model>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("compare_players examples") {
  CHECK(compare_players(un_council(), 0, 7) == Desirability::StrictlyMore);
  CHECK(compare_players(un_council(), 7, 0) == Desirability::StrictlyLess);
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  CHECK(compare_players(maj, 1, 4) == Desirability::Equivalent);
  const SimpleGame h = build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}});
  CHECK(compare_players(h, 0, 3) == Desirability::StrictlyMore);
  const SimpleGame two_pairs = make_game(4, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  CHECK(compare_players(two_pairs, 0, 2) == Desirability::Incomparable);
  CHECK_FALSE(is_complete(two_pairs));
}

TEST_CASE("equivalence classes") {
  const auto un = equivalence_classes(un_council());
  CHECK(un.sizes() == std::vector<int>{5, 10});
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  CHECK(equivalence_classes(maj).class_count() == 1);
  const SimpleGame conj = build({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}});
  CHECK(equivalence_classes(conj).sizes() == std::vector<int>{4, 4, 4});
  const SimpleGame two_pairs = make_game(4, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  CHECK_THROWS_AS(equivalence_classes(two_pairs), CompletenessViolation);
  try {
    equivalence_classes(two_pairs);
  } catch (const CompletenessViolation& e) {
    CHECK(testing::brute_compare(two_pairs, e.first(), e.second()) == Desirability::Incomparable);
  }
}

TEST_CASE("shift-maximal losing and shift-minimal winning models") {
  const SimpleGame conj = build({HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}});
  CHECK(as_set(shift_maximal_losing(conj)) == std::set<Model>{{1, 4, 4}, {3, 0, 4}, {4, 2, 0}});
  const SimpleGame h = build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}});
  CHECK(shift_maximal_losing(h) == std::vector<Model>{{1, 3}});
  const auto part = equivalence_classes(h);
  CHECK(as_set(minimal_winning_models(h, part)) == std::set<Model>{{2, 0}, {1, 4}, {0, 5}});
  // {1,2^4} is not shift-minimal: replacing the class-1 member by a class-2 player keeps it winning
  CHECK(as_set(shift_minimal_winning(h)) == std::set<Model>{{2, 0}, {0, 5}});
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  CHECK(shift_maximal_losing(maj) == std::vector<Model>{{2}});
  CHECK(shift_minimal_winning(maj) == std::vector<Model>{{3}});
  CHECK(shift_minimal_winning(un_council()) == std::vector<Model>{{5, 4}});
  CHECK(model_to_string({1, 4, 4}) == "{1,2^4,3^4}");
}

TEST_CASE("property: desirability agrees with the definition scan") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SimpleGame g = testing::random_game(rng, n, 5);
    bool complete = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Desirability d = compare_players(g, i, j);
        CHECK(d == testing::brute_compare(g, i, j));
        if (d == Desirability::Incomparable) complete = false;
      }
    CHECK(is_complete(g) == complete);
  }
}

TEST_CASE("property: complete games (hierarchical corpus)") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 60) {
    const int m = 1 + static_cast<int>(rng() % 3);
    HierarchicalSpec spec{rng() % 2 ? HierarchyKind::Disjunctive : HierarchyKind::Conjunctive, {}, {}};
    int k = 0;
    for (int i = 0; i < m; ++i) {
      spec.sizes.push_back(1 + static_cast<int>(rng() % 4));
      k += 1 + static_cast<int>(rng() % 3);
      spec.thresholds.push_back(k);
    }
    try {
      validate_structure(spec);
    } catch (const InvalidInput&) {
      continue;
    }
    const SimpleGame g = build(spec);
    if (g.min_winning().empty()) continue;
    ++checked;
    REQUIRE(is_complete(g));
    const ClassPartition part = equivalence_classes(g);
    const int n = g.player_count();
    // transitivity and class ordering
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          auto geq = [&](int x, int y) { auto d = compare_players(g, x, y); return d == Desirability::StrictlyMore || d == Desirability::Equivalent; };
          if (geq(a, b) && geq(b, c)) CHECK(geq(a, c));
        }
    for (int a = 0; a < part.class_count(); ++a)
      for (int b = a + 1; b < part.class_count(); ++b)
        CHECK(compare_players(g, part.classes[a][0], part.classes[b][0]) == Desirability::StrictlyMore);
    // winning status depends only on the model
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const Coalition c(x);
      CHECK(g.is_winning(c) == model_wins(g, part, model_of(part, c)));
    }
    CHECK(shift_maximal_losing(g, part) == testing::brute_shift_maximal_models(g, part));
    // every minimal winning model dominates a shift-minimal one; dually for losing
    auto dominates = [](const Model& a, const Model& b) {
      int pa = 0, pb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
      }
      return true;
    };
    const auto smw = shift_minimal_winning(g, part);
    for (const Model& w : minimal_winning_models(g, part))
      CHECK(std::any_of(smw.begin(), smw.end(), [&](const Model& s) { return dominates(w, s); }));
    const auto sml = shift_maximal_losing(g, part);
    for (const Model& l : maximal_losing_models(g, part))
      CHECK(std::any_of(sml.begin(), sml.end(), [&](const Model& s) { return dominates(s, l); }));
  }
}
