#include <doctest.h>

#include <random>
#include <string>

#include "simplegames/errors.hpp"
#include "simplegames/gamefile.hpp"
#include "support/corpus.hpp"

using namespace simplegames;

namespace {

struct Where {
  std::size_t line, column;
};

Where error_at(const std::string& text) {
  try {
    parse_game_file(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error for: " << text);
  return {0, 0};
}

}  // namespace

TEST_CASE("coalition lists") {
  const GameFile f = parse_game_file("sg 1\n# three players\nn 3\nw 0 1\nw 0 1 2  # superset\nw 1 2\n");
  CHECK(f.source == GameFile::Source::Coalitions);
  CHECK(f.n == 3);
  const SimpleGame g = f.game();
  CHECK(g.min_winning() == std::vector<Coalition>{Coalition::of({0, 1}), Coalition::of({1, 2})});
  CHECK(serialize_game_file(f) == "sg 1\nn 3\nw 0 1\nw 1 2\n");

  const GameFile empty_winner = parse_game_file("sg 1\nn 2\nw\n");
  CHECK(empty_winner.game().min_winning() == std::vector<Coalition>{Coalition{}});
  const GameFile none = parse_game_file("sg 1\nn 4\n");
  CHECK(none.game().min_winning().empty());
  CHECK(none.game().player_count() == 4);
  CHECK(parse_game_file("sg 1\r\nn 2\r\nw 0\r\n").game().min_winning() == std::vector<Coalition>{Coalition::of({0})});
}

TEST_CASE("hierarchical and formula sources") {
  const GameFile h = parse_game_file("sg 1\nhier disj n=2,5 k=2,5\n");
  CHECK(h.n == 7);
  CHECK(h.game() == build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}}));
  CHECK(parse_game_file(serialize_game_file(h)).game() == h.game());
  CHECK(parse_game_file("sg 1\nn 12\nhier conjunctive n=4,4,4 k=2,4,7\n").spec->kind == HierarchyKind::Conjunctive);

  const GameFile f = parse_game_file("sg 1\nn 3\nformula OR(WG(2; 1,1,1), WG(1; 1,0,0))\n");
  CHECK(f.source == GameFile::Source::Formula);
  CHECK(f.game().min_winning() == std::vector<Coalition>{Coalition::of({0}), Coalition::of({1, 2})});
  CHECK(parse_game_file(serialize_game_file(f)).game() == f.game());
}

TEST_CASE("property: round trip through the text format") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 50; ++round) {
    const int n = static_cast<int>(rng() % 9);
    const SimpleGame g = testing::random_game(rng, n, 6);
    const std::string text = serialize_game_file(game_file_from(g));
    const GameFile back = parse_game_file(text);
    CHECK(back.game() == g);
    CHECK(serialize_game_file(back) == text);
  }
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_AS(parse_game_file(""), ParseError);
  CHECK_THROWS_AS(parse_game_file("\n# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("sg 1\n"), ParseError);

  Where w = error_at("game 1\n");
  CHECK(w.line == 1);
  CHECK(w.column == 1);
  w = error_at("sg 2\n");
  CHECK(w.column == 4);
  w = error_at("sg 1\nn 3\nw 0 7\n");
  CHECK(w.line == 3);
  CHECK(w.column == 5);
  w = error_at("sg 1\nn 3\nw 0 x\n");
  CHECK(w.column == 5);
  w = error_at("sg 1\nn 99\n");
  CHECK(w.line == 2);
  CHECK(w.column == 3);
  w = error_at("sg 1\nn 3\nn 3\n");
  CHECK(w.line == 3);
  w = error_at("sg 1\n  bogus\n");
  CHECK(w.line == 2);
  CHECK(w.column == 3);
  w = error_at("sg 1\nhier both n=2 k=1\n");
  CHECK(w.column == 6);
  w = error_at("sg 1\nhier disj n=2,x k=1,2\n");
  CHECK(w.column == 13);
  w = error_at("sg 1\nhier disj n=2,2 k=2,2\n");
  CHECK(w.line == 2);
  w = error_at("sg 1\nn 5\nhier disj n=2,2 k=1,2\n");
  CHECK(w.line == 2);
  w = error_at("sg 1\nn 2\nformula AND(WG(1; 1,1), WG(1; 1,q))\n");
  CHECK(w.line == 3);
  CHECK(w.column == 33);
  w = error_at("sg 1\nn 3\nformula WG(1; 1,1)\n");
  CHECK(w.line == 2);
  w = error_at("sg 1\nw 0\n");
  CHECK(w.line == 2);
  w = error_at("sg 1\nn 2\nw 0\nhier disj n=2 k=1\n");
  CHECK(w.line == 4);
}

TEST_CASE("helpers") {
  CHECK(parse_int_list("2,5") == std::vector<int>{2, 5});
  CHECK(parse_int_list("7") == std::vector<int>{7});
  CHECK_THROWS_AS(parse_int_list("2,,5"), InvalidInput);
  CHECK_THROWS_AS(parse_int_list(""), InvalidInput);
  CHECK(parse_hierarchy_kind("disj") == HierarchyKind::Disjunctive);
  CHECK(parse_hierarchy_kind("conjunctive") == HierarchyKind::Conjunctive);
  CHECK_THROWS_AS(parse_hierarchy_kind("any"), InvalidInput);
}
