#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplegames/boolean.hpp"
#include "simplegames/game.hpp"
#include "simplegames/hierarchical.hpp"

namespace simplegames {

/// Text game description. Exactly one source is present:
///
///     sg 1
///     n 7
///     w 0 1            (one line per winning coalition; "w" alone is the empty coalition)
///     hier disj n=2,5 k=2,5
///     formula AND(WG(2; 1,1,1), WG(1; 1,0,0))
///
/// Blank lines and '#' comments are ignored. The `n` line may be omitted for
/// hierarchical specs.
struct GameFile {
  enum class Source { Coalitions, Hierarchical, Formula };

  Source source = Source::Coalitions;
  int n = 0;
  std::vector<Coalition> winning;
  std::optional<HierarchicalSpec> spec;
  std::optional<BoolFormula> formula;

  SimpleGame game() const;
};

/// Throws ParseError with the line and column of the first problem.
GameFile parse_game_file(std::string_view text);

/// Canonical text; coalition lists are written as the minimal winning antichain.
std::string serialize_game_file(const GameFile& file);

GameFile game_file_from(const SimpleGame& g);

/// "2,5" -> {2, 5}; throws InvalidInput.
std::vector<int> parse_int_list(std::string_view text);

/// Parses "disj"/"conj" (also the long names) into a kind; throws InvalidInput.
HierarchyKind parse_hierarchy_kind(std::string_view text);

}  // namespace simplegames
