#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplegames/game.hpp"
#include "simplegames/lpsep.hpp"

namespace simplegames {

/// A negation-free formula over weighted games.
struct BoolFormula {
  enum class Kind { Leaf, And, Or };

  Kind kind = Kind::Leaf;
  WeightedRep leaf;
  std::vector<BoolFormula> children;

  static BoolFormula make_leaf(WeightedRep rep);
  static BoolFormula make_and(std::vector<BoolFormula> children);
  static BoolFormula make_or(std::vector<BoolFormula> children);

  /// "AND(WG(2; 1,1,0), OR(...))"
  std::string to_string() const;
};

/// Player count shared by all leaves; throws InvalidInput when the leaves
/// disagree or a connective has no children.
int formula_player_count(const BoolFormula& f);

bool eval_formula(const BoolFormula& f, Coalition x);

/// Requires n <= kExhaustiveLimit.
SimpleGame formula_game(const BoolFormula& f, int n);

/// Number of leaf occurrences.
std::size_t formula_size(const BoolFormula& f);

/// Swaps AND/OR and replaces each leaf by a representation of its dual game.
BoolFormula formula_dual(const BoolFormula& f);

bool verify_boolean_rep(const SimpleGame& g, const BoolFormula& f);

/// Parses the text syntax: AND(f, ...), OR(f, ...), WG(q; w1, ..., wn).
/// Numbers are integers, fractions p/q or decimals (read exactly).
/// Throws InvalidInput with the offending column.
BoolFormula parse_formula(std::string_view text);

/// Parses an exact rational literal ("3", "-2/7", "1.1").
Rational parse_rational(std::string_view text);

}  // namespace simplegames
