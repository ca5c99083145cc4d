#pragma once

#include <vector>

#include "simplegames/game.hpp"

namespace simplegames {

/// Verdict of the desirability relation between two players.
enum class Desirability { StrictlyMore, Equivalent, StrictlyLess, Incomparable };

const char* to_string(Desirability d);

/// Compares players i and j: StrictlyMore means i is strictly more desirable
/// as a coalition partner than j. Requires i != j, both < n.
Desirability compare_players(const SimpleGame& g, int i, int j);

bool is_complete(const SimpleGame& g);

/// Equivalence classes of a complete game, most desirable class first,
/// players ascending within a class.
struct ClassPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  int class_count() const { return static_cast<int>(classes.size()); }
  std::vector<int> sizes() const;

  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;
};

/// Throws CompletenessViolation (carrying an incomparable pair) for games
/// that are not complete.
ClassPartition equivalence_classes(const SimpleGame& g);

/// Per-class member counts of a coalition.
using Model = std::vector<int>;

Model model_of(const ClassPartition& partition, Coalition x);
/// A coalition with the given model: the lowest-indexed players of each class.
Coalition coalition_of(const ClassPartition& partition, const Model& model);
/// Every coalition having the given model, in canonical order.
std::vector<Coalition> coalitions_of(const ClassPartition& partition, const Model& model);

/// All models, lexicographically ascending.
std::vector<Model> all_models(const ClassPartition& partition);

/// Winning status of a model (valid only for complete games).
bool model_wins(const SimpleGame& g, const ClassPartition& partition, const Model& model);

/// Models of shift-maximal losing coalitions: losing, and both adding any
/// player and replacing any member by a more desirable non-member make it win.
std::vector<Model> shift_maximal_losing(const SimpleGame& g);
std::vector<Model> shift_maximal_losing(const SimpleGame& g, const ClassPartition& partition);

/// Models of shift-minimal winning coalitions: winning, and both removing any
/// member and replacing a member by a less desirable non-member make it lose.
std::vector<Model> shift_minimal_winning(const SimpleGame& g);
std::vector<Model> shift_minimal_winning(const SimpleGame& g, const ClassPartition& partition);

/// Models of minimal winning coalitions.
std::vector<Model> minimal_winning_models(const SimpleGame& g, const ClassPartition& partition);
/// Models of maximal losing coalitions.
std::vector<Model> maximal_losing_models(const SimpleGame& g, const ClassPartition& partition);

/// Multiset notation, e.g. "{1^2,2^4}" (classes numbered from 1).
std::string model_to_string(const Model& model);

}  // namespace simplegames
