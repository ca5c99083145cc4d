#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplegames/desirability.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

enum class HierarchyKind { Disjunctive, Conjunctive };

const char* to_string(HierarchyKind kind);

/// Class sizes n_1..n_m and cumulative thresholds k_1..k_m. Players are
/// assigned to classes contiguously: class 1 gets the lowest indices.
struct HierarchicalSpec {
  HierarchyKind kind = HierarchyKind::Disjunctive;
  std::vector<int> sizes;
  std::vector<int> thresholds;

  int class_count() const { return static_cast<int>(sizes.size()); }
  int player_count() const;
  /// The classes as a partition (most desirable first).
  ClassPartition partition() const;
  std::string to_string() const;

  friend bool operator==(const HierarchicalSpec&, const HierarchicalSpec&) = default;
};

/// Checks sizes/thresholds positivity and monotonicity: strictly increasing
/// thresholds for disjunctive games, k_1 < ... < k_{m-1} <= k_m for
/// conjunctive ones. Throws InvalidInput.
void validate_structure(const HierarchicalSpec& spec);

/// Winning predicate of the hierarchical game on a coalition.
bool hierarchical_wins(const HierarchicalSpec& spec, Coalition x);

SimpleGame build(const HierarchicalSpec& spec);

struct PartitenessReport {
  bool true_m_partite = false;
  std::vector<std::string> violations;
};

/// Conjunctive specs: checks k_1 <= n_1 and k_i < k_{i-1} + n_i. Disjunctive
/// specs have no closed-form criterion here; they are checked by building
/// the game and counting desirability classes.
PartitenessReport validate_partiteness(const HierarchicalSpec& spec);

/// P_1 when k_1 = n_1, otherwise empty (conjunctive, truly m-partite specs).
Coalition veto_players(const HierarchicalSpec& spec);
/// P_m when k_{m-1} = k_m, otherwise empty.
Coalition dummy_players(const HierarchicalSpec& spec);

/// Drops the veto class and the dummy class: n' = (n_2..n_{m-1}),
/// k' = (k_2-k_1, ..., k_{m-1}-k_1). PreconditionError unless both exist.
HierarchicalSpec reduce(const HierarchicalSpec& spec);

/// Shift-maximal losing models of a truly m-partite conjunctive game from the
/// closed form: for each i, fill k_i - 1 players greedily into classes 1..i and
/// take all of classes i+1..m. M_m is absent when the last class is dummy.
std::vector<Model> shiftmax_models_closed_form(const HierarchicalSpec& spec);

/// Disjunctive game with |P_0| = k, |P_1| = ... = |P_{m-1}| = 2k and
/// thresholds (2, 4, ..., 2m), together with k^{m-1} pairwise incompatible
/// losing coalitions {a_{i0}} u P_1^{(i1)} u ... u P_{m-1}^{(i')} where
/// P_t^{(j)} = {p_t^{(2j)}, p_t^{(2j+1)}} and i' = i0 + ... + i_{m-2} mod k.
struct WitnessConstruction {
  SimpleGame game;
  HierarchicalSpec spec;
  std::vector<Coalition> witnesses;
};
WitnessConstruction os3_witness_set(int k, int m);

/// The tripartite game (|C1| >= k1) or ((|C1|+|C2| >= k2) and (|C1|+|C2|+|C3| >= k3)).
/// Requires k1 < k3, k2 < k3, n1 >= k1, n2 > k2 - k1, n3 > k3 - k2.
SimpleGame build_delta1(const std::vector<int>& sizes, const std::vector<int>& thresholds);

/// Looks for thresholds over g's own desirability classes that reproduce g as
/// a hierarchical game of the given kind. Brute force; desk-scale only.
std::optional<HierarchicalSpec> extract_hierarchical(const SimpleGame& g, HierarchyKind kind);

}  // namespace simplegames
