#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplegames/game.hpp"
#include "simplegames/rational_lp.hpp"

namespace simplegames {

/// Nonnegative weights and a quota: X wins iff w(X) >= quota.
///
/// The quota is positive for every game except the one in which even the
/// empty coalition wins; that game is represented by all-zero weights and
/// quota 0.
struct WeightedRep {
  std::vector<Rational> weights;
  Rational quota;

  int player_count() const { return static_cast<int>(weights.size()); }
  Rational weight_of(Coalition x) const;
  bool wins(Coalition x) const { return weight_of(x) >= quota; }
  /// "[q; w1,...,wn]" with exact fractions.
  std::string to_string() const;

  friend bool operator==(const WeightedRep&, const WeightedRep&) = default;
};

/// Rough representation: w(X) < quota implies losing, w(X) > quota winning.
struct RoughRep {
  std::vector<Rational> weights;
  Rational quota;

  int player_count() const { return static_cast<int>(weights.size()); }
  Rational weight_of(Coalition x) const;
  std::string to_string() const;
};

/// Decides whether some weighted game makes every coalition of `must_win`
/// (hence every superset) winning and every coalition of `must_lose` losing.
///
/// Strict separation is solved with margin one: w(X) >= q for winners,
/// w(Y) <= q - 1 for losers, q >= 1. Returned witnesses are primitive integer
/// vectors, so they satisfy the margin form as well. nullopt means infeasible.
std::optional<WeightedRep> separable(int n, std::span<const Coalition> must_win,
                                     std::span<const Coalition> must_lose);

/// A verified weighted representation of g, or nullopt if g is not weighted.
std::optional<WeightedRep> is_weighted(const SimpleGame& g);

/// A rough representation of g, or nullopt if none exists.
/// Two exact cases are tried: quota 1, then quota 0 with total weight 1.
std::optional<RoughRep> is_roughly_weighted(const SimpleGame& g);

bool verify_representation(const SimpleGame& g, const WeightedRep& rep);
bool verify_representation(const SimpleGame& g, const RoughRep& rep);

/// The game [q; w]. Enumerates minimal winning coalitions by depth-first search.
SimpleGame weighted_game(const WeightedRep& rep);

/// Exact fraction rendering: "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace simplegames
