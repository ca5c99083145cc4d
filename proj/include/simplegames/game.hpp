#pragma once

#include <functional>
#include <span>
#include <vector>

#include "simplegames/coalition.hpp"

namespace simplegames {

/// A monotone simple game, stored as its antichain of minimal winning
/// coalitions in canonical order. Immutable once built.
class SimpleGame {
public:
  SimpleGame() = default;

  int player_count() const { return n_; }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }
  Coalition grand_coalition() const { return Coalition::all(n_); }

  bool is_winning(Coalition x) const;

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;

private:
  friend SimpleGame make_game(int n, std::span<const Coalition> claimed_min_winning);
  SimpleGame(int n, std::vector<Coalition> min_winning) : n_(n), min_winning_(std::move(min_winning)) {}

  int n_ = 0;
  std::vector<Coalition> min_winning_;
};

/// Builds a game from any family of winning coalitions; the family is
/// reduced to its subset-minimal elements. Throws InvalidInput when a
/// coalition mentions a player >= n or n is outside [0, kMaxPlayers].
SimpleGame make_game(int n, std::span<const Coalition> claimed_min_winning);
SimpleGame make_game(int n, std::initializer_list<Coalition> claimed_min_winning);

/// Builds a game from a monotone winning predicate by scanning all 2^n
/// coalitions. Requires n <= kExhaustiveLimit.
SimpleGame game_from_predicate(int n, const std::function<bool(Coalition)>& winning);

/// The game whose losing coalitions are exactly the subsets of `max_losing`.
SimpleGame game_from_max_losing(int n, std::span<const Coalition> max_losing);

/// Winning flag for every coalition, indexed by bitmask. n <= kExhaustiveLimit.
std::vector<bool> winning_table(const SimpleGame& g);

/// Maximal losing coalitions in canonical order.
std::vector<Coalition> maximal_losing(const SimpleGame& g);

/// W* = { P \ X : X losing in g }.
SimpleGame dual(const SimpleGame& g);

/// Number of winning coalitions; n <= kExhaustiveLimit.
std::uint64_t count_winning(const SimpleGame& g);

/// Sorts into canonical order and removes duplicates.
void canonicalize(std::vector<Coalition>& coalitions);

/// Minimal transversals (hitting sets) of a hypergraph over n vertices.
std::vector<Coalition> minimal_transversals(int n, std::span<const Coalition> edges);

}  // namespace simplegames
