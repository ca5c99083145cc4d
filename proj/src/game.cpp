#include "simplegames/game.hpp"

#include <algorithm>
#include <string>

#include "simplegames/errors.hpp"

namespace simplegames {

namespace {

void check_player_count(int n) {
  if (n < 0 || n > kMaxPlayers)
    throw InvalidInput("player count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxPlayers) + "]");
}

void check_exhaustive(int n) {
  if (n > kExhaustiveLimit)
    throw InvalidInput("operation enumerates 2^n coalitions; n=" + std::to_string(n) + " exceeds " +
                       std::to_string(kExhaustiveLimit));
}

// Keeps only subset-minimal elements; input must be canonical (sorted by size).
std::vector<Coalition> antichain_reduce(const std::vector<Coalition>& sorted) {
  std::vector<Coalition> kept;
  for (Coalition c : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [c](Coalition k) { return k.subset_of(c); });
    if (!redundant) kept.push_back(c);
  }
  return kept;
}

}  // namespace

bool SimpleGame::is_winning(Coalition x) const {
  return std::any_of(min_winning_.begin(), min_winning_.end(), [x](Coalition m) { return m.subset_of(x); });
}

void canonicalize(std::vector<Coalition>& coalitions) {
  std::sort(coalitions.begin(), coalitions.end());
  coalitions.erase(std::unique(coalitions.begin(), coalitions.end()), coalitions.end());
}

SimpleGame make_game(int n, std::span<const Coalition> claimed_min_winning) {
  check_player_count(n);
  const Coalition grand = Coalition::all(n);
  std::vector<Coalition> sorted(claimed_min_winning.begin(), claimed_min_winning.end());
  for (Coalition c : sorted) {
    if (!c.subset_of(grand))
      throw InvalidInput("coalition " + c.to_string() + " mentions a player >= n=" + std::to_string(n));
  }
  canonicalize(sorted);
  return SimpleGame(n, antichain_reduce(sorted));
}

SimpleGame make_game(int n, std::initializer_list<Coalition> claimed_min_winning) {
  return make_game(n, std::span<const Coalition>(claimed_min_winning.begin(), claimed_min_winning.size()));
}

SimpleGame game_from_predicate(int n, const std::function<bool(Coalition)>& winning) {
  check_player_count(n);
  check_exhaustive(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> table(total);
  for (std::uint64_t x = 0; x < total; ++x) table[x] = winning(Coalition(x));
  std::vector<Coalition> minimal;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (!table[x]) continue;
    bool is_min = true;
    for (std::uint64_t b = x; b != 0; b &= b - 1) {
      if (table[x & ~(b & -b)]) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.emplace_back(x);
  }
  return make_game(n, minimal);
}

SimpleGame game_from_max_losing(int n, std::span<const Coalition> max_losing) {
  check_player_count(n);
  // X is winning iff its complement hits every complement of a maximal losing coalition.
  std::vector<Coalition> complements;
  complements.reserve(max_losing.size());
  for (Coalition l : max_losing) complements.push_back(l.complement(n));
  return make_game(n, minimal_transversals(n, complements));
}

std::vector<bool> winning_table(const SimpleGame& g) {
  const int n = g.player_count();
  check_exhaustive(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> table(total, false);
  for (Coalition m : g.min_winning()) table[m.bits()] = true;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < total; ++x) {
      if ((x & bit) == 0 && table[x]) table[x | bit] = true;
    }
  }
  return table;
}

std::uint64_t count_winning(const SimpleGame& g) {
  auto table = winning_table(g);
  return static_cast<std::uint64_t>(std::count(table.begin(), table.end(), true));
}

std::vector<Coalition> minimal_transversals(int n, std::span<const Coalition> edges) {
  // Berge's incremental algorithm.
  std::vector<Coalition> current{Coalition{}};
  std::vector<Coalition> sorted_edges(edges.begin(), edges.end());
  canonicalize(sorted_edges);
  (void)n;
  for (Coalition edge : sorted_edges) {
    std::vector<Coalition> next;
    std::vector<Coalition> extended;
    for (Coalition t : current) {
      if (!(t & edge).empty()) {
        next.push_back(t);
      } else {
        for (int v : edge.members()) extended.push_back(t.with(v));
      }
    }
    // next already an antichain; keep extended elements not dominated by anything kept.
    canonicalize(extended);
    std::vector<Coalition> accepted;
    for (Coalition e : extended) {
      auto dominated = [e](Coalition k) { return k.subset_of(e); };
      if (std::any_of(next.begin(), next.end(), dominated)) continue;
      if (std::any_of(accepted.begin(), accepted.end(), dominated)) continue;
      accepted.push_back(e);
    }
    next.insert(next.end(), accepted.begin(), accepted.end());
    current = std::move(next);
    if (current.empty()) break;
  }
  canonicalize(current);
  return current;
}

std::vector<Coalition> maximal_losing(const SimpleGame& g) {
  const int n = g.player_count();
  std::vector<Coalition> out;
  if (n <= 20) {
    auto table = winning_table(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
      if (table[x]) continue;
      bool maximal = true;
      for (int i = 0; i < n && maximal; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((x & bit) == 0 && !table[x | bit]) maximal = false;
      }
      if (maximal) out.emplace_back(x);
    }
  } else {
    for (Coalition t : minimal_transversals(n, g.min_winning())) out.push_back(t.complement(n));
  }
  canonicalize(out);
  return out;
}

SimpleGame dual(const SimpleGame& g) {
  const int n = g.player_count();
  std::vector<Coalition> winners;
  for (Coalition l : maximal_losing(g)) winners.push_back(l.complement(n));
  return make_game(n, winners);
}

}  // namespace simplegames
