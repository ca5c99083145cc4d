#include "simplegames/desirability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "simplegames/errors.hpp"

namespace simplegames {

const char* to_string(Desirability d) {
  switch (d) {
    case Desirability::StrictlyMore: return "StrictlyMore";
    case Desirability::Equivalent: return "Equivalent";
    case Desirability::StrictlyLess: return "StrictlyLess";
    case Desirability::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

// i is at least as desirable as j. It is enough to look at minimal winning
// coalitions containing j but not i: any X u {j} in W contains such an M (or a
// minimal winning coalition avoiding j, which is harmless).
bool at_least_as_desirable(const SimpleGame& g, int i, int j) {
  for (Coalition m : g.min_winning()) {
    if (!m.contains(j) || m.contains(i)) continue;
    if (!g.is_winning(m.without(j).with(i))) return false;
  }
  return true;
}

void check_pair(const SimpleGame& g, int i, int j) {
  const int n = g.player_count();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw InvalidInput("compare_players needs two distinct players below n=" + std::to_string(n));
}

}  // namespace

Desirability compare_players(const SimpleGame& g, int i, int j) {
  check_pair(g, i, j);
  const bool ij = at_least_as_desirable(g, i, j);
  const bool ji = at_least_as_desirable(g, j, i);
  if (ij && ji) return Desirability::Equivalent;
  if (ij) return Desirability::StrictlyMore;
  if (ji) return Desirability::StrictlyLess;
  return Desirability::Incomparable;
}

bool is_complete(const SimpleGame& g) {
  const int n = g.player_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (compare_players(g, i, j) == Desirability::Incomparable) return false;
  return true;
}

std::vector<int> ClassPartition::sizes() const {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

ClassPartition equivalence_classes(const SimpleGame& g) {
  const int n = g.player_count();
  std::vector<int> representatives;
  ClassPartition part;
  part.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    bool placed = false;
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      const Desirability d = compare_players(g, representatives[c], p);
      if (d == Desirability::Incomparable) throw CompletenessViolation(representatives[c], p);
      if (d == Desirability::Equivalent) {
        part.classes[c].push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      representatives.push_back(p);
      part.classes.push_back({p});
    }
  }
  // Desirability is transitive, so the representatives sort consistently.
  std::vector<std::size_t> order(representatives.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (compare_players(g, representatives[a], representatives[b]) == Desirability::Incomparable)
        throw CompletenessViolation(representatives[a], representatives[b]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_players(g, representatives[a], representatives[b]) == Desirability::StrictlyMore;
  });
  std::vector<std::vector<int>> sorted;
  for (std::size_t idx : order) sorted.push_back(part.classes[idx]);
  part.classes = std::move(sorted);
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (int p : part.classes[c]) part.class_of[static_cast<std::size_t>(p)] = static_cast<int>(c);
  return part;
}

Model model_of(const ClassPartition& partition, Coalition x) {
  Model m(partition.classes.size(), 0);
  for (int p : x.members()) ++m[static_cast<std::size_t>(partition.class_of[static_cast<std::size_t>(p)])];
  return m;
}

Coalition coalition_of(const ClassPartition& partition, const Model& model) {
  Coalition x;
  for (std::size_t c = 0; c < model.size(); ++c)
    for (int t = 0; t < model[c]; ++t) x = x.with(partition.classes[c][static_cast<std::size_t>(t)]);
  return x;
}

namespace {

void expand_class(const std::vector<int>& players, int count, std::size_t start, Coalition acc,
                  std::vector<Coalition>& out) {
  if (count == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(count) <= players.size(); ++i)
    expand_class(players, count - 1, i + 1, acc.with(players[i]), out);
}

}  // namespace

std::vector<Coalition> coalitions_of(const ClassPartition& partition, const Model& model) {
  std::vector<Coalition> current{Coalition{}};
  for (std::size_t c = 0; c < model.size(); ++c) {
    std::vector<Coalition> next;
    for (Coalition base : current) expand_class(partition.classes[c], model[c], 0, base, next);
    current = std::move(next);
  }
  canonicalize(current);
  return current;
}

std::vector<Model> all_models(const ClassPartition& partition) {
  const auto sizes = partition.sizes();
  std::vector<Model> out;
  Model m(sizes.size(), 0);
  while (true) {
    out.push_back(m);
    auto pos = static_cast<std::ptrdiff_t>(sizes.size()) - 1;
    while (pos >= 0 && m[static_cast<std::size_t>(pos)] == sizes[static_cast<std::size_t>(pos)]) {
      m[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return out;
    ++m[static_cast<std::size_t>(pos)];
  }
}

bool model_wins(const SimpleGame& g, const ClassPartition& partition, const Model& model) {
  return g.is_winning(coalition_of(partition, model));
}

namespace {

struct ModelSpace {
  const SimpleGame& game;
  const ClassPartition& partition;
  std::vector<int> sizes;

  bool wins(const Model& m) const { return model_wins(game, partition, m); }

  bool every_addition_wins(const Model& m) const {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (m[c] == sizes[c]) continue;
      Model up = m;
      ++up[c];
      if (!wins(up)) return false;
    }
    return true;
  }
  bool every_removal_loses(const Model& m) const {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (m[c] == 0) continue;
      Model down = m;
      --down[c];
      if (wins(down)) return false;
    }
    return true;
  }
  // Move one member from class `from` to a more desirable class `to` < from.
  bool every_upshift_wins(const Model& m) const {
    for (std::size_t from = 1; from < m.size(); ++from) {
      if (m[from] == 0) continue;
      for (std::size_t to = 0; to < from; ++to) {
        if (m[to] == sizes[to]) continue;
        Model s = m;
        --s[from];
        ++s[to];
        if (!wins(s)) return false;
      }
    }
    return true;
  }
  bool every_downshift_loses(const Model& m) const {
    for (std::size_t from = 0; from + 1 < m.size(); ++from) {
      if (m[from] == 0) continue;
      for (std::size_t to = from + 1; to < m.size(); ++to) {
        if (m[to] == sizes[to]) continue;
        Model s = m;
        --s[from];
        ++s[to];
        if (wins(s)) return false;
      }
    }
    return true;
  }
};

}  // namespace

std::vector<Model> shift_maximal_losing(const SimpleGame& g, const ClassPartition& partition) {
  ModelSpace space{g, partition, partition.sizes()};
  std::vector<Model> out;
  for (const Model& m : all_models(partition))
    if (!space.wins(m) && space.every_addition_wins(m) && space.every_upshift_wins(m)) out.push_back(m);
  return out;
}

std::vector<Model> shift_maximal_losing(const SimpleGame& g) {
  return shift_maximal_losing(g, equivalence_classes(g));
}

std::vector<Model> shift_minimal_winning(const SimpleGame& g, const ClassPartition& partition) {
  ModelSpace space{g, partition, partition.sizes()};
  std::vector<Model> out;
  for (const Model& m : all_models(partition))
    if (space.wins(m) && space.every_removal_loses(m) && space.every_downshift_loses(m)) out.push_back(m);
  return out;
}

std::vector<Model> shift_minimal_winning(const SimpleGame& g) {
  return shift_minimal_winning(g, equivalence_classes(g));
}

std::vector<Model> minimal_winning_models(const SimpleGame& g, const ClassPartition& partition) {
  ModelSpace space{g, partition, partition.sizes()};
  std::vector<Model> out;
  for (const Model& m : all_models(partition))
    if (space.wins(m) && space.every_removal_loses(m)) out.push_back(m);
  return out;
}

std::vector<Model> maximal_losing_models(const SimpleGame& g, const ClassPartition& partition) {
  ModelSpace space{g, partition, partition.sizes()};
  std::vector<Model> out;
  for (const Model& m : all_models(partition))
    if (!space.wins(m) && space.every_addition_wins(m)) out.push_back(m);
  return out;
}

std::string model_to_string(const Model& model) {
  std::string s = "{";
  bool first = true;
  for (std::size_t c = 0; c < model.size(); ++c) {
    if (model[c] == 0) continue;
    if (!first) s += ',';
    s += std::to_string(c + 1);
    if (model[c] > 1) s += "^" + std::to_string(model[c]);
    first = false;
  }
  return s + "}";
}

}  // namespace simplegames
