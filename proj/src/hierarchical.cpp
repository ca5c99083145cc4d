#include "simplegames/hierarchical.hpp"

#include <algorithm>
#include <numeric>

#include "simplegames/errors.hpp"

namespace simplegames {

const char* to_string(HierarchyKind kind) {
  return kind == HierarchyKind::Disjunctive ? "disj" : "conj";
}

int HierarchicalSpec::player_count() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

ClassPartition HierarchicalSpec::partition() const {
  ClassPartition part;
  int next = 0;
  for (int size : sizes) {
    std::vector<int> cls(static_cast<std::size_t>(size));
    std::iota(cls.begin(), cls.end(), next);
    part.class_of.insert(part.class_of.end(), cls.size(), static_cast<int>(part.classes.size()));
    part.classes.push_back(std::move(cls));
    next += size;
  }
  return part;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string HierarchicalSpec::to_string() const {
  return std::string("hier ") + simplegames::to_string(kind) + " n=" + join(sizes) + " k=" + join(thresholds);
}

void validate_structure(const HierarchicalSpec& spec) {
  const std::size_t m = spec.sizes.size();
  if (m == 0 || spec.thresholds.size() != m) throw InvalidInput("hierarchical spec needs equally many sizes and thresholds");
  for (std::size_t i = 0; i < m; ++i) {
    if (spec.sizes[i] < 1) throw InvalidInput("class sizes must be positive");
    if (spec.thresholds[i] < 1) throw InvalidInput("thresholds must be positive");
  }
  for (std::size_t i = 1; i < m; ++i) {
    const bool last = i + 1 == m;
    const bool ok = spec.kind == HierarchyKind::Conjunctive && last ? spec.thresholds[i - 1] <= spec.thresholds[i]
                                                                    : spec.thresholds[i - 1] < spec.thresholds[i];
    if (!ok) throw InvalidInput("thresholds are not monotone for a " + std::string(to_string(spec.kind)) + " game: k=" + join(spec.thresholds));
  }
  if (spec.player_count() > kMaxPlayers) throw InvalidInput("hierarchical spec exceeds the player cap");
}

bool hierarchical_wins(const HierarchicalSpec& spec, Coalition x) {
  int cumulative = 0;
  int offset = 0;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    const Coalition cls(Coalition::all(offset + spec.sizes[i]).bits() & ~Coalition::all(offset).bits());
    cumulative += (x & cls).size();
    offset += spec.sizes[i];
    const bool met = cumulative >= spec.thresholds[i];
    if (spec.kind == HierarchyKind::Disjunctive && met) return true;
    if (spec.kind == HierarchyKind::Conjunctive && !met) return false;
  }
  return spec.kind == HierarchyKind::Conjunctive;
}

namespace {

bool model_meets(const HierarchicalSpec& spec, const Model& m) {
  int cumulative = 0;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    cumulative += m[i];
    const bool met = cumulative >= spec.thresholds[i];
    if (spec.kind == HierarchyKind::Disjunctive && met) return true;
    if (spec.kind == HierarchyKind::Conjunctive && !met) return false;
  }
  return spec.kind == HierarchyKind::Conjunctive;
}

}  // namespace

SimpleGame build(const HierarchicalSpec& spec) {
  validate_structure(spec);
  // Winning status depends only on per-class counts: collect the minimal
  // winning models and expand each into its coalitions.
  const ClassPartition part = spec.partition();
  std::vector<Coalition> minimal;
  for (const Model& m : all_models(part)) {
    if (!model_meets(spec, m)) continue;
    bool is_min = true;
    for (std::size_t c = 0; c < m.size() && is_min; ++c) {
      if (m[c] == 0) continue;
      Model down = m;
      --down[c];
      if (model_meets(spec, down)) is_min = false;
    }
    if (!is_min) continue;
    auto cs = coalitions_of(part, m);
    minimal.insert(minimal.end(), cs.begin(), cs.end());
  }
  return make_game(spec.player_count(), minimal);
}

PartitenessReport validate_partiteness(const HierarchicalSpec& spec) {
  validate_structure(spec);
  PartitenessReport report;
  const auto& n = spec.sizes;
  const auto& k = spec.thresholds;
  if (spec.kind == HierarchyKind::Conjunctive) {
    if (k[0] > n[0])
      report.violations.push_back("k_1 <= n_1 fails: " + std::to_string(k[0]) + " > " + std::to_string(n[0]));
    for (std::size_t i = 1; i < n.size(); ++i) {
      if (k[i] >= k[i - 1] + n[i])
        report.violations.push_back("k_" + std::to_string(i + 1) + " < k_" + std::to_string(i) + " + n_" +
                                    std::to_string(i + 1) + " fails: " + std::to_string(k[i]) +
                                    " >= " + std::to_string(k[i - 1] + n[i]));
    }
  } else {
    const SimpleGame g = build(spec);
    const ClassPartition found = equivalence_classes(g);
    if (found.class_count() != spec.class_count() || found.classes != spec.partition().classes)
      report.violations.push_back("desirability classes " + std::to_string(found.class_count()) +
                                  " do not match the declared " + std::to_string(spec.class_count()));
  }
  report.true_m_partite = report.violations.empty();
  return report;
}

namespace {

Coalition class_coalition(const HierarchicalSpec& spec, std::size_t index) {
  int offset = 0;
  for (std::size_t i = 0; i < index; ++i) offset += spec.sizes[i];
  return Coalition(Coalition::all(offset + spec.sizes[index]).bits() & ~Coalition::all(offset).bits());
}

void require_conjunctive(const HierarchicalSpec& spec, const char* op) {
  validate_structure(spec);
  if (spec.kind != HierarchyKind::Conjunctive) throw PreconditionError(std::string(op) + " needs a conjunctive spec");
}

}  // namespace

Coalition veto_players(const HierarchicalSpec& spec) {
  require_conjunctive(spec, "veto_players");
  return spec.thresholds[0] == spec.sizes[0] ? class_coalition(spec, 0) : Coalition{};
}

Coalition dummy_players(const HierarchicalSpec& spec) {
  require_conjunctive(spec, "dummy_players");
  const std::size_t m = spec.sizes.size();
  if (m < 2) return Coalition{};
  return spec.thresholds[m - 2] == spec.thresholds[m - 1] ? class_coalition(spec, m - 1) : Coalition{};
}

HierarchicalSpec reduce(const HierarchicalSpec& spec) {
  require_conjunctive(spec, "reduce");
  if (veto_players(spec).empty() || dummy_players(spec).empty())
    throw PreconditionError("reduce needs both a veto class and a dummy class");
  const std::size_t m = spec.sizes.size();
  if (m < 3) throw PreconditionError("reduce needs at least three classes");
  HierarchicalSpec out;
  out.kind = HierarchyKind::Conjunctive;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    out.sizes.push_back(spec.sizes[i]);
    out.thresholds.push_back(spec.thresholds[i] - spec.thresholds[0]);
  }
  return out;
}

std::vector<Model> shiftmax_models_closed_form(const HierarchicalSpec& spec) {
  require_conjunctive(spec, "shiftmax_models_closed_form");
  const std::size_t m = spec.sizes.size();
  const bool dummies = !dummy_players(spec).empty();
  std::vector<Model> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (dummies && i + 1 == m) continue;
    Model model(m, 0);
    int left = spec.thresholds[i] - 1;  // (i): a_1 + ... + a_i = k_i - 1
    for (std::size_t t = 0; t <= i && left > 0; ++t) {  // (ii): fill earlier classes first
      model[t] = std::min(left, spec.sizes[t]);
      left -= model[t];
    }
    if (left > 0 || model[i] >= spec.sizes[i]) continue;  // (iii): a_i < n_i
    for (std::size_t t = i + 1; t < m; ++t) model[t] = spec.sizes[t];
    out.push_back(std::move(model));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WitnessConstruction os3_witness_set(int k, int m) {
  if (k < 2 || m < 2) throw InvalidInput("os3_witness_set needs k >= 2 and m >= 2");
  if (k + 2 * k * (m - 1) > kMaxPlayers) throw InvalidInput("os3_witness_set exceeds the player cap");
  HierarchicalSpec spec;
  spec.kind = HierarchyKind::Disjunctive;
  spec.sizes.push_back(k);
  for (int t = 1; t < m; ++t) spec.sizes.push_back(2 * k);
  for (int t = 1; t <= m; ++t) spec.thresholds.push_back(2 * t);

  auto player = [&](int cls, int j) { return cls == 0 ? j : k + 2 * k * (cls - 1) + j; };
  std::vector<Coalition> witnesses;
  // digits i_0..i_{m-2} in base k
  std::size_t count = 1;
  for (int t = 1; t < m; ++t) count *= static_cast<std::size_t>(k);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t rest = code;
    int sum = 0;
    Coalition y;
    for (int t = 0; t < m - 1; ++t) {
      const int digit = static_cast<int>(rest % static_cast<std::size_t>(k));
      rest /= static_cast<std::size_t>(k);
      sum += digit;
      if (t == 0) {
        y = y.with(player(0, digit));
      } else {
        y = y.with(player(t, 2 * digit)).with(player(t, 2 * digit + 1));
      }
    }
    const int last = sum % k;
    y = y.with(player(m - 1, 2 * last)).with(player(m - 1, 2 * last + 1));
    witnesses.push_back(y);
  }
  return {build(spec), spec, witnesses};
}

SimpleGame build_delta1(const std::vector<int>& n, const std::vector<int>& k) {
  if (n.size() != 3 || k.size() != 3) throw InvalidInput("build_delta1 needs three sizes and three thresholds");
  for (int v : n)
    if (v < 1) throw InvalidInput("build_delta1: sizes must be positive");
  for (int v : k)
    if (v < 1) throw InvalidInput("build_delta1: thresholds must be positive");
  if (!(k[0] < k[2] && k[1] < k[2] && n[0] >= k[0] && n[1] > k[1] - k[0] && n[2] > k[2] - k[1]))
    throw InvalidInput("build_delta1: parameters violate k1<k3, k2<k3, n1>=k1, n2>k2-k1, n3>k3-k2");
  const int total = n[0] + n[1] + n[2];
  if (total > kMaxPlayers) throw InvalidInput("build_delta1 exceeds the player cap");
  HierarchicalSpec layout{HierarchyKind::Disjunctive, n, {1, 2, 3}};
  const ClassPartition part = layout.partition();
  auto wins = [&](const Model& c) {
    return c[0] >= k[0] || (c[0] + c[1] >= k[1] && c[0] + c[1] + c[2] >= k[2]);
  };
  std::vector<Coalition> minimal;
  for (const Model& m : all_models(part)) {
    if (!wins(m)) continue;
    bool is_min = true;
    for (std::size_t c = 0; c < 3 && is_min; ++c) {
      if (m[c] == 0) continue;
      Model down = m;
      --down[c];
      if (wins(down)) is_min = false;
    }
    if (!is_min) continue;
    auto cs = coalitions_of(part, m);
    minimal.insert(minimal.end(), cs.begin(), cs.end());
  }
  return make_game(total, minimal);
}

std::optional<HierarchicalSpec> extract_hierarchical(const SimpleGame& g, HierarchyKind kind) {
  if (!is_complete(g)) return std::nullopt;
  const ClassPartition part = equivalence_classes(g);
  // Players must be laid out contiguously for the spec's class assignment.
  if (part != HierarchicalSpec{kind, part.sizes(), std::vector<int>(part.sizes().size(), 1)}.partition())
    return std::nullopt;
  const auto sizes = part.sizes();
  const std::size_t m = sizes.size();
  const int total = g.player_count();
  const auto models = all_models(part);
  std::vector<bool> status;
  status.reserve(models.size());
  for (const Model& md : models) status.push_back(model_wins(g, part, md));

  HierarchicalSpec candidate{kind, sizes, std::vector<int>(m, 1)};
  // odometer over thresholds in [1, total + 1]
  while (true) {
    bool valid = true;
    try {
      validate_structure(candidate);
    } catch (const InvalidInput&) {
      valid = false;
    }
    if (valid) {
      bool same = true;
      for (std::size_t i = 0; i < models.size() && same; ++i) same = model_meets(candidate, models[i]) == status[i];
      if (same) return candidate;
    }
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (candidate.thresholds[pos] <= total) {
        ++candidate.thresholds[pos];
        break;
      }
      candidate.thresholds[pos] = 1;
      if (pos == 0) return std::nullopt;
    }
  }
}

}  // namespace simplegames
