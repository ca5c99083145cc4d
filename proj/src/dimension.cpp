#include "simplegames/dimension.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "simplegames/certificates.hpp"
#include "simplegames/errors.hpp"

namespace simplegames {

namespace {

// Weights scaled to int64 for fast repeated evaluation; falls back to exact
// rationals when they do not fit.
class FastRep {
public:
  explicit FastRep(const WeightedRep& rep) : rep_(&rep) {
    mpz_class lcm = 1;
    for (const Rational& r : rep.weights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rep.quota.get_den_mpz_t());
    mpz_class total = 0;
    for (const Rational& r : rep.weights) {
      mpz_class v = r.get_num() * (lcm / r.get_den());
      total += v;
      weights_.push_back(v.fits_slong_p() ? v.get_si() : 0);
    }
    const mpz_class q = rep.quota.get_num() * (lcm / rep.quota.get_den());
    fits_ = total.fits_slong_p() && q.fits_slong_p();
    if (fits_) quota_ = q.get_si();
  }

  bool wins(Coalition x) const {
    if (!fits_) return rep_->wins(x);
    std::int64_t s = 0;
    for (std::uint64_t b = x.bits(); b != 0; b &= b - 1) s += weights_[static_cast<std::size_t>(std::countr_zero(b))];
    return s >= quota_;
  }

private:
  const WeightedRep* rep_;
  std::vector<std::int64_t> weights_;
  std::int64_t quota_ = 0;
  bool fits_ = false;
};

WeightedRep lone_losing_witness(int n, Coalition y) {
  // Weight 1 outside y, quota 1: every winning coalition leaves y, y loses.
  WeightedRep rep;
  rep.weights.assign(static_cast<std::size_t>(n), Rational(0));
  for (int p = 0; p < n; ++p)
    if (!y.contains(p)) rep.weights[static_cast<std::size_t>(p)] = 1;
  rep.quota = 1;
  return rep;
}

WeightedRep all_winning_rep(int n) {
  WeightedRep rep;
  rep.weights.assign(static_cast<std::size_t>(n), Rational(0));
  rep.quota = 0;
  return rep;
}

// Memoized separability of subsets of a fixed list of losing coalitions.
class SeparationOracle {
public:
  SeparationOracle(const SimpleGame& g, std::span<const Coalition> losing)
      : game_(g), losing_(losing.begin(), losing.end()) {}

  std::optional<WeightedRep> check(const Bits& members) {
    auto it = memo_.find(members);
    if (it != memo_.end()) return it->second;
    std::vector<Coalition> lose;
    for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) lose.push_back(losing_[i]);
    ++lp_calls_;
    auto rep = separable(game_.player_count(), game_.min_winning(), lose);
    memo_.emplace(members, rep);
    return rep;
  }

  Bits losing_under(const WeightedRep& rep) const {
    const FastRep fast(rep);
    Bits out(losing_.size());
    for (std::size_t i = 0; i < losing_.size(); ++i)
      if (!fast.wins(losing_[i])) out.set(i);
    return out;
  }

  std::size_t size() const { return losing_.size(); }
  std::size_t lp_calls() const { return lp_calls_; }
  const SimpleGame& game() const { return game_; }
  Coalition at(std::size_t i) const { return losing_[i]; }

private:
  const SimpleGame& game_;
  std::vector<Coalition> losing_;
  std::map<Bits, std::optional<WeightedRep>> memo_;
  std::size_t lp_calls_ = 0;
};

struct Part {
  Bits members;
  WeightedRep rep;
  Bits covered;
};

Part singleton_part(const SeparationOracle& oracle, std::size_t y) {
  const std::size_t m = oracle.size();
  Part part{Bits(m), lone_losing_witness(oracle.game().player_count(), oracle.at(y)), Bits(m)};
  part.members.set(y);
  part.covered = oracle.losing_under(part.rep);
  return part;
}

// Grows one group at a time around the most conflicted uncovered coalition.
std::vector<Part> grow_cover(SeparationOracle& oracle, const std::vector<Bits>& adjacency) {
  const std::size_t m = oracle.size();
  Bits uncovered(m);
  uncovered.set();
  std::vector<Part> parts;
  while (uncovered.any()) {
    std::size_t seed = uncovered.find_first();
    for (auto i = uncovered.find_next(seed); i != Bits::npos; i = uncovered.find_next(i))
      if (adjacency[i].count() > adjacency[seed].count()) seed = i;
    Part part = singleton_part(oracle, seed);
    part.members |= part.covered & uncovered;
    Bits conflicts(m);
    for (auto i = part.members.find_first(); i != Bits::npos; i = part.members.find_next(i)) conflicts |= adjacency[i];
    Bits candidates = uncovered - part.members - conflicts;
    for (auto y = candidates.find_first(); y != Bits::npos; y = candidates.find_next(y)) {
      if (part.members.test(y) || conflicts.test(y)) continue;
      Bits trial = part.members;
      trial.set(y);
      if (auto rep = oracle.check(trial)) {
        part.rep = std::move(*rep);
        part.covered = oracle.losing_under(part.rep);
        part.members = trial | (part.covered & uncovered);
        for (auto i = part.members.find_first(); i != Bits::npos; i = part.members.find_next(i)) conflicts |= adjacency[i];
      }
    }
    uncovered -= part.members;
    uncovered -= part.covered;
    parts.push_back(std::move(part));
  }
  return parts;
}

// Saturation order: one group per clique vertex to start, then each uncovered
// coalition joins the separable group whose witness covers the most.
std::vector<Part> best_fit_cover(SeparationOracle& oracle, const std::vector<Bits>& adjacency,
                                  const std::vector<std::size_t>& clique) {
  const std::size_t m = oracle.size();
  std::vector<Part> parts;
  for (std::size_t v : clique) parts.push_back(singleton_part(oracle, v));
  while (true) {
    Bits open(m);
    open.set();
    for (const Part& p : parts) open -= p.members | p.covered;
    if (open.none()) break;
    std::size_t pick = Bits::npos, best_sat = 0;
    for (auto y = open.find_first(); y != Bits::npos; y = open.find_next(y)) {
      std::size_t sat = 0;
      for (const Part& p : parts)
        if (adjacency[y].intersects(p.members)) ++sat;
      if (pick == Bits::npos || sat > best_sat) {
        pick = y;
        best_sat = sat;
      }
    }
    // best fit: the group whose new witness leaves the fewest coalitions open
    std::optional<std::size_t> target;
    Part best;
    std::size_t best_open = 0;
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
      const Part& p = parts[idx];
      if (adjacency[pick].intersects(p.members)) continue;
      Bits trial = p.members;
      trial.set(pick);
      auto rep = oracle.check(trial);
      if (!rep) continue;
      Part candidate{trial, std::move(*rep), Bits(m)};
      candidate.covered = oracle.losing_under(candidate.rep);
      const std::size_t still_open = (open - candidate.covered).count();
      if (!target || still_open < best_open) {
        target = idx;
        best = std::move(candidate);
        best_open = still_open;
      }
    }
    const bool placed = target.has_value();
    if (placed) parts[*target] = std::move(best);
    if (!placed) parts.push_back(singleton_part(oracle, pick));
  }
  return parts;
}

// Drops groups whose coalitions are already losing under the other witnesses.
void drop_redundant(std::vector<Part>& parts, std::size_t m) {
  for (std::size_t i = parts.size(); i-- > 0;) {
    Bits rest(m);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) rest |= parts[j].covered;
    if (rest.count() == m) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

std::vector<Part> greedy_cover(SeparationOracle& oracle, const std::vector<Bits>& adjacency,
                               const std::vector<std::size_t>& clique) {
  auto grown = grow_cover(oracle, adjacency);
  auto fitted = best_fit_cover(oracle, adjacency, clique);
  drop_redundant(grown, oracle.size());
  drop_redundant(fitted, oracle.size());
  return fitted.size() <= grown.size() ? fitted : grown;
}

// Depth-first search for a cover of L_max by at most `target` separable groups.
class PartitionSearch {
public:
  PartitionSearch(SeparationOracle& oracle, const std::vector<Bits>& adjacency, std::size_t target, std::size_t lp_budget)
      : oracle_(oracle), adjacency_(adjacency), target_(target), lp_budget_(lp_budget) {}

  /// true: found (see parts()); false: none exists, unless aborted().
  bool run(const std::vector<std::size_t>& clique) {
    const std::size_t m = oracle_.size();
    assigned_ = Bits(m);
    for (std::size_t v : clique) {
      if (parts_.size() == target_) break;
      assigned_.set(v);
      parts_.push_back(singleton_part(oracle_, v));
    }
    start_lps_ = oracle_.lp_calls();
    return dfs();
  }

  bool aborted() const { return aborted_; }
  const std::vector<Part>& parts() const { return parts_; }

private:
  bool dfs() {
    if (oracle_.lp_calls() - start_lps_ > lp_budget_) {
      aborted_ = true;
      return false;
    }
    Bits open = ~assigned_;
    for (const Part& p : parts_) open -= p.covered;
    if (open.none()) return true;

    // pick the open coalition conflicting with the most groups
    std::size_t pick = Bits::npos;
    std::size_t best_sat = 0, best_deg = 0;
    for (auto y = open.find_first(); y != Bits::npos; y = open.find_next(y)) {
      std::size_t sat = 0;
      for (const Part& p : parts_)
        if (adjacency_[y].intersects(p.members)) ++sat;
      if (sat == target_) return false;
      const std::size_t deg = adjacency_[y].count();
      if (pick == Bits::npos || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = y;
        best_sat = sat;
        best_deg = deg;
      }
    }

    for (std::size_t idx = 0; idx < parts_.size(); ++idx) {
      if (adjacency_[pick].intersects(parts_[idx].members)) continue;
      Bits trial = parts_[idx].members;
      trial.set(pick);
      auto rep = oracle_.check(trial);
      if (!rep) continue;
      Part saved = parts_[idx];
      parts_[idx].members = trial;
      parts_[idx].rep = std::move(*rep);
      parts_[idx].covered = oracle_.losing_under(parts_[idx].rep);
      assigned_.set(pick);
      if (dfs()) return true;
      assigned_.reset(pick);
      parts_[idx] = std::move(saved);
      if (aborted_) return false;
    }
    if (parts_.size() < target_) {
      parts_.push_back(singleton_part(oracle_, pick));
      assigned_.set(pick);
      if (dfs()) return true;
      assigned_.reset(pick);
      parts_.pop_back();
    }
    return false;
  }

  SeparationOracle& oracle_;
  const std::vector<Bits>& adjacency_;
  std::size_t target_;
  std::size_t lp_budget_;
  std::size_t start_lps_ = 0;
  bool aborted_ = false;
  Bits assigned_;
  std::vector<Part> parts_;
};

IntersectionRep to_rep(int n, const std::vector<Part>& parts) {
  IntersectionRep rep;
  rep.n = n;
  for (const Part& p : parts) rep.parts.push_back(p.rep);
  return rep;
}

}  // namespace

SimpleGame intersect_games(const std::vector<WeightedRep>& parts, int n) {
  if (parts.empty()) throw InvalidInput("intersect_games needs at least one part");
  for (const WeightedRep& p : parts)
    if (p.player_count() != n) throw InvalidInput("intersect_games: part has the wrong player count");
  std::vector<FastRep> fast;
  fast.reserve(parts.size());
  for (const WeightedRep& p : parts) fast.emplace_back(p);
  return game_from_predicate(n, [&](Coalition x) {
    return std::all_of(fast.begin(), fast.end(), [x](const FastRep& f) { return f.wins(x); });
  });
}

bool verify_intersection_rep(const SimpleGame& g, const IntersectionRep& rep) {
  if (rep.parts.empty() || rep.n != g.player_count()) return false;
  std::vector<FastRep> fast;
  for (const WeightedRep& p : rep.parts) {
    if (p.player_count() != rep.n) return false;
    if (std::any_of(p.weights.begin(), p.weights.end(), [](const Rational& w) { return sgn(w) < 0; })) return false;
    fast.emplace_back(p);
  }
  for (Coalition x : g.min_winning())
    for (const FastRep& f : fast)
      if (!f.wins(x)) return false;
  for (Coalition y : maximal_losing(g))
    if (std::all_of(fast.begin(), fast.end(), [y](const FastRep& f) { return f.wins(y); })) return false;
  return true;
}

LmaxBound upper_bound_lmax(const SimpleGame& g) {
  const int n = g.player_count();
  const auto losing = maximal_losing(g);
  LmaxBound out;
  out.rep.n = n;
  if (losing.empty()) {
    out.bound = 1;
    out.rep.parts.push_back(all_winning_rep(n));
    return out;
  }
  for (Coalition y : losing) {
    auto part = separable(n, g.min_winning(), std::span<const Coalition>(&y, 1));
    if (!part) throw std::logic_error("a maximal losing coalition must be separable on its own");
    out.rep.parts.push_back(std::move(*part));
  }
  out.bound = losing.size();
  return out;
}

std::size_t IncompatibilityGraph::edge_count() const {
  std::size_t total = 0;
  for (const Bits& row : adjacency) total += row.count();
  return total / 2;
}

IncompatibilityGraph incompatibility_graph(const SimpleGame& g, std::span<const Coalition> losing) {
  const std::size_t m = losing.size();
  IncompatibilityGraph graph;
  graph.vertices.assign(losing.begin(), losing.end());
  graph.adjacency.assign(m, Bits(m));
  SeparationOracle oracle(g, losing);
  std::vector<Bits> compatible(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (compatible[i].test(j)) continue;
      if (pair_incompatibility_certificate(g, losing[i], losing[j])) {
        graph.adjacency[i].set(j);
        graph.adjacency[j].set(i);
        ++graph.certificate_edges;
        continue;
      }
      Bits pair(m);
      pair.set(i);
      pair.set(j);
      auto rep = oracle.check(pair);
      if (!rep) {
        graph.adjacency[i].set(j);
        graph.adjacency[j].set(i);
        continue;
      }
      // everything this witness makes losing is pairwise compatible
      const Bits cover = oracle.losing_under(*rep);
      for (auto a = cover.find_first(); a != Bits::npos; a = cover.find_next(a)) compatible[a] |= cover;
    }
  }
  graph.separability_lps = oracle.lp_calls();
  return graph;
}

bool pairwise_incompatible(const SimpleGame& g, std::span<const Coalition> ys) {
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const Coalition pair[2] = {ys[i], ys[j]};
      if (separable(g.player_count(), g.min_winning(), pair)) return false;
    }
  return true;
}

namespace {

class CliqueSearch {
public:
  CliqueSearch(const std::vector<Bits>& adjacency, std::size_t node_budget)
      : adj_(adjacency), node_budget_(node_budget) {}

  CliqueResult run(std::vector<std::size_t> seed) {
    best_ = std::move(seed);
    Bits all(adj_.size());
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    return {best_, !aborted_};
  }

private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    if (++nodes_ > node_budget_) {
      aborted_ = true;
      return;
    }
    // greedy colouring of the candidates: colour classes are independent sets
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = candidates;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bits avail = uncoloured;
      while (avail.any()) {
        const std::size_t v = avail.find_first();
        avail.reset(v);
        avail -= adj_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colour[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bits next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
      if (aborted_) return;
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t node_budget_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> greedy_clique(const std::vector<Bits>& adj) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < adj.size(); ++start) {
    std::vector<std::size_t> clique{start};
    Bits candidates = adj[start];
    while (candidates.any()) {
      // the candidate with the most neighbours among the candidates
      std::size_t pick = candidates.find_first();
      std::size_t pick_deg = (adj[pick] & candidates).count();
      for (auto v = candidates.find_next(pick); v != Bits::npos; v = candidates.find_next(v)) {
        const std::size_t deg = (adj[v] & candidates).count();
        if (deg > pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      }
      clique.push_back(pick);
      candidates &= adj[pick];
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

CliqueResult max_clique(const std::vector<Bits>& adjacency, std::size_t exact_limit) {
  if (adjacency.empty()) return {{}, true};
  auto seed = greedy_clique(adjacency);
  if (adjacency.size() > exact_limit) return {seed, false};
  CliqueResult r = CliqueSearch(adjacency, 5'000'000).run(std::move(seed));
  std::sort(r.members.begin(), r.members.end());
  return r;
}

KurzNapelBound kurz_napel_lower(const SimpleGame& g, const DimensionOptions& options) {
  const auto losing = maximal_losing(g);
  KurzNapelBound out;
  if (losing.empty()) return out;
  const auto graph = incompatibility_graph(g, losing);
  const auto clique = max_clique(graph.adjacency, options.clique_limit);
  out.maximum_clique = clique.maximum;
  for (std::size_t v : clique.members) out.witness.push_back(losing[v]);
  out.lower = std::max<std::size_t>(1, out.witness.size());
  if (out.witness.empty()) out.witness.push_back(losing.front());
  return out;
}

DimensionReport exact_dimension(const SimpleGame& g, const DimensionOptions& options) {
  const int n = g.player_count();
  DimensionReport report;
  const auto losing = maximal_losing(g);
  report.lmax_count = losing.size();
  report.witness_upper.n = n;
  if (losing.empty()) {
    report.exact = 1;
    report.witness_upper.parts.push_back(all_winning_rep(n));
    report.notes.push_back("no losing coalitions: dimension 1 by convention");
    return report;
  }
  if (auto rep = is_weighted(g)) {
    report.exact = 1;
    report.witness_lower = {losing.front()};
    report.witness_upper.parts.push_back(std::move(*rep));
    report.notes.push_back("weighted game");
    return report;
  }

  const auto graph = incompatibility_graph(g, losing);
  const auto clique = max_clique(graph.adjacency, options.clique_limit);
  report.clique_maximum = clique.maximum;
  for (std::size_t v : clique.members) report.witness_lower.push_back(losing[v]);
  // a non-weighted game needs at least two parts even when no pair is incompatible
  report.lower = std::max<std::size_t>(2, clique.members.size());
  if (!clique.maximum) report.notes.push_back("clique search not exhaustive: lower bound from a greedy clique");

  SeparationOracle oracle(g, losing);
  auto greedy = greedy_cover(oracle, graph.adjacency, clique.members);
  report.upper = greedy.size();
  report.witness_upper = to_rep(n, greedy);

  if (report.lower >= report.upper) {
    report.exact = report.upper;
    return report;
  }
  if (options.lower_only) {
    report.notes.push_back("cover search skipped");
    return report;
  }
  if (losing.size() > options.cover_budget) {
    report.budget_exceeded = true;
    report.notes.push_back("|L_max| = " + std::to_string(losing.size()) + " exceeds the cover budget " +
                           std::to_string(options.cover_budget));
    return report;
  }
  for (std::size_t target = report.lower; target < report.upper; ++target) {
    PartitionSearch search(oracle, graph.adjacency, target, options.lp_budget);
    if (search.run(clique.members)) {
      report.exact = target;
      report.upper = target;
      report.witness_upper = to_rep(n, search.parts());
      return report;
    }
    if (search.aborted()) {
      report.budget_exceeded = true;
      report.notes.push_back("cover search exceeded the LP budget at " + std::to_string(target) + " parts");
      return report;
    }
    report.notes.push_back("no cover of L_max by " + std::to_string(target) + " separable groups");
    report.lower = target + 1;
  }
  report.exact = report.upper;
  return report;
}

IntersectionRep conjunctive_intersection_rep(const HierarchicalSpec& spec) {
  validate_structure(spec);
  if (spec.kind != HierarchyKind::Conjunctive) throw PreconditionError("conjunctive_intersection_rep needs a conjunctive spec");
  IntersectionRep rep;
  rep.n = spec.player_count();
  int prefix = 0;
  for (std::size_t s = 0; s < spec.sizes.size(); ++s) {
    prefix += spec.sizes[s];
    WeightedRep part;
    part.weights.assign(static_cast<std::size_t>(rep.n), Rational(0));
    for (int p = 0; p < prefix; ++p) part.weights[static_cast<std::size_t>(p)] = 1;
    part.quota = spec.thresholds[s];
    rep.parts.push_back(std::move(part));
  }
  return rep;
}

DimensionReport codimension(const SimpleGame& g, const DimensionOptions& options) {
  return exact_dimension(dual(g), options);
}

}  // namespace simplegames
