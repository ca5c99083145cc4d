#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplegames/game.hpp"
#include "simplegames/hierarchical.hpp"
#include "simplegames/lpsep.hpp"

namespace simplegames {

/// A game written as the intersection of weighted games over the same players.
struct IntersectionRep {
  int n = 0;
  std::vector<WeightedRep> parts;

  std::size_t size() const { return parts.size(); }
};

/// The game winning exactly where every part wins. Throws InvalidInput for
/// an empty part list, inconsistent player counts or n > kExhaustiveLimit.
SimpleGame intersect_games(const std::vector<WeightedRep>& parts, int n);

/// Exact check that the parts intersect to g: every minimal winning coalition
/// wins in every part and every maximal losing coalition loses in some part.
bool verify_intersection_rep(const SimpleGame& g, const IntersectionRep& rep);

struct LmaxBound {
  std::size_t bound = 0;
  IntersectionRep rep;
};

/// One part per maximal losing coalition. Games without losing coalitions
/// get the conventional single all-winning part.
LmaxBound upper_bound_lmax(const SimpleGame& g);

struct DimensionOptions {
  /// Largest |L_max| for which the exact cover search runs.
  std::size_t cover_budget = 30;
  /// Largest graph for which the maximum clique is searched exactly.
  std::size_t clique_limit = 200;
  /// Separability LPs allowed inside the exact cover search.
  std::size_t lp_budget = 200'000;
  /// Skip the cover search entirely.
  bool lower_only = false;
};

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Vertices are losing coalitions; an edge joins two coalitions that no single
/// weighted game containing all winning coalitions can make both losing.
struct IncompatibilityGraph {
  std::vector<Coalition> vertices;
  std::vector<Bits> adjacency;
  std::size_t separability_lps = 0;
  std::size_t certificate_edges = 0;

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
  std::size_t edge_count() const;
};

IncompatibilityGraph incompatibility_graph(const SimpleGame& g, std::span<const Coalition> losing);

/// Every pair of `ys` is inseparable (decided by the exact LP).
bool pairwise_incompatible(const SimpleGame& g, std::span<const Coalition> ys);

struct CliqueResult {
  std::vector<std::size_t> members;
  bool maximum = true;
};

/// Maximum clique by branch and bound with a greedy colouring bound. Graphs
/// larger than `exact_limit` only get a greedy clique (maximum = false).
CliqueResult max_clique(const std::vector<Bits>& adjacency, std::size_t exact_limit);

struct KurzNapelBound {
  std::size_t lower = 1;
  std::vector<Coalition> witness;
  bool maximum_clique = true;
};

/// Largest set of pairwise incompatible maximal losing coalitions found.
KurzNapelBound kurz_napel_lower(const SimpleGame& g, const DimensionOptions& options = {});

struct DimensionReport {
  std::size_t lower = 1;
  std::size_t upper = 1;
  std::optional<std::size_t> exact;
  std::vector<Coalition> witness_lower;
  IntersectionRep witness_upper;
  std::size_t lmax_count = 0;
  bool clique_maximum = true;
  bool budget_exceeded = false;
  std::vector<std::string> notes;
};

/// Bounds and, within budget, the exact dimension: the fewest separable
/// groups covering L_max. The upper witness is a verified intersection of
/// exactly `upper` weighted games (of `exact` ones when exact is set).
DimensionReport exact_dimension(const SimpleGame& g, const DimensionOptions& options = {});

/// Parts G_s with weight 1 on classes 1..s and quota k_s.
IntersectionRep conjunctive_intersection_rep(const HierarchicalSpec& spec);

/// Codimension (fewest weighted games whose union is g) as the dimension of
/// the dual game.
DimensionReport codimension(const SimpleGame& g, const DimensionOptions& options = {});

}  // namespace simplegames
