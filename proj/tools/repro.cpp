#include "repro.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "simplegames/boolean.hpp"
#include "simplegames/certificates.hpp"
#include "simplegames/desirability.hpp"
#include "simplegames/dimension.hpp"
#include "simplegames/hierarchical.hpp"
#include "simplegames/lpsep.hpp"

namespace sgtool {

using namespace simplegames;

namespace {

std::string opt_to_string(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "unknown"; }

std::string models_to_string(std::vector<Model> models) {
  std::sort(models.begin(), models.end());
  std::string s;
  for (const Model& m : models) s += (s.empty() ? "" : " ") + model_to_string(m);
  return s;
}

WeightedRep rep_of(std::vector<Rational> weights, Rational quota) { return WeightedRep{std::move(weights), std::move(quota)}; }

std::vector<Check> prop5() {
  std::vector<Check> out;
  DimensionOptions options;
  options.cover_budget = 200;
  for (int d = 2; d <= 3; ++d) {
    const std::string tag = "d=" + std::to_string(d) + ": ";
    const HierarchicalSpec spec{HierarchyKind::Disjunctive, {d, 2 * d}, {2, 4}};
    const SimpleGame g = build(spec);
    out.push_back({tag + "not weighted", !is_weighted(g), ""});
    const auto cert = find_certificate(g, 2);
    out.push_back({tag + "length-2 certificate found and verified",
                   cert.certificate && verify_certificate(g, *cert.certificate),
                   cert.certificate ? cert.certificate->to_string() : "none"});
    const auto rough = is_roughly_weighted(g);
    out.push_back({tag + "roughly weighted", rough && verify_representation(g, *rough), rough ? rough->to_string() : "none"});
    // Y_i = {a_i, b_2i, b_2i+1}: a's are players 0..d-1, b's follow
    std::vector<Coalition> ys;
    for (int i = 0; i < d; ++i) ys.push_back(Coalition::of({i, d + 2 * i, d + 2 * i + 1}));
    const bool all_losing = std::none_of(ys.begin(), ys.end(), [&](Coalition y) { return g.is_winning(y); });
    out.push_back({tag + "witness set Y_0..Y_" + std::to_string(d - 1) + " losing and pairwise incompatible",
                   all_losing && pairwise_incompatible(g, ys), ""});
    const auto kn = kurz_napel_lower(g);
    out.push_back({tag + "clique lower bound >= d", kn.lower >= static_cast<std::size_t>(d), "lower=" + std::to_string(kn.lower)});
    const auto rep = exact_dimension(g, options);
    const std::size_t lmax = maximal_losing(g).size();
    out.push_back({tag + "exact dimension in [d, |L_max|]",
                   rep.exact && *rep.exact >= static_cast<std::size_t>(d) && *rep.exact <= lmax &&
                       verify_intersection_rep(g, rep.witness_upper),
                   "exact=" + opt_to_string(rep.exact) + " |L_max|=" + std::to_string(lmax)});
  }
  return out;
}

std::vector<Check> os3() {
  std::vector<Check> out;
  const auto w = os3_witness_set(2, 3);
  const SimpleGame& g = w.game;
  out.push_back({"witness set has k^(m-1) = 4 coalitions", w.witnesses.size() == 4, std::to_string(w.witnesses.size())});
  out.push_back({"witnesses are losing",
                 std::none_of(w.witnesses.begin(), w.witnesses.end(), [&](Coalition y) { return g.is_winning(y); }), ""});
  out.push_back({"witnesses are pairwise incompatible", pairwise_incompatible(g, w.witnesses), ""});
  const auto losing = maximal_losing(g);
  const auto part = equivalence_classes(g);
  const auto shiftmax = shift_maximal_losing(g, part);
  std::size_t on_shiftmax = 0;
  for (Coalition y : losing)
    if (std::find(shiftmax.begin(), shiftmax.end(), model_of(part, y)) != shiftmax.end()) ++on_shiftmax;
  out.push_back({"|L_max| = k^m (2k-1)^(m-1) = 72", losing.size() == 72,
                 "|L_max|=" + std::to_string(losing.size()) + "; maximal losing coalitions with a shift-maximal model: " +
                     std::to_string(on_shiftmax)});
  const auto kn = kurz_napel_lower(g);
  out.push_back({"clique lower bound >= 4", kn.lower >= 4, "lower=" + std::to_string(kn.lower)});
  return out;
}

std::vector<Check> osconj() {
  std::vector<Check> out;
  const HierarchicalSpec spec{HierarchyKind::Conjunctive, {4, 4, 4}, {2, 4, 7}};
  const SimpleGame g = build(spec);
  out.push_back({"truly 3-partite", validate_partiteness(spec).true_m_partite, ""});
  const auto rep = conjunctive_intersection_rep(spec);
  out.push_back({"3-part intersection verifies", rep.size() == 3 && verify_intersection_rep(g, rep), ""});
  const auto closed = shiftmax_models_closed_form(spec);
  const std::vector<Model> expected{{1, 4, 4}, {3, 0, 4}, {4, 2, 0}};
  out.push_back({"closed-form shift-maximal models are {1,2^4,3^4} {1^3,3^4} {1^4,2^2}",
                 std::set<Model>(closed.begin(), closed.end()) == std::set<Model>(expected.begin(), expected.end()) &&
                     closed.size() == 3,
                 models_to_string(closed)});
  const auto scanned = shift_maximal_losing(g);
  out.push_back({"closed form matches the model-space scan",
                 std::set<Model>(closed.begin(), closed.end()) == std::set<Model>(scanned.begin(), scanned.end()),
                 models_to_string(scanned)});
  // L1 with model (1,4,4) and L2 with model (4,2,0): models two apart
  const Coalition l1 = Coalition::of({0, 4, 5, 6, 7, 8, 9, 10, 11});
  const Coalition l2 = Coalition::of({0, 1, 2, 3, 4, 5});
  const TradingTransform swap{{Coalition::of({0, 1, 4, 5, 6, 7, 10, 11}), Coalition::of({0, 2, 3, 4, 5, 8, 9})}, {l1, l2}};
  out.push_back({"transfer certificate ((L1+x)-{y,z}, (L2-x)+{y,z}; L1, L2) verifies",
                 verify_trading_transform(swap) && verify_certificate(g, swap), swap.to_string()});
  out.push_back({"pair search finds a length-2 certificate for L1, L2",
                 pair_incompatibility_certificate(g, l1, l2).has_value(), ""});
  const auto dim = exact_dimension(g);
  out.push_back({"exact dimension in [ceil(m/2), m] = [2, 3]", dim.exact && *dim.exact >= 2 && *dim.exact <= 3,
                 "exact=" + opt_to_string(dim.exact)});
  return out;
}

std::vector<Check> sec4() {
  std::vector<Check> out;
  const SimpleGame h = build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}});
  const Rational eleven_tenths(11, 10);
  IntersectionRep first{7, {rep_of({4, eleven_tenths, 1, 1, 1, 1, 1}, 5), rep_of({eleven_tenths, 4, 1, 1, 1, 1, 1}, 5)}};
  out.push_back({"first representation (weights 4 and 11/10, quota 5) intersects to H", verify_intersection_rep(h, first) &&
                     intersect_games(first.parts, 7) == h, ""});
  IntersectionRep second{7, {}};
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        std::vector<Rational> weights{3, 3, 0, 0, 0, 0, 0};
        for (int i : {a, b, c}) weights[static_cast<std::size_t>(2 + i)] = 2;
        second.parts.push_back(rep_of(std::move(weights), 6));
      }
  out.push_back({"second representation (10 games G_X) intersects to H",
                 second.size() == 10 && verify_intersection_rep(h, second) && intersect_games(second.parts, 7) == h, ""});
  const auto dim = exact_dimension(h);
  out.push_back({"dim H = 2", dim.exact == std::optional<std::size_t>(2), "exact=" + opt_to_string(dim.exact)});
  const auto part = equivalence_classes(h);
  const auto min_models = minimal_winning_models(h, part);
  out.push_back({"minimal winning models are {1^2} {1,2^4} {2^5}",
                 std::set<Model>(min_models.begin(), min_models.end()) == std::set<Model>{{2, 0}, {1, 4}, {0, 5}},
                 models_to_string(min_models)});
  out.push_back({"the only shift-maximal losing model is {1,2^3}", shift_maximal_losing(h, part) == std::vector<Model>{{1, 3}},
                 models_to_string(shift_maximal_losing(h, part))});
  return out;
}

std::vector<Check> delta1() {
  std::vector<Check> out;
  const std::vector<int> n{2, 3, 3}, k{2, 3, 5};
  const SimpleGame g = build_delta1(n, k);
  auto cumulative = [&](int classes, int quota) {
    std::vector<Rational> w(8, Rational(0));
    int upto = 0;
    for (int c = 0; c < classes; ++c) upto += n[static_cast<std::size_t>(c)];
    for (int p = 0; p < upto; ++p) w[static_cast<std::size_t>(p)] = 1;
    return BoolFormula::make_leaf(rep_of(std::move(w), quota));
  };
  const BoolFormula f = BoolFormula::make_or({cumulative(1, k[0]), BoolFormula::make_and({cumulative(2, k[1]), cumulative(3, k[2])})});
  out.push_back({"G1 or (G2 and G3) represents Delta_1(n=(2,3,3), k=(2,3,5))", verify_boolean_rep(g, f) && formula_game(f, 8) == g,
                 f.to_string()});
  out.push_back({"formula size is 3", formula_size(f) == 3, ""});
  const BoolFormula fd = formula_dual(f);
  out.push_back({"dual formula represents the dual game", formula_game(fd, 8) == dual(g), fd.to_string()});
  out.push_back({"formula size preserved under duality", formula_size(fd) == 3, ""});
  DimensionOptions options;
  options.cover_budget = 200;
  const auto dim = exact_dimension(g, options);
  out.push_back({"classical dimension computed", dim.exact.has_value(), "exact=" + opt_to_string(dim.exact)});
  return out;
}

std::vector<Check> codim() {
  std::vector<Check> out;
  struct Named {
    std::string name;
    SimpleGame game;
  };
  std::vector<Named> games{
      {"majority n=5", game_from_predicate(5, [](Coalition x) { return x.size() >= 3; })},
      {"H_E((2,4),(2,4))", build({HierarchyKind::Disjunctive, {2, 4}, {2, 4}})},
      {"H_E((2,5),(2,5))", build({HierarchyKind::Disjunctive, {2, 5}, {2, 5}})},
      {"H_A((2,3,2),(1,2,3))", build({HierarchyKind::Conjunctive, {2, 3, 2}, {1, 2, 3}})},
      {"Delta_1((2,2,2),(1,2,3))", build_delta1({2, 2, 2}, {1, 2, 3})},
  };
  for (const Named& item : games) {
    const auto dim = exact_dimension(item.game);
    const auto co = codimension(dual(item.game));
    out.push_back({"codim(dual G) = dim G for " + item.name, dim.exact && co.exact && *dim.exact == *co.exact,
                   "dim=" + opt_to_string(dim.exact) + " codim(dual)=" + opt_to_string(co.exact)});
  }
  const auto w = os3_witness_set(2, 3);
  const auto bound = codimension(dual(w.game), DimensionOptions{.lower_only = true});
  out.push_back({"dual of the OS3 game (k=2, m=3) has codimension >= 4", bound.lower >= 4, "lower=" + std::to_string(bound.lower)});
  const SimpleGame maj = game_from_predicate(5, [](Coalition x) { return x.size() >= 3; });
  const auto maj_co = codimension(maj);
  out.push_back({"self-dual majority game has codimension 1", maj_co.exact == std::optional<std::size_t>(1), ""});
  return out;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"prop5", "os3", "osconj", "sec4", "delta1", "codim"};
  return names;
}

std::vector<Check> run_scenario(const std::string& name) {
  if (name == "prop5") return prop5();
  if (name == "os3") return os3();
  if (name == "osconj") return osconj();
  if (name == "sec4") return sec4();
  if (name == "delta1") return delta1();
  if (name == "codim") return codim();
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

bool print_checks(std::ostream& out, const std::string& scenario, const std::vector<Check>& checks) {
  std::size_t passed = 0;
  for (const Check& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << '\n';
    passed += c.pass ? 1 : 0;
  }
  out << scenario << ": " << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size();
}

}  // namespace sgtool
