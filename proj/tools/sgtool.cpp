#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "repro.hpp"
#include "simplegames/certificates.hpp"
#include "simplegames/desirability.hpp"
#include "simplegames/dimension.hpp"
#include "simplegames/errors.hpp"
#include "simplegames/gamefile.hpp"
#include "simplegames/hierarchical.hpp"
#include "simplegames/lpsep.hpp"

using namespace simplegames;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

struct InputOptions {
  std::string file;
  std::string hier;
  std::string sizes;
  std::string thresholds;
  std::vector<std::string> os3;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.file, "Game file ('-' reads stdin)");
  cmd->add_option("--game", in.file, "Game file ('-' reads stdin)");
  cmd->add_option("--hier", in.hier, "Hierarchical game kind: disj or conj");
  cmd->add_option("--n", in.sizes, "Class sizes, e.g. 2,5");
  cmd->add_option("--k", in.thresholds, "Thresholds, e.g. 2,5");
  cmd->add_option("--os3", in.os3, "Witness-set construction: --os3 k=2 m=3")->expected(2);
}

int parse_assignment(const std::string& text, const std::string& key) {
  if (!text.starts_with(key + "=")) throw InvalidInput("expected " + key + "=<int>, got '" + text + "'");
  const auto values = parse_int_list(std::string_view(text).substr(key.size() + 1));
  if (values.size() != 1) throw InvalidInput("expected a single integer in '" + text + "'");
  return values[0];
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

struct LoadedGame {
  SimpleGame game;
  std::string description;
};

LoadedGame load_game(const InputOptions& in) {
  const int sources = !in.file.empty() + !in.hier.empty() + !in.os3.empty();
  if (sources != 1) throw InvalidInput("give exactly one of: a game file, --hier, --os3");
  if (!in.hier.empty()) {
    if (in.sizes.empty() || in.thresholds.empty()) throw InvalidInput("--hier needs --n and --k");
    HierarchicalSpec spec{parse_hierarchy_kind(in.hier), parse_int_list(in.sizes), parse_int_list(in.thresholds)};
    validate_structure(spec);
    return {build(spec), spec.to_string()};
  }
  if (!in.os3.empty()) {
    const int k = parse_assignment(in.os3[0], "k");
    const int m = parse_assignment(in.os3[1], "m");
    if (k < 2 || m < 2) throw InvalidInput("--os3 needs k >= 2 and m >= 2");
    if (k + 2 * k * (m - 1) > kMaxPlayers) throw InvalidInput("--os3 construction exceeds the player cap");
    auto w = os3_witness_set(k, m);
    return {std::move(w.game), w.spec.to_string()};
  }
  std::string text;
  if (in.file == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(in.file);
    if (!f) throw InvalidInput("cannot open '" + in.file + "'");
    text = read_all(f);
  }
  const GameFile file = parse_game_file(text);
  std::string desc = file.source == GameFile::Source::Hierarchical ? file.spec->to_string()
                     : file.source == GameFile::Source::Formula    ? "formula " + file.formula->to_string()
                                                                   : "coalition list";
  return {file.game(), desc};
}

std::string join_coalitions(const std::vector<Coalition>& cs) {
  std::string s;
  for (Coalition c : cs) s += (s.empty() ? "" : " ") + c.to_string();
  return s;
}

std::string join_models(const std::vector<Model>& models) {
  std::string s;
  for (const Model& m : models) s += (s.empty() ? "" : " ") + model_to_string(m);
  return s.empty() ? "(none)" : s;
}

json rep_json(const std::vector<Rational>& weights, const Rational& quota) {
  json w = json::array();
  for (const Rational& r : weights) w.push_back(to_string(r));
  return json{{"quota", to_string(quota)}, {"weights", w}};
}

json coalitions_json(const std::vector<Coalition>& cs) {
  json arr = json::array();
  for (Coalition c : cs) arr.push_back(c.members());
  return arr;
}

json models_json(const std::vector<Model>& models) {
  json arr = json::array();
  for (const Model& m : models) arr.push_back(m);
  return arr;
}

Coalition veto_of(const SimpleGame& g) {
  if (g.min_winning().empty()) return {};
  Coalition v = g.grand_coalition();
  for (Coalition c : g.min_winning()) v = v & c;
  return v;
}

Coalition dummy_of(const SimpleGame& g) {
  Coalition used;
  for (Coalition c : g.min_winning()) used = used | c;
  return g.grand_coalition() - used;
}

struct AnalyzeFlags {
  bool certificates = false;
  std::size_t max_cert_len = kDefaultCertificateLength;
  bool json_output = false;
};

int cmd_analyze(const InputOptions& in, const AnalyzeFlags& flags) {
  const LoadedGame loaded = load_game(in);
  const SimpleGame& g = loaded.game;
  if (g.player_count() > kExhaustiveLimit)
    throw InvalidInput("analyze is limited to " + std::to_string(kExhaustiveLimit) + " players");
  const auto losing = maximal_losing(g);
  json j;
  std::ostringstream text;
  j["source"] = loaded.description;
  j["players"] = g.player_count();
  j["min_winning_count"] = g.min_winning().size();
  j["max_losing_count"] = losing.size();
  text << "game: " << loaded.description << "\n";
  text << "players: " << g.player_count() << "\n";
  text << "|W_min|: " << g.min_winning().size() << "\n";
  text << "|L_max|: " << losing.size() << "\n";

  std::optional<ClassPartition> part;
  try {
    part = equivalence_classes(g);
  } catch (const CompletenessViolation& e) {
    text << "complete: no (players " << e.first() << " and " << e.second() << " are incomparable)\n";
    j["complete"] = false;
    j["incomparable_pair"] = {e.first(), e.second()};
  }
  if (part) {
    j["complete"] = true;
    std::string sizes, classes;
    json cls = json::array();
    for (const auto& c : part->classes) {
      sizes += (sizes.empty() ? "" : "+") + std::to_string(c.size());
      std::vector<int> members(c.begin(), c.end());
      classes += (classes.empty() ? "" : " ") + Coalition::of(members).to_string();
      cls.push_back(members);
    }
    text << "complete: yes\n";
    text << "classes: " << sizes << "  " << classes << "\n";
    j["classes"] = cls;
  }
  text << "veto players: " << veto_of(g).to_string() << "\n";
  text << "dummy players: " << dummy_of(g).to_string() << "\n";
  j["veto"] = veto_of(g).members();
  j["dummy"] = dummy_of(g).members();
  if (part) {
    const auto mw = minimal_winning_models(g, *part);
    const auto ml = maximal_losing_models(g, *part);
    const auto smw = shift_minimal_winning(g, *part);
    const auto sml = shift_maximal_losing(g, *part);
    text << "minimal winning models: " << join_models(mw) << "\n";
    text << "maximal losing models: " << join_models(ml) << "\n";
    text << "shift-minimal winning models: " << join_models(smw) << "\n";
    text << "shift-maximal losing models: " << join_models(sml) << "\n";
    j["models"] = {{"minimal_winning", models_json(mw)},
                   {"maximal_losing", models_json(ml)},
                   {"shift_minimal_winning", models_json(smw)},
                   {"shift_maximal_losing", models_json(sml)}};
  }

  const auto weighted = is_weighted(g);
  if (weighted) {
    const bool ok = verify_representation(g, *weighted);
    if (!ok) throw std::logic_error("weighted witness failed verification");
    text << "WEIGHTED: yes; witness verifies; " << weighted->to_string() << "\n";
    j["weighted"] = {{"verdict", true}, {"verified", ok}, {"witness", rep_json(weighted->weights, weighted->quota)}};
  } else {
    text << "WEIGHTED: no\n";
    j["weighted"] = {{"verdict", false}};
  }
  const auto rough = weighted ? std::optional<RoughRep>(RoughRep{weighted->weights, weighted->quota}) : is_roughly_weighted(g);
  if (rough) {
    const bool ok = verify_representation(g, *rough);
    if (!ok) throw std::logic_error("rough witness failed verification");
    text << "ROUGHLY WEIGHTED: yes; witness verifies; " << rough->to_string() << "\n";
    j["roughly_weighted"] = {{"verdict", true}, {"verified", ok}, {"witness", rep_json(rough->weights, rough->quota)}};
  } else {
    text << "ROUGHLY WEIGHTED: no\n";
    j["roughly_weighted"] = {{"verdict", false}};
  }
  if (flags.certificates) {
    const auto search = find_certificate(g, flags.max_cert_len);
    if (search.certificate) {
      if (!verify_certificate(g, *search.certificate)) throw std::logic_error("certificate failed verification");
      text << search.certificate->to_string() << "\n";
      j["certificate"] = {{"length", search.certificate->length()},
                          {"win", coalitions_json(search.certificate->pre)},
                          {"lose", coalitions_json(search.certificate->post)}};
    } else {
      text << "CERT none up to length " << search.searched_up_to << " (bound-relative, not a weightedness proof)\n";
      j["certificate"] = {{"length", nullptr}, {"searched_up_to", search.searched_up_to}};
    }
  }
  std::cout << (flags.json_output ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

struct DimensionFlags {
  bool exact = false;
  bool lower_only = false;
  bool codim = false;
  std::size_t budget = DimensionOptions{}.cover_budget;
  bool json_output = false;
};

int cmd_dimension(const InputOptions& in, const DimensionFlags& flags) {
  const LoadedGame loaded = load_game(in);
  const SimpleGame target = flags.codim ? dual(loaded.game) : loaded.game;
  DimensionOptions options;
  options.cover_budget = flags.budget;
  // without --exact only the greedy cover runs
  options.lower_only = !flags.exact;
  DimensionReport report;
  if (flags.lower_only) {
    const auto kn = kurz_napel_lower(target, options);
    report.lower = kn.lower;
    report.witness_lower = kn.witness;
    report.clique_maximum = kn.maximum_clique;
    report.lmax_count = maximal_losing(target).size();
    report.upper = std::max<std::size_t>(1, report.lmax_count);
  } else {
    report = exact_dimension(target, options);
    if (!verify_intersection_rep(target, report.witness_upper)) throw std::logic_error("upper-bound witness failed verification");
  }
  const char* what = flags.codim ? "codimension" : "dimension";
  const bool budget_hit = flags.exact && !report.exact;

  if (flags.json_output) {
    json parts = json::array();
    for (const WeightedRep& p : report.witness_upper.parts) parts.push_back(rep_json(p.weights, p.quota));
    json j{{"source", loaded.description},
           {"measure", what},
           {"players", loaded.game.player_count()},
           {"lmax_count", report.lmax_count},
           {"lower", report.lower},
           {"upper", report.upper},
           {"exact", report.exact ? json(*report.exact) : json(nullptr)},
           {"clique_maximum", report.clique_maximum},
           {"budget_exceeded", report.budget_exceeded || budget_hit},
           {"witness_lower", coalitions_json(report.witness_lower)},
           {"witness_upper", parts},
           {"notes", report.notes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "game: " << loaded.description << "\n";
    if (flags.codim) std::cout << "computing the dimension of the dual game\n";
    std::cout << "|L_max|: " << report.lmax_count << "\n";
    std::cout << "lower=" << report.lower << " upper=" << report.upper
              << " exact=" << (report.exact ? std::to_string(*report.exact) : "unknown") << "\n";
    std::cout << "measure: " << what << "\n";
    std::cout << "clique: " << report.witness_lower.size() << " pairwise incompatible maximal losing coalitions ("
              << (report.clique_maximum ? "maximum" : "greedy, not maximum") << ")\n";
    std::cout << "witness_lower: " << join_coalitions(report.witness_lower) << "\n";
    if (!flags.lower_only) {
      std::cout << "witness_upper: intersection of " << report.witness_upper.size() << " weighted games (verified)\n";
      for (const WeightedRep& p : report.witness_upper.parts) std::cout << "  " << p.to_string() << "\n";
    }
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
  }
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_repro(const std::string& name) {
  bool all = true;
  const auto& names = sgtool::scenario_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw InvalidInput("unknown scenario '" + name + "' (known: prop5, os3, osconj, sec4, delta1, codim, all)");
  for (const std::string& s : names) {
    if (name != "all" && s != name) continue;
    all = sgtool::print_checks(std::cout, s, sgtool::run_scenario(s)) && all;
  }
  return all ? kExitOk : kExitInternal;
}

int cmd_export(const InputOptions& in) {
  const LoadedGame loaded = load_game(in);
  std::cout << serialize_game_file(game_file_from(loaded.game));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple games: weightedness, certificates and dimension"};
  app.require_subcommand(1);

  InputOptions analyze_in, dimension_in, export_in;
  AnalyzeFlags analyze_flags;
  DimensionFlags dimension_flags;
  std::string scenario;

  auto* analyze = app.add_subcommand("analyze", "Completeness, classes, models and (rough) weightedness");
  add_input_options(analyze, analyze_in);
  analyze->add_flag("--certificates", analyze_flags.certificates, "Search a certificate of non-weightedness");
  analyze->add_option("--max-cert-len", analyze_flags.max_cert_len, "Longest certificate searched")->check(CLI::Range(2, 64));
  analyze->add_flag("--json", analyze_flags.json_output, "Structured output");

  auto* dimension = app.add_subcommand("dimension", "Dimension bounds and exact dimension");
  add_input_options(dimension, dimension_in);
  dimension->add_flag("--exact", dimension_flags.exact, "Run the exact cover search");
  dimension->add_option("--budget", dimension_flags.budget, "Largest |L_max| for the exact search");
  dimension->add_flag("--lower-only", dimension_flags.lower_only, "Only the clique lower bound");
  dimension->add_flag("--codim", dimension_flags.codim, "Codimension (dimension of the dual game)");
  dimension->add_flag("--json", dimension_flags.json_output, "Structured output");

  auto* repro = app.add_subcommand("repro", "Re-run a reproduction scenario");
  repro->add_option("name", scenario, "prop5, os3, osconj, sec4, delta1, codim or all")->required();

  auto* exporter = app.add_subcommand("export", "Print the game as a canonical coalition-list game file");
  add_input_options(exporter, export_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_in, analyze_flags);
    if (dimension->parsed()) return cmd_dimension(dimension_in, dimension_flags);
    if (repro->parsed()) return cmd_repro(scenario);
    if (exporter->parsed()) return cmd_export(export_in);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
