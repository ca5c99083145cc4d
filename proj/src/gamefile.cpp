#include "simplegames/gamefile.hpp"

#include <charconv>
#include <sstream>

#include "simplegames/errors.hpp"

namespace simplegames {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto v = to_int(piece);
    if (!v) throw InvalidInput("not an integer list: '" + std::string(text) + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

HierarchyKind parse_hierarchy_kind(std::string_view text) {
  if (text == "disj" || text == "disjunctive") return HierarchyKind::Disjunctive;
  if (text == "conj" || text == "conjunctive") return HierarchyKind::Conjunctive;
  throw InvalidInput("hierarchy kind must be disj or conj, got '" + std::string(text) + "'");
}

SimpleGame GameFile::game() const {
  switch (source) {
    case Source::Coalitions:
      return make_game(n, winning);
    case Source::Hierarchical:
      return build(*spec);
    case Source::Formula:
      return formula_game(*formula, n);
  }
  return {};
}

GameFile parse_game_file(std::string_view text) {
  GameFile file;
  bool header = false;
  std::optional<int> declared_n;
  std::size_t n_line = 0;
  bool has_source = false;
  std::vector<std::pair<std::size_t, std::vector<Token>>> coalition_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto claim_source = [&](GameFile::Source s, std::size_t line, std::size_t column) {
    if (has_source && (file.source != s || s != GameFile::Source::Coalitions))
      throw ParseError(line, column, "a game file holds exactly one of: w lines, hier, formula");
    file.source = s;
    has_source = true;
  };

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const Token& key = words[0];
    if (!header) {
      if (key.text != "sg") throw ParseError(line_no, key.column, "expected header 'sg 1'");
      if (words.size() != 2 || words[1].text != "1")
        throw ParseError(line_no, words.size() > 1 ? words[1].column : key.column + 2, "unsupported version (expected 'sg 1')");
      header = true;
    } else if (key.text == "n") {
      if (declared_n) throw ParseError(line_no, key.column, "duplicate n line");
      if (words.size() != 2) throw ParseError(line_no, key.column, "expected 'n <player count>'");
      const auto v = to_int(words[1].text);
      if (!v || *v < 0 || *v > kMaxPlayers)
        throw ParseError(line_no, words[1].column, "player count must be an integer in [0, " + std::to_string(kMaxPlayers) + "]");
      declared_n = *v;
      n_line = line_no;
    } else if (key.text == "w") {
      claim_source(GameFile::Source::Coalitions, line_no, key.column);
      coalition_lines.emplace_back(line_no, std::vector<Token>(words.begin() + 1, words.end()));
    } else if (key.text == "hier") {
      claim_source(GameFile::Source::Hierarchical, line_no, key.column);
      if (words.size() != 4) throw ParseError(line_no, key.column, "expected 'hier <disj|conj> n=<list> k=<list>'");
      HierarchicalSpec spec;
      try {
        spec.kind = parse_hierarchy_kind(words[1].text);
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, words[1].column, e.what());
      }
      for (std::size_t i : {std::size_t{2}, std::size_t{3}}) {
        const std::string_view prefix = i == 2 ? "n=" : "k=";
        if (!words[i].text.starts_with(prefix)) throw ParseError(line_no, words[i].column, "expected '" + std::string(prefix) + "<list>'");
        try {
          (i == 2 ? spec.sizes : spec.thresholds) = parse_int_list(words[i].text.substr(2));
        } catch (const InvalidInput& e) {
          throw ParseError(line_no, words[i].column + 2, e.what());
        }
      }
      try {
        validate_structure(spec);
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, key.column, e.what());
      }
      file.spec = std::move(spec);
    } else if (key.text == "formula") {
      claim_source(GameFile::Source::Formula, line_no, key.column);
      const std::size_t offset = words[0].column + 7;
      const std::string_view rest = line.substr(std::min(line.size(), offset - 1));
      try {
        file.formula = parse_formula(rest);
      } catch (const InvalidInput& e) {
        // parse_formula reports "formula column c: ..."; rebase the column onto the line
        std::string msg = e.what();
        std::size_t column = offset;
        if (msg.starts_with("formula column ")) {
          const auto colon = msg.find(':');
          if (auto c = to_int(std::string_view(msg).substr(15, colon - 15))) column = offset + static_cast<std::size_t>(*c) - 1;
          msg = msg.substr(colon + 2);
        }
        throw ParseError(line_no, column, msg);
      }
    } else {
      throw ParseError(line_no, key.column, "unknown directive '" + std::string(key.text) + "'");
    }
    if (end == text.size()) break;
  }

  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty game file (expected header 'sg 1')");
  // an n line alone describes the game without winning coalitions
  if (!has_source && !declared_n) throw ParseError(line_no, 1, "no game given: add an n line with w lines, a hier line or a formula line");

  switch (file.source) {
    case GameFile::Source::Hierarchical:
      file.n = file.spec->player_count();
      if (declared_n && *declared_n != file.n)
        throw ParseError(n_line, 3, "n=" + std::to_string(*declared_n) + " disagrees with the hierarchical spec (" + std::to_string(file.n) + " players)");
      break;
    case GameFile::Source::Formula: {
      if (!declared_n) throw ParseError(line_no, 1, "formula games need an 'n' line");
      file.n = *declared_n;
      int leaves_n = 0;
      try {
        leaves_n = formula_player_count(*file.formula);
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, 1, e.what());
      }
      if (leaves_n != file.n) throw ParseError(n_line, 3, "formula leaves have " + std::to_string(leaves_n) + " weights, n is " + std::to_string(file.n));
      if (file.n > kExhaustiveLimit) throw ParseError(n_line, 3, "formula games are limited to " + std::to_string(kExhaustiveLimit) + " players");
      break;
    }
    case GameFile::Source::Coalitions:
      if (!declared_n) throw ParseError(coalition_lines.front().first, 1, "coalition lists need an 'n' line");
      file.n = *declared_n;
      for (const auto& [ln, tokens] : coalition_lines) {
        std::uint64_t bits = 0;
        for (const Token& t : tokens) {
          const auto p = to_int(t.text);
          if (!p || *p < 0 || *p >= file.n)
            throw ParseError(ln, t.column, "player '" + std::string(t.text) + "' is not in 0.." + std::to_string(file.n - 1));
          bits |= std::uint64_t{1} << *p;
        }
        file.winning.emplace_back(bits);
      }
      canonicalize(file.winning);
      break;
  }
  return file;
}

std::string serialize_game_file(const GameFile& file) {
  std::ostringstream out;
  out << "sg 1\n";
  out << "n " << file.n << '\n';
  switch (file.source) {
    case GameFile::Source::Coalitions: {
      const SimpleGame g = file.game();
      for (Coalition c : g.min_winning()) {
        out << 'w';
        for (int p : c.members()) out << ' ' << p;
        out << '\n';
      }
      break;
    }
    case GameFile::Source::Hierarchical:
      out << file.spec->to_string() << '\n';
      break;
    case GameFile::Source::Formula:
      out << "formula " << file.formula->to_string() << '\n';
      break;
  }
  return out.str();
}

GameFile game_file_from(const SimpleGame& g) {
  GameFile file;
  file.source = GameFile::Source::Coalitions;
  file.n = g.player_count();
  file.winning = g.min_winning();
  return file;
}

}  // namespace simplegames
