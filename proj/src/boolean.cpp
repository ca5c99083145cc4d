#include "simplegames/boolean.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "simplegames/errors.hpp"

namespace simplegames {

BoolFormula BoolFormula::make_leaf(WeightedRep rep) {
  BoolFormula f;
  f.kind = Kind::Leaf;
  f.leaf = std::move(rep);
  return f;
}

BoolFormula BoolFormula::make_and(std::vector<BoolFormula> children) {
  BoolFormula f;
  f.kind = Kind::And;
  f.children = std::move(children);
  return f;
}

BoolFormula BoolFormula::make_or(std::vector<BoolFormula> children) {
  BoolFormula f;
  f.kind = Kind::Or;
  f.children = std::move(children);
  return f;
}

std::string BoolFormula::to_string() const {
  if (kind == Kind::Leaf) {
    std::string out = "WG(" + simplegames::to_string(leaf.quota) + ";";
    for (std::size_t i = 0; i < leaf.weights.size(); ++i) {
      out += i == 0 ? " " : ", ";
      out += simplegames::to_string(leaf.weights[i]);
    }
    return out + ")";
  }
  std::string out = kind == Kind::And ? "AND(" : "OR(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += ", ";
    out += children[i].to_string();
  }
  return out + ")";
}

int formula_player_count(const BoolFormula& f) {
  if (f.kind == BoolFormula::Kind::Leaf) return f.leaf.player_count();
  if (f.children.empty()) throw InvalidInput("formula connective without operands");
  const int n = formula_player_count(f.children.front());
  for (const BoolFormula& c : f.children)
    if (formula_player_count(c) != n) throw InvalidInput("formula leaves disagree on the player count");
  return n;
}

bool eval_formula(const BoolFormula& f, Coalition x) {
  switch (f.kind) {
    case BoolFormula::Kind::Leaf:
      return f.leaf.wins(x);
    case BoolFormula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(), [x](const BoolFormula& c) { return eval_formula(c, x); });
    case BoolFormula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(), [x](const BoolFormula& c) { return eval_formula(c, x); });
  }
  return false;
}

SimpleGame formula_game(const BoolFormula& f, int n) {
  if (formula_player_count(f) != n) throw InvalidInput("formula player count differs from n");
  return game_from_predicate(n, [&f](Coalition x) { return eval_formula(f, x); });
}

std::size_t formula_size(const BoolFormula& f) {
  if (f.kind == BoolFormula::Kind::Leaf) return 1;
  std::size_t total = 0;
  for (const BoolFormula& c : f.children) total += formula_size(c);
  return total;
}

BoolFormula formula_dual(const BoolFormula& f) {
  if (f.kind == BoolFormula::Kind::Leaf) {
    const SimpleGame d = dual(weighted_game(f.leaf));
    auto rep = is_weighted(d);
    if (!rep) throw std::logic_error("dual of a weighted game must be weighted");
    return BoolFormula::make_leaf(std::move(*rep));
  }
  std::vector<BoolFormula> kids;
  kids.reserve(f.children.size());
  for (const BoolFormula& c : f.children) kids.push_back(formula_dual(c));
  return f.kind == BoolFormula::Kind::And ? BoolFormula::make_or(std::move(kids)) : BoolFormula::make_and(std::move(kids));
}

bool verify_boolean_rep(const SimpleGame& g, const BoolFormula& f) {
  if (formula_player_count(f) != g.player_count()) return false;
  // minimal winning must win; maximal losing must lose (the formula is monotone)
  for (Coalition x : g.min_winning())
    if (!eval_formula(f, x)) return false;
  for (Coalition y : maximal_losing(g))
    if (eval_formula(f, y)) return false;
  return true;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return InvalidInput("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::string_view body = text.substr(pos);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw fail();
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw fail();
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!digits(whole) || !digits(frac)) throw fail();
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(mpz_class(std::string(whole) + std::string(frac), 10), den);
    value.canonicalize();
  } else {
    if (!digits(body)) throw fail();
    value = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? Rational(-value) : value;
}

namespace {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  BoolFormula parse() {
    BoolFormula f = formula();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    formula_player_count(f);
    return f;
  }

private:
  [[noreturn]] void error(const std::string& what) const {
    throw InvalidInput("formula column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return w;
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '.' || text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const InvalidInput&) {
      pos_ = start;
      error("expected a number");
    }
  }

  BoolFormula formula() {
    const std::size_t start = pos_;
    const std::string kw = word();
    if (kw == "WG") {
      expect('(');
      WeightedRep rep;
      rep.quota = number();
      expect(';');
      skip_space();
      if (pos_ < text_.size() && text_[pos_] != ')') {
        rep.weights.push_back(number());
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          rep.weights.push_back(number());
          skip_space();
        }
      }
      expect(')');
      for (const Rational& w : rep.weights)
        if (sgn(w) < 0) error("negative weight");
      if (sgn(rep.quota) < 0) error("negative quota");
      return BoolFormula::make_leaf(std::move(rep));
    }
    if (kw != "AND" && kw != "OR") {
      pos_ = start;
      skip_space();
      error("expected AND, OR or WG");
    }
    expect('(');
    std::vector<BoolFormula> kids;
    kids.push_back(formula());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      kids.push_back(formula());
      skip_space();
    }
    expect(')');
    return kw == "AND" ? BoolFormula::make_and(std::move(kids)) : BoolFormula::make_or(std::move(kids));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolFormula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

}  // namespace simplegames
