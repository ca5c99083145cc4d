#include "simplegames/lpsep.hpp"

#include <algorithm>
#include <numeric>

#include "simplegames/errors.hpp"

namespace simplegames {

namespace {

Rational sum_weights(const std::vector<Rational>& w, Coalition x) {
  Rational s = 0;
  for (int p : x.members()) s += w[static_cast<std::size_t>(p)];
  return s;
}

std::string render(const std::vector<Rational>& w, const Rational& q) {
  std::string s = "[" + to_string(q) + ";";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : " ") + to_string(w[i]);
  return s + "]";
}

// Integer weights if every weight and the quota fit in int64 after scaling.
struct IntegerRep {
  std::vector<std::int64_t> weights;
  std::int64_t quota = 0;
};

std::optional<IntegerRep> integer_rep(const std::vector<Rational>& w, const Rational& q) {
  std::vector<Rational> all = w;
  all.push_back(q);
  mpz_class lcm = 1;
  for (const Rational& r : all) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
  IntegerRep out;
  mpz_class total = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const mpz_class v = all[i].get_num() * (lcm / all[i].get_den());
    if (!v.fits_slong_p()) return std::nullopt;
    if (i < w.size()) {
      total += v;
      out.weights.push_back(v.get_si());
    } else {
      out.quota = v.get_si();
    }
  }
  if (!total.fits_slong_p() || total > mpz_class(1L << 62)) return std::nullopt;
  return out;
}

// Subset sums for all 2^n coalitions, or nullopt when weights are too large.
std::optional<std::vector<std::int64_t>> subset_sums(const IntegerRep& rep) {
  const std::size_t n = rep.weights.size();
  std::vector<std::int64_t> sums(std::size_t{1} << n, 0);
  for (std::uint64_t x = 1; x < sums.size(); ++x) {
    const int low = std::countr_zero(x);
    sums[x] = sums[x & (x - 1)] + rep.weights[static_cast<std::size_t>(low)];
  }
  return sums;
}

bool nonnegative(const std::vector<Rational>& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& r) { return sgn(r) >= 0; });
}

LinearConstraint coalition_row(int n, Coalition x, std::int64_t sign, std::int64_t quota_coeff, std::int64_t rhs) {
  LinearConstraint c;
  c.coeffs.assign(static_cast<std::size_t>(n) + (quota_coeff != 0 ? 1 : 0), 0);
  for (int p : x.members()) c.coeffs[static_cast<std::size_t>(p)] = sign;
  if (quota_coeff != 0) c.coeffs[static_cast<std::size_t>(n)] = quota_coeff;
  c.rhs = rhs;
  return c;
}

std::vector<std::size_t> seed_indices(std::size_t first, std::size_t count, std::size_t extra) {
  std::vector<std::size_t> seed;
  for (std::size_t i = 0; i < std::min<std::size_t>(count, 48); ++i) seed.push_back(first + i);
  seed.push_back(extra);
  return seed;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Rational WeightedRep::weight_of(Coalition x) const { return sum_weights(weights, x); }
std::string WeightedRep::to_string() const { return render(weights, quota); }
Rational RoughRep::weight_of(Coalition x) const { return sum_weights(weights, x); }
std::string RoughRep::to_string() const { return render(weights, quota); }

std::optional<WeightedRep> separable(int n, std::span<const Coalition> must_win,
                                     std::span<const Coalition> must_lose) {
  if (n < 0 || n > kMaxPlayers) throw InvalidInput("separable: bad player count");
  const Coalition grand = Coalition::all(n);
  const bool empty_wins = std::any_of(must_win.begin(), must_win.end(), [](Coalition c) { return c.empty(); });
  for (auto set : {must_win, must_lose})
    for (Coalition c : set)
      if (!c.subset_of(grand)) throw InvalidInput("separable: coalition " + c.to_string() + " exceeds n");

  if (must_lose.empty()) {
    WeightedRep rep;
    rep.weights.assign(static_cast<std::size_t>(n), Rational(empty_wins ? 0 : 1));
    rep.quota = empty_wins ? 0 : 1;
    return rep;
  }
  if (empty_wins) return std::nullopt;

  // Variables: w_0..w_{n-1}, q (index n).
  std::vector<LinearConstraint> pool;
  pool.reserve(must_lose.size() + must_win.size() + 1);
  for (Coalition y : must_lose) pool.push_back(coalition_row(n, y, -1, 1, 1));  // q - w(Y) >= 1
  const std::size_t quota_row = pool.size();
  {
    LinearConstraint c;
    c.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    c.coeffs[static_cast<std::size_t>(n)] = 1;
    c.rhs = 1;
    pool.push_back(std::move(c));
  }
  for (Coalition x : must_win) pool.push_back(coalition_row(n, x, 1, -1, 0));  // w(X) - q >= 0

  const auto seed = seed_indices(0, must_lose.size(), quota_row);
  auto point = solve_lazily(n + 1, pool, seed);
  if (!point) return std::nullopt;
  auto scaled = to_primitive_integers(std::move(*point));
  WeightedRep rep;
  rep.quota = scaled.back();
  scaled.pop_back();
  rep.weights = std::move(scaled);
  return rep;
}

std::optional<WeightedRep> is_weighted(const SimpleGame& g) {
  const auto losing = maximal_losing(g);
  return separable(g.player_count(), g.min_winning(), losing);
}

std::optional<RoughRep> is_roughly_weighted(const SimpleGame& g) {
  const int n = g.player_count();
  const auto losing = maximal_losing(g);
  const auto& winning = g.min_winning();

  // Quota 1: w(X) >= 1 for winners, w(Y) <= 1 for losers.
  const bool empty_wins = std::any_of(winning.begin(), winning.end(), [](Coalition c) { return c.empty(); });
  if (!empty_wins) {
    std::vector<LinearConstraint> pool;
    for (Coalition y : losing) pool.push_back(coalition_row(n, y, -1, 0, -1));
    for (Coalition x : winning) pool.push_back(coalition_row(n, x, 1, 0, 1));
    std::vector<std::size_t> seed;
    for (std::size_t i = 0; i < std::min<std::size_t>(pool.size(), 48); ++i) seed.push_back(i);
    if (auto point = solve_lazily(n, pool, seed)) {
      point->push_back(Rational(1));
      auto scaled = to_primitive_integers(std::move(*point));
      RoughRep rep;
      rep.quota = scaled.back();
      scaled.pop_back();
      rep.weights = std::move(scaled);
      return rep;
    }
  }
  // Quota 0: players outside every losing coalition carry all the weight.
  std::vector<LinearConstraint> pool;
  for (Coalition y : losing) pool.push_back(coalition_row(n, y, -1, 0, 0));
  pool.push_back(coalition_row(n, Coalition::all(n), 1, 0, 1));
  std::vector<std::size_t> seed(pool.size());
  std::iota(seed.begin(), seed.end(), 0);
  if (auto point = solve_lazily(n, pool, seed)) {
    RoughRep rep;
    rep.weights = to_primitive_integers(std::move(*point));
    rep.quota = 0;
    return rep;
  }
  return std::nullopt;
}

bool verify_representation(const SimpleGame& g, const WeightedRep& rep) {
  const int n = g.player_count();
  if (rep.player_count() != n || !nonnegative(rep.weights) || sgn(rep.quota) < 0) return false;
  if (n <= 20) {
    if (auto ints = integer_rep(rep.weights, rep.quota)) {
      const auto sums = subset_sums(*ints);
      const auto table = winning_table(g);
      for (std::size_t x = 0; x < table.size(); ++x)
        if (((*sums)[x] >= ints->quota) != table[x]) return false;
      return true;
    }
  }
  for (Coalition x : g.min_winning())
    if (!rep.wins(x)) return false;
  for (Coalition y : maximal_losing(g))
    if (rep.wins(y)) return false;
  return true;
}

bool verify_representation(const SimpleGame& g, const RoughRep& rep) {
  const int n = g.player_count();
  if (rep.player_count() != n || !nonnegative(rep.weights)) return false;
  const bool all_zero = sgn(rep.quota) == 0 &&
                        std::all_of(rep.weights.begin(), rep.weights.end(), [](const Rational& r) { return sgn(r) == 0; });
  if (all_zero) return false;
  if (n <= 20) {
    if (auto ints = integer_rep(rep.weights, rep.quota)) {
      const auto sums = subset_sums(*ints);
      const auto table = winning_table(g);
      for (std::size_t x = 0; x < table.size(); ++x) {
        if ((*sums)[x] < ints->quota && table[x]) return false;
        if ((*sums)[x] > ints->quota && !table[x]) return false;
      }
      return true;
    }
  }
  for (Coalition x : g.min_winning())
    if (rep.weight_of(x) < rep.quota) return false;
  for (Coalition y : maximal_losing(g))
    if (rep.weight_of(y) > rep.quota) return false;
  return true;
}

SimpleGame weighted_game(const WeightedRep& rep) {
  const int n = rep.player_count();
  if (n > kMaxPlayers) throw InvalidInput("weighted_game: too many players");
  // Visit players by decreasing weight; a winning set is minimal iff dropping
  // its lightest member loses.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rep.weights[static_cast<std::size_t>(a)] > rep.weights[static_cast<std::size_t>(b)];
  });
  std::vector<Rational> suffix(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + rep.weights[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

  std::vector<Coalition> minimal;
  if (sgn(rep.quota) <= 0) {
    minimal.push_back(Coalition{});
    return make_game(n, minimal);
  }
  // depth-first include/exclude; `last` is the weight of the lightest included player
  struct Frame {
    std::size_t pos;
    Coalition set;
    Rational total;
  };
  std::vector<Frame> stack{{0, Coalition{}, Rational(0)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.total >= rep.quota) {
      minimal.push_back(f.set);  // lightest member was added last
      continue;
    }
    if (f.pos == static_cast<std::size_t>(n) || f.total + suffix[f.pos] < rep.quota) continue;
    const int p = order[f.pos];
    const Rational& w = rep.weights[static_cast<std::size_t>(p)];
    stack.push_back({f.pos + 1, f.set, f.total});
    if (sgn(w) > 0) stack.push_back({f.pos + 1, f.set.with(p), f.total + w});
  }
  return make_game(n, minimal);
}

}  // namespace simplegames
