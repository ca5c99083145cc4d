#include "simplegames/rational_lp.hpp"

#include <algorithm>
#include <limits>

namespace simplegames {

namespace {
constexpr int kAuxId = std::numeric_limits<int>::max();
}

FeasibilityLp::FeasibilityLp(int num_vars) : num_vars_(num_vars), next_id_(num_vars) {
  nonbasic_.resize(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) nonbasic_[static_cast<std::size_t>(i)] = i;
}

void FeasibilityLp::add(const LinearConstraint& c) {
  // slack = -rhs + sum a_j x_j >= 0, rewritten in terms of the current nonbasics.
  Row row{next_id_++, Rational(-c.rhs), std::vector<Rational>(nonbasic_.size())};
  std::vector<long> col_of(static_cast<std::size_t>(num_vars_), -1);
  std::vector<long> row_of(static_cast<std::size_t>(num_vars_), -1);
  for (std::size_t col = 0; col < nonbasic_.size(); ++col)
    if (nonbasic_[col] < num_vars_) col_of[static_cast<std::size_t>(nonbasic_[col])] = static_cast<long>(col);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].basic < num_vars_) row_of[static_cast<std::size_t>(rows_[r].basic)] = static_cast<long>(r);

  Rational scaled;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    const std::int64_t a = c.coeffs[j];
    if (a == 0) continue;
    const Rational factor(static_cast<long>(a));
    if (col_of[j] >= 0) {
      row.coef[static_cast<std::size_t>(col_of[j])] += factor;
    } else {
      const Row& src = rows_[static_cast<std::size_t>(row_of[j])];
      scaled = factor * src.rhs;
      row.rhs += scaled;
      for (std::size_t col = 0; col < row.coef.size(); ++col) {
        if (sgn(src.coef[col]) == 0) continue;
        scaled = factor * src.coef[col];
        row.coef[col] += scaled;
      }
    }
  }
  rows_.push_back(std::move(row));
}

void FeasibilityLp::pivot(std::size_t r, std::size_t e) {
  ++pivots_;
  Row& pr = rows_[r];
  // basic = rhs + sum coef x  ->  x_e = (basic - rhs - sum_{c!=e} coef_c x_c) / coef_e
  const Rational inv = 1 / pr.coef[e];
  const Rational neg_inv = -inv;
  pr.rhs *= neg_inv;
  for (std::size_t c = 0; c < pr.coef.size(); ++c) {
    if (c == e) continue;
    if (sgn(pr.coef[c]) != 0) pr.coef[c] *= neg_inv;
  }
  pr.coef[e] = inv;
  std::swap(pr.basic, nonbasic_[e]);

  Rational alpha, tmp;
  auto substitute = [&](Rational& rhs, std::vector<Rational>& coef) {
    if (sgn(coef[e]) == 0) return;
    alpha = coef[e];
    tmp = alpha * pr.rhs;
    rhs += tmp;
    for (std::size_t c = 0; c < coef.size(); ++c) {
      if (c == e || sgn(pr.coef[c]) == 0) continue;
      tmp = alpha * pr.coef[c];
      coef[c] += tmp;
    }
    coef[e] = alpha * pr.coef[e];
  };
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (i != r) substitute(rows_[i].rhs, rows_[i].coef);
  substitute(obj_const_, obj_);
}

void FeasibilityLp::drop_aux_column() {
  auto it = std::find(nonbasic_.begin(), nonbasic_.end(), kAuxId);
  if (it == nonbasic_.end()) return;
  const auto col = static_cast<std::size_t>(it - nonbasic_.begin());
  nonbasic_.erase(it);
  for (Row& row : rows_) row.coef.erase(row.coef.begin() + static_cast<std::ptrdiff_t>(col));
  obj_.clear();
  obj_const_ = 0;
}

bool FeasibilityLp::solve() {
  if (infeasible_) return false;
  std::size_t worst = rows_.size();
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (sgn(rows_[r].rhs) < 0 && (worst == rows_.size() || rows_[r].rhs < rows_[worst].rhs)) worst = r;
  if (worst == rows_.size()) return true;

  // Phase one: every basic gets + x0, maximize -x0.
  nonbasic_.push_back(kAuxId);
  const std::size_t aux_col = nonbasic_.size() - 1;
  for (Row& row : rows_) row.coef.emplace_back(1);
  obj_.assign(nonbasic_.size(), Rational(0));
  obj_[aux_col] = -1;
  obj_const_ = 0;
  pivot(worst, aux_col);

  while (true) {
    // Bland: entering = smallest id with positive objective coefficient.
    std::size_t enter = nonbasic_.size();
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      if (sgn(obj_[c]) > 0 && (enter == nonbasic_.size() || nonbasic_[c] < nonbasic_[enter])) enter = c;
    }
    if (enter == nonbasic_.size()) break;
    std::size_t leave = rows_.size();
    Rational best, ratio;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(rows_[r].coef[enter]) >= 0) continue;
      ratio = rows_[r].rhs / -rows_[r].coef[enter];
      if (leave == rows_.size() || ratio < best) {
        leave = r;
        best = ratio;
      } else if (ratio == best) {
        const int cur = rows_[leave].basic;
        const int cand = rows_[r].basic;
        // x0 leaves on ties; otherwise smallest id.
        if (cand == kAuxId || (cur != kAuxId && cand < cur)) leave = r;
      }
    }
    // Phase one is bounded by zero, so a leaving row always exists.
    pivot(leave, enter);
    if (nonbasic_[enter] == kAuxId) break;
  }

  if (sgn(obj_const_) < 0) {
    infeasible_ = true;
    return false;
  }
  // x0 == 0. If it is still basic (degenerate), pivot it out or drop its row.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].basic != kAuxId) continue;
    std::size_t col = nonbasic_.size();
    for (std::size_t c = 0; c < nonbasic_.size(); ++c)
      if (sgn(rows_[r].coef[c]) != 0) {
        col = c;
        break;
      }
    if (col == nonbasic_.size()) {
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    } else {
      pivot(r, col);
    }
    break;
  }
  drop_aux_column();
  return true;
}

std::vector<Rational> FeasibilityLp::point() const {
  std::vector<Rational> x(static_cast<std::size_t>(num_vars_), Rational(0));
  for (const Row& row : rows_)
    if (row.basic < num_vars_) x[static_cast<std::size_t>(row.basic)] = row.rhs;
  return x;
}

std::vector<Rational> to_primitive_integers(std::vector<Rational> v) {
  mpz_class lcm = 1;
  for (const Rational& r : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
  mpz_class g = 0;
  for (Rational& r : v) {
    r *= lcm;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num_mpz_t());
  }
  if (g == 0) return v;
  for (Rational& r : v) {
    r /= g;
    r.canonicalize();
  }
  return v;
}

namespace {

// Violation amount rhs - a.x (positive means violated) in scaled integers.
struct ScaledPoint {
  std::vector<mpz_class> values;
  mpz_class scale;

  explicit ScaledPoint(const std::vector<Rational>& x) : scale(1) {
    for (const Rational& r : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den_mpz_t());
    values.reserve(x.size());
    for (const Rational& r : x) values.emplace_back(r.get_num() * (scale / r.get_den()));
  }

  mpz_class violation(const LinearConstraint& c) const {
    mpz_class lhs = 0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j)
      if (c.coeffs[j] != 0) lhs += values[j] * static_cast<long>(c.coeffs[j]);
    return scale * static_cast<long>(c.rhs) - lhs;
  }
};

}  // namespace

std::optional<std::vector<Rational>> solve_lazily(int num_vars, std::span<const LinearConstraint> pool,
                                                  std::span<const std::size_t> seed) {
  constexpr std::size_t kBatch = 24;
  FeasibilityLp lp(num_vars);
  std::vector<bool> active(pool.size(), false);
  for (std::size_t idx : seed) {
    if (active[idx]) continue;
    active[idx] = true;
    lp.add(pool[idx]);
  }
  while (true) {
    if (!lp.solve()) return std::nullopt;
    auto x = lp.point();
    const ScaledPoint scaled(x);
    std::vector<std::pair<mpz_class, std::size_t>> violated;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (active[i]) continue;
      mpz_class v = scaled.violation(pool[i]);
      if (v > 0) violated.emplace_back(std::move(v), i);
    }
    if (violated.empty()) return x;
    const std::size_t take = std::min(kBatch, violated.size());
    std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    for (std::size_t t = 0; t < take; ++t) {
      active[violated[t].second] = true;
      lp.add(pool[violated[t].second]);
    }
  }
}

}  // namespace simplegames
