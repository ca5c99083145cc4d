#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace simplegames {

using Rational = mpq_class;

/// coeffs . x >= rhs over nonnegative variables x.
struct LinearConstraint {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

/// Exact feasibility of { x >= 0 : a_r . x >= b_r } in dictionary form.
///
/// Rows can be appended between solves; each solve runs an auxiliary-variable
/// phase one from the current dictionary, so earlier pivots are reused.
/// Bland's rule guarantees termination.
class FeasibilityLp {
public:
  explicit FeasibilityLp(int num_vars);

  void add(const LinearConstraint& c);
  /// True iff the constraints added so far are jointly feasible.
  bool solve();
  /// Current vertex; meaningful after solve() returned true.
  std::vector<Rational> point() const;

  int num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::uint64_t pivots() const { return pivots_; }

private:
  struct Row {
    int basic;
    Rational rhs;
    std::vector<Rational> coef;
  };

  void pivot(std::size_t row, std::size_t col);
  void drop_aux_column();

  int num_vars_;
  int next_id_;
  bool infeasible_ = false;
  std::vector<int> nonbasic_;  // var id per column
  std::vector<Row> rows_;
  // objective used by phase one: z = obj_const_ + sum obj_[c] x_c
  Rational obj_const_;
  std::vector<Rational> obj_;
  std::uint64_t pivots_ = 0;
};

/// Solves the system `pool` by adding violated constraints on demand,
/// starting from the indices in `seed`. Returns a feasible point or nullopt.
std::optional<std::vector<Rational>> solve_lazily(int num_vars, std::span<const LinearConstraint> pool,
                                                  std::span<const std::size_t> seed);

/// Scales a rational vector by a positive factor so it becomes a primitive
/// integer vector (gcd 1). The zero vector is returned unchanged.
std::vector<Rational> to_primitive_integers(std::vector<Rational> v);

}  // namespace simplegames
