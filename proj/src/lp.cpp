#include "modescout/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace modescout::lp {

namespace {

constexpr double kPivotTol = 1e-11;

// How an original variable maps into the nonnegative standard-form columns.
struct ColMap {
  enum Kind { Shift, Negate, Split } kind = Shift;
  double shift = 0.0;  // x = shift + x'  (Shift), x = shift - x'  (Negate)
  int col = -1;
  int col2 = -1;  // Split: x = x'[col] - x'[col2]
};

void check_finite_row(const std::vector<double>& row, std::size_t n, const char* what) {
  if (row.size() != n) {
    throw LpError(std::string(what) + ": row has " + std::to_string(row.size()) +
                  " coefficients, expected " + std::to_string(n));
  }
  for (double v : row) {
    if (!std::isfinite(v)) throw LpError(std::string(what) + ": non-finite coefficient");
  }
}

// Standard-form tableau: rows are equalities over nonnegative columns,
// rhs >= 0, basis tracked per row. The cost row is kept reduced.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0), rhs_(rows, 0.0), basis_(rows, -1) {}

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
};

enum class StepResult { Optimal, Unbounded, Pivoted };

class Simplex {
 public:
  Simplex(Tableau& t, double tol, long iter_cap)
      : t_(t), tol_(tol), iter_cap_(iter_cap), cost_(t.cols_, 0.0) {}

  // Minimizes costs over columns [0, active_cols); columns at or beyond
  // active_cols (artificials in phase 2) never enter the basis.
  LpStatus run(const std::vector<double>& costs, std::size_t active_cols) {
    active_cols_ = active_cols;
    reduce_cost_row(costs);
    bool bland = false;
    long stall = 0;
    double last_obj = objective();
    while (true) {
      if (iters_used_ >= iter_cap_) {
        throw LpError("simplex iteration cap exceeded (" + std::to_string(iter_cap_) + ")");
      }
      StepResult r = step(bland);
      if (r == StepResult::Optimal) return LpStatus::Optimal;
      if (r == StepResult::Unbounded) return LpStatus::Unbounded;
      ++iters_used_;
      if (objective() < last_obj - tol_) {
        last_obj = objective();
        stall = 0;
      } else if (++stall > static_cast<long>(2 * t_.rows_ + 16)) {
        bland = true;  // degenerate cycling guard
      }
    }
  }

  // Current objective value; cost_rhs_ tracks its negation.
  double objective() const { return -cost_rhs_; }
  long iters_used() const { return iters_used_; }

 private:
  void reduce_cost_row(const std::vector<double>& costs) {
    cost_.assign(t_.cols_, 0.0);
    std::copy(costs.begin(), costs.end(), cost_.begin());
    cost_rhs_ = 0.0;
    for (std::size_t i = 0; i < t_.rows_; ++i) {
      const double cb = cost_[static_cast<std::size_t>(t_.basis_[i])];
      if (cb == 0.0) continue;
      const double* r = t_.row(i);
      for (std::size_t j = 0; j < t_.cols_; ++j) cost_[j] -= cb * r[j];
      cost_rhs_ -= cb * t_.rhs_[i];
    }
  }

  StepResult step(bool bland) {
    // Entering column.
    int enter = -1;
    if (bland) {
      for (std::size_t j = 0; j < active_cols_; ++j) {
        if (cost_[j] < -tol_) {
          enter = static_cast<int>(j);
          break;
        }
      }
    } else {
      double best = -tol_;
      for (std::size_t j = 0; j < active_cols_; ++j) {
        if (cost_[j] < best) {
          best = cost_[j];
          enter = static_cast<int>(j);
        }
      }
    }
    if (enter < 0) return StepResult::Optimal;

    // Ratio test; ties broken by smallest basis variable index (Bland).
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t_.rows_; ++i) {
      const double a = t_.row(i)[static_cast<std::size_t>(enter)];
      if (a <= kPivotTol) continue;
      const double ratio = t_.rhs_[i] / a;
      if (ratio < best_ratio - kPivotTol ||
          (ratio < best_ratio + kPivotTol && leave >= 0 &&
           t_.basis_[i] < t_.basis_[static_cast<std::size_t>(leave)])) {
        best_ratio = ratio;
        leave = static_cast<int>(i);
      }
    }
    if (leave < 0) return StepResult::Unbounded;

    pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
    return StepResult::Pivoted;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    double* prow = t_.row(pr);
    const double pval = prow[pc];
    const double inv = 1.0 / pval;
    for (std::size_t j = 0; j < t_.cols_; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    t_.rhs_[pr] *= inv;

    for (std::size_t i = 0; i < t_.rows_; ++i) {
      if (i == pr) continue;
      double* r = t_.row(i);
      const double f = r[pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < t_.cols_; ++j) r[j] -= f * prow[j];
      r[pc] = 0.0;
      t_.rhs_[i] -= f * t_.rhs_[pr];
      if (t_.rhs_[i] < 0.0 && t_.rhs_[i] > -kPivotTol) t_.rhs_[i] = 0.0;
    }
    {
      const double f = cost_[pc];
      if (f != 0.0) {
        for (std::size_t j = 0; j < t_.cols_; ++j) cost_[j] -= f * prow[j];
        cost_[pc] = 0.0;
        cost_rhs_ -= f * t_.rhs_[pr];
      }
    }
    t_.basis_[pr] = static_cast<int>(pc);
  }

  Tableau& t_;
  double tol_;
  long iter_cap_;
  std::size_t active_cols_ = 0;
  std::vector<double> cost_;
  double cost_rhs_ = 0.0;
  long iters_used_ = 0;
};

}  // namespace

LpOutcome solve(const LinearProgram& lp, double tol) {
  if (!(tol > 0.0)) throw LpError("tolerance must be positive");
  const std::size_t n = lp.num_vars();
  if (n == 0) throw LpError("LP has no variables");
  check_finite_row(lp.objective, n, "objective");
  if (lp.eq_rows.size() != lp.eq_rhs.size()) throw LpError("eq rows/rhs size mismatch");
  if (lp.ub_rows.size() != lp.ub_rhs.size()) throw LpError("ub rows/rhs size mismatch");
  for (const auto& r : lp.eq_rows) check_finite_row(r, n, "eq constraint");
  for (const auto& r : lp.ub_rows) check_finite_row(r, n, "ub constraint");
  for (double v : lp.eq_rhs) {
    if (!std::isfinite(v)) throw LpError("eq rhs: non-finite value");
  }
  for (double v : lp.ub_rhs) {
    if (!std::isfinite(v)) throw LpError("ub rhs: non-finite value");
  }
  if (!lp.bounds.empty() && lp.bounds.size() != n) throw LpError("bounds size mismatch");

  // Map original variables onto nonnegative standard-form columns.
  static const VarBounds kDefaultBounds{};
  std::vector<ColMap> colmap(n);
  int ncols = 0;
  std::vector<std::pair<int, double>> bound_rows;  // (column, upper) for boxed vars
  for (std::size_t j = 0; j < n; ++j) {
    const VarBounds& b = lp.bounds.empty() ? kDefaultBounds : lp.bounds[j];
    if (b.lower && b.upper && *b.lower > *b.upper) {
      return LpOutcome{LpStatus::Infeasible, std::nullopt, std::nullopt};
    }
    ColMap& m = colmap[j];
    if (b.lower) {
      m.kind = ColMap::Shift;
      m.shift = *b.lower;
      m.col = ncols++;
      if (b.upper) bound_rows.emplace_back(m.col, *b.upper - *b.lower);
    } else if (b.upper) {
      m.kind = ColMap::Negate;
      m.shift = *b.upper;
      m.col = ncols++;
    } else {
      m.kind = ColMap::Split;
      m.col = ncols++;
      m.col2 = ncols++;
    }
  }

  const std::size_t n_ub = lp.ub_rows.size() + bound_rows.size();
  const std::size_t nrows = lp.eq_rows.size() + n_ub;
  const std::size_t n_struct = static_cast<std::size_t>(ncols);
  // Columns: structural, then slacks, then (worst case) one artificial per row.
  const std::size_t slack0 = n_struct;
  const std::size_t art0 = n_struct + n_ub;
  Tableau t(nrows, art0 + nrows);

  double rhs_scale = 1.0;
  auto fill_row = [&](std::size_t i, const std::vector<double>& row, double rhs) {
    double* r = t.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double a = row[j];
      if (a == 0.0) continue;
      const ColMap& m = colmap[j];
      switch (m.kind) {
        case ColMap::Shift:
          r[static_cast<std::size_t>(m.col)] += a;
          rhs -= a * m.shift;
          break;
        case ColMap::Negate:
          r[static_cast<std::size_t>(m.col)] -= a;
          rhs -= a * m.shift;
          break;
        case ColMap::Split:
          r[static_cast<std::size_t>(m.col)] += a;
          r[static_cast<std::size_t>(m.col2)] -= a;
          break;
      }
    }
    t.rhs_[i] = rhs;
    rhs_scale = std::max(rhs_scale, std::abs(rhs));
  };

  std::size_t ri = 0;
  for (std::size_t k = 0; k < lp.eq_rows.size(); ++k, ++ri) fill_row(ri, lp.eq_rows[k], lp.eq_rhs[k]);
  std::size_t slack_idx = slack0;
  for (std::size_t k = 0; k < lp.ub_rows.size(); ++k, ++ri) {
    fill_row(ri, lp.ub_rows[k], lp.ub_rhs[k]);
    t.row(ri)[slack_idx++] = 1.0;
  }
  for (const auto& [col, ub] : bound_rows) {
    double* r = t.row(ri);
    r[static_cast<std::size_t>(col)] = 1.0;
    r[slack_idx++] = 1.0;
    t.rhs_[ri] = ub;
    rhs_scale = std::max(rhs_scale, std::abs(ub));
    ++ri;
  }

  // Normalize rhs >= 0, then pick a starting basis: a +1 slack where one
  // survives, an artificial otherwise.
  std::size_t n_art = 0;
  std::vector<double> phase1_cost(t.cols_, 0.0);
  for (std::size_t i = 0; i < nrows; ++i) {
    double* r = t.row(i);
    if (t.rhs_[i] < 0.0) {
      for (std::size_t j = 0; j < t.cols_; ++j) r[j] = -r[j];
      t.rhs_[i] = -t.rhs_[i];
    }
    int slack_basis = -1;
    for (std::size_t j = slack0; j < art0; ++j) {
      if (r[j] == 1.0) {
        slack_basis = static_cast<int>(j);
        break;
      }
    }
    if (slack_basis >= 0) {
      t.basis_[i] = slack_basis;
    } else {
      const std::size_t aj = art0 + n_art++;
      r[aj] = 1.0;
      t.basis_[i] = static_cast<int>(aj);
      phase1_cost[aj] = 1.0;
    }
  }

  const long iter_cap = 50L * static_cast<long>(t.cols_ + nrows);
  Simplex sx(t, tol, iter_cap);

  if (n_art > 0) {
    const LpStatus s1 = sx.run(phase1_cost, art0);  // artificials never re-enter
    if (s1 == LpStatus::Unbounded) throw LpError("phase 1 reported unbounded");
    if (sx.objective() > tol * rhs_scale) {
      return LpOutcome{LpStatus::Infeasible, std::nullopt, std::nullopt};
    }
    // Drive any residual artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows_;) {
      if (static_cast<std::size_t>(t.basis_[i]) < art0) {
        ++i;
        continue;
      }
      const double* r = t.row(i);
      int pc = -1;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(r[j]) > kPivotTol) {
          pc = static_cast<int>(j);
          break;
        }
      }
      if (pc >= 0) {
        // Manual pivot preserving feasibility (rhs of this row is ~0).
        double* prow = t.row(i);
        const double inv = 1.0 / prow[static_cast<std::size_t>(pc)];
        for (std::size_t j = 0; j < t.cols_; ++j) prow[j] *= inv;
        t.rhs_[i] *= inv;
        for (std::size_t k2 = 0; k2 < t.rows_; ++k2) {
          if (k2 == i) continue;
          double* rr = t.row(k2);
          const double f = rr[static_cast<std::size_t>(pc)];
          if (f == 0.0) continue;
          for (std::size_t j = 0; j < t.cols_; ++j) rr[j] -= f * prow[j];
          t.rhs_[k2] -= f * t.rhs_[i];
        }
        t.basis_[i] = pc;
        ++i;
      } else {
        // Redundant row: remove by swapping with the last row.
        const std::size_t last = t.rows_ - 1;
        if (i != last) {
          for (std::size_t j = 0; j < t.cols_; ++j) t.row(i)[j] = t.row(last)[j];
          t.rhs_[i] = t.rhs_[last];
          t.basis_[i] = t.basis_[last];
        }
        --t.rows_;
        t.data_.resize(t.rows_ * t.cols_);
        t.rhs_.resize(t.rows_);
        t.basis_.resize(t.rows_);
      }
    }
  }

  // Phase 2 over the real objective (transformed variables).
  std::vector<double> phase2_cost(t.cols_, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = lp.objective[j];
    if (c == 0.0) continue;
    const ColMap& m = colmap[j];
    switch (m.kind) {
      case ColMap::Shift:
        phase2_cost[static_cast<std::size_t>(m.col)] += c;
        break;
      case ColMap::Negate:
        phase2_cost[static_cast<std::size_t>(m.col)] -= c;
        break;
      case ColMap::Split:
        phase2_cost[static_cast<std::size_t>(m.col)] += c;
        phase2_cost[static_cast<std::size_t>(m.col2)] -= c;
        break;
    }
  }

  const LpStatus s2 = sx.run(phase2_cost, art0);
  if (s2 == LpStatus::Unbounded) {
    return LpOutcome{LpStatus::Unbounded, std::nullopt, std::nullopt};
  }

  // Recover the original variables.
  std::vector<double> xprime(t.cols_, 0.0);
  for (std::size_t i = 0; i < t.rows_; ++i) {
    xprime[static_cast<std::size_t>(t.basis_[i])] = t.rhs_[i];
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const ColMap& m = colmap[j];
    switch (m.kind) {
      case ColMap::Shift:
        x[j] = m.shift + xprime[static_cast<std::size_t>(m.col)];
        break;
      case ColMap::Negate:
        x[j] = m.shift - xprime[static_cast<std::size_t>(m.col)];
        break;
      case ColMap::Split:
        x[j] = xprime[static_cast<std::size_t>(m.col)] - xprime[static_cast<std::size_t>(m.col2)];
        break;
    }
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += lp.objective[j] * x[j];

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.solution = std::move(x);
  out.objective_value = obj;
  return out;
}

}  // namespace modescout::lp
