#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace modescout::lp {

// Per-variable bounds. A default-constructed variable is nonnegative
// (lower = 0, no upper), the usual LP convention.
struct VarBounds {
  std::optional<double> lower = 0.0;
  std::optional<double> upper;

  static VarBounds nonnegative() { return VarBounds{}; }
  static VarBounds free_var() { return VarBounds{std::nullopt, std::nullopt}; }
  static VarBounds interval(double lo, double hi) { return VarBounds{lo, hi}; }
};

// Dense LP: minimize objective . z  subject to
//   eq_rows[k] . z == eq_rhs[k]
//   ub_rows[k] . z <= ub_rhs[k]
//   per-variable bounds (empty `bounds` means every variable is >= 0).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ub_rows;
  std::vector<double> ub_rhs;
  std::vector<VarBounds> bounds;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<std::vector<double>> solution;  // present iff Optimal
  std::optional<double> objective_value;        // present iff Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

// Malformed input (dimension mismatch, non-finite coefficients) or numerical
// breakdown (iteration cap). Distinct from an Infeasible outcome.
class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense two-phase simplex. Deterministic; anti-cycling via Bland's rule once
// the objective stalls. Throws LpError on malformed input or when the
// iteration cap 50*(vars+constraints) is exceeded.
LpOutcome solve(const LinearProgram& lp, double tol = 1e-9);

}  // namespace modescout::lp
