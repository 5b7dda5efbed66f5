#include "modescout/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "modescout/lp.hpp"

namespace modescout {

InputBox::InputBox(Point lo, Point hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw std::invalid_argument("InputBox: bounds must be nonempty and of equal dimension");
  }
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!(lower[d] <= upper[d])) {
      throw std::invalid_argument("InputBox: lower bound exceeds upper bound in dimension " +
                                  std::to_string(d));
    }
  }
}

bool InputBox::contains(const Point& x, double tol) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] < lower[d] - tol || x[d] > upper[d] + tol) return false;
  }
  return true;
}

double InputBox::max_extent() const {
  double m = 0.0;
  for (std::size_t d = 0; d < lower.size(); ++d) m = std::max(m, upper[d] - lower[d]);
  return m;
}

Point InputBox::sample(Rng& rng) const {
  Point x(lower.size());
  for (std::size_t d = 0; d < lower.size(); ++d) x[d] = rng.uniform(lower[d], upper[d]);
  return x;
}

Point InputBox::clip(Point x) const {
  for (std::size_t d = 0; d < x.size() && d < lower.size(); ++d) {
    x[d] = std::clamp(x[d], lower[d], upper[d]);
  }
  return x;
}

namespace geometry {

namespace {

void check_witnesses(std::span<const Point> witnesses, const Point& query, const char* op) {
  if (witnesses.empty()) {
    throw std::invalid_argument(std::string(op) + ": empty witness list");
  }
  for (const Point& p : witnesses) {
    if (p.size() != query.size()) {
      throw std::invalid_argument(std::string(op) + ": witness/query dimension mismatch");
    }
  }
}

}  // namespace

bool hull_contains(std::span<const Point> witnesses, const Point& query, double tol) {
  check_witnesses(witnesses, query, "hull_contains");
  const std::size_t n = query.size();
  const std::size_t m = witnesses.size();

  // Feasibility LP over lambda:  query - tol <= sum lambda_j p_j <= query + tol,
  // sum lambda = 1, lambda >= 0.
  lp::LinearProgram prog;
  prog.objective.assign(m, 0.0);
  prog.eq_rows.assign(1, std::vector<double>(m, 1.0));
  prog.eq_rhs.assign(1, 1.0);
  prog.ub_rows.reserve(2 * n);
  prog.ub_rhs.reserve(2 * n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<double> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = witnesses[j][d];
    prog.ub_rows.push_back(row);
    prog.ub_rhs.push_back(query[d] + tol);
    for (double& v : row) v = -v;
    prog.ub_rows.push_back(std::move(row));
    prog.ub_rhs.push_back(-(query[d] - tol));
  }
  return lp::solve(prog).status == lp::LpStatus::Optimal;
}

double hull_distance(const Point& query, std::span<const Point> witnesses) {
  check_witnesses(witnesses, query, "hull_distance");
  const std::size_t n = query.size();
  const std::size_t m = witnesses.size();

  // Variables z = (r, lambda_1..lambda_m), all >= 0.  Minimize r subject to
  //   sum lambda_j p_j - r <= query   and   -sum lambda_j p_j - r <= -query
  // componentwise, with sum lambda = 1.
  lp::LinearProgram prog;
  prog.objective.assign(m + 1, 0.0);
  prog.objective[0] = 1.0;
  {
    std::vector<double> ones(m + 1, 1.0);
    ones[0] = 0.0;
    prog.eq_rows.push_back(std::move(ones));
    prog.eq_rhs.push_back(1.0);
  }
  prog.ub_rows.reserve(2 * n);
  prog.ub_rhs.reserve(2 * n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<double> row(m + 1);
    row[0] = -1.0;
    for (std::size_t j = 0; j < m; ++j) row[j + 1] = witnesses[j][d];
    prog.ub_rows.push_back(row);
    prog.ub_rhs.push_back(query[d]);
    for (std::size_t j = 1; j <= m; ++j) row[j] = -row[j];
    prog.ub_rows.push_back(std::move(row));
    prog.ub_rhs.push_back(-query[d]);
  }
  const auto out = lp::solve(prog);
  if (out.status != lp::LpStatus::Optimal) {
    // Feasible by construction (lambda = e_1, r large); anything else is a
    // solver failure.
    throw lp::LpError("hull_distance: LP reported non-optimal status");
  }
  return std::max(0.0, *out.objective_value);
}

double point_distance_sq(const Point& query, std::span<const Point> witnesses) {
  check_witnesses(witnesses, query, "point_distance_sq");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : witnesses) {
    double acc = 0.0;
    for (std::size_t d = 0; d < query.size(); ++d) {
      const double diff = query[d] - p[d];
      acc += diff * diff;
    }
    best = std::min(best, acc);
  }
  return best;
}

}  // namespace geometry
}  // namespace modescout
