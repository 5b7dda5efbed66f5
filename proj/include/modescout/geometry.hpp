#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "modescout/rng.hpp"

namespace modescout {

// An input point is a plain coordinate vector; dimension agreement with the
// campaign's InputBox is checked at the call sites that care.
using Point = std::vector<double>;

// Axis-aligned interval of valid simulator inputs.
struct InputBox {
  Point lower;
  Point upper;

  InputBox() = default;
  InputBox(Point lo, Point hi);

  std::size_t dimension() const { return lower.size(); }
  bool contains(const Point& x, double tol = 0.0) const;
  // Longest edge; a convenient scale for optimizer step sizes and tests.
  double max_extent() const;
  Point sample(Rng& rng) const;
  Point clip(Point x) const;
};

namespace geometry {

// Boundary tolerance for hull membership, in input-space units. A point
// exactly on a hull face counts as inside.
inline constexpr double kContainTol = 1e-7;

// True iff `query` lies in the convex hull of `witnesses`: exists lambda >= 0
// with sum lambda = 1 and |sum lambda_j p_j - query|_inf <= tol, decided by LP
// feasibility. Hulls are never constructed explicitly.
bool hull_contains(std::span<const Point> witnesses, const Point& query,
                   double tol = kContainTol);

// Smallest radius r such that the axis-aligned hypercube of radius r centered
// at `query` meets the hull of `witnesses`; the Chebyshev distance from the
// query to the hull. Zero when the query is inside.
double hull_distance(const Point& query, std::span<const Point> witnesses);

// Squared Euclidean distance from `query` to the nearest witness point.
double point_distance_sq(const Point& query, std::span<const Point> witnesses);

}  // namespace geometry
}  // namespace modescout
