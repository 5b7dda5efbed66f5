#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "modescout/geometry.hpp"
#include "modescout/rng.hpp"

using namespace modescout;
using geometry::hull_contains;
using geometry::hull_distance;
using geometry::point_distance_sq;

namespace {

const std::vector<Point> kUnitSquare = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};

// ---- brute-force 2D oracle: supporting half-planes from all point pairs ---

struct HalfPlane {
  double ax, ay, c;  // ax*x + ay*y <= c for every hull point
};

std::vector<HalfPlane> supporting_halfplanes(const std::vector<Point>& w) {
  std::vector<HalfPlane> planes;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      // Normal of the directed line w[i] -> w[j].
      const double nx = -(w[j][1] - w[i][1]);
      const double ny = w[j][0] - w[i][0];
      const double norm = std::hypot(nx, ny);
      if (norm < 1e-12) continue;
      const double c = (nx * w[i][0] + ny * w[i][1]) / norm;
      bool all_below = true;
      for (const Point& p : w) {
        if ((nx * p[0] + ny * p[1]) / norm > c + 1e-9) {
          all_below = false;
          break;
        }
      }
      if (all_below) planes.push_back({nx / norm, ny / norm, c});
    }
  }
  return planes;
}

bool oracle_contains(const std::vector<HalfPlane>& planes, const Point& q, double slack) {
  for (const auto& hp : planes) {
    if (hp.ax * q[0] + hp.ay * q[1] > hp.c + slack) return false;
  }
  return true;
}

double linf(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) m = std::max(m, std::abs(a[d] - b[d]));
  return m;
}

// Dense-grid minimization of the Chebyshev distance from q to the hull.
double oracle_grid_linf_distance(const std::vector<Point>& w, const Point& q, double res) {
  const auto planes = supporting_halfplanes(w);
  double ub = std::numeric_limits<double>::infinity();
  for (const Point& p : w) ub = std::min(ub, linf(q, p));
  Point lo = {std::min(q[0] - ub, w[0][0]), std::min(q[1] - ub, w[0][1])};
  Point hi = {q[0] + ub, q[1] + ub};
  for (const Point& p : w) {
    lo[0] = std::min(lo[0], p[0]);
    lo[1] = std::min(lo[1], p[1]);
    hi[0] = std::max(hi[0], p[0]);
    hi[1] = std::max(hi[1], p[1]);
  }
  // Only grid points within the window [q-ub, q+ub] can improve the bound.
  lo[0] = std::max(lo[0], q[0] - ub);
  lo[1] = std::max(lo[1], q[1] - ub);
  hi[0] = std::min(hi[0], q[0] + ub);
  hi[1] = std::min(hi[1], q[1] + ub);
  double best = ub;
  for (double x = lo[0]; x <= hi[0] + res * 0.5; x += res) {
    for (double y = lo[1]; y <= hi[1] + res * 0.5; y += res) {
      if (!oracle_contains(planes, {x, y}, 1e-12)) continue;
      best = std::min(best, linf(q, {x, y}));
    }
  }
  return best;
}

std::vector<Point> random_points(Rng& rng, std::size_t count, double lo, double hi) {
  std::vector<Point> pts(count);
  for (auto& p : pts) p = {rng.uniform(lo, hi), rng.uniform(lo, hi)};
  return pts;
}

}  // namespace

TEST_CASE("containment on the unit square") {
  CHECK(hull_contains(kUnitSquare, {0.5, 0.5}));
  CHECK_FALSE(hull_contains(kUnitSquare, {1.5, 0.5}));
}

TEST_CASE("singleton hull is the point itself") {
  const std::vector<Point> w = {{2, 2}};
  CHECK(hull_contains(w, {2, 2}));
  CHECK_FALSE(hull_contains(w, {2, 2.001}));
}

TEST_CASE("segment midpoint is inside") {
  const std::vector<Point> w = {{0, 0}, {2, 0}};
  CHECK(hull_contains(w, {1, 0}));
  CHECK_FALSE(hull_contains(w, {1, 0.5}));
}

TEST_CASE("containment errors") {
  CHECK_THROWS_AS(hull_contains({}, {1.0, 2.0}), std::invalid_argument);
  const std::vector<Point> w = {{0, 0, 0}};
  CHECK_THROWS_AS(hull_contains(w, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(hull_distance({1.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(point_distance_sq({1.0}, {}), std::invalid_argument);
}

TEST_CASE("hull distance on the unit square") {
  CHECK(hull_distance({3, 0.5}, kUnitSquare) == doctest::Approx(2.0));
  CHECK(hull_distance({0.5, 0.5}, kUnitSquare) == doctest::Approx(0.0));
  CHECK(hull_distance({2, 3}, kUnitSquare) == doctest::Approx(2.0));
}

TEST_CASE("point distance squared basics") {
  const std::vector<Point> w = {{0, 0}, {3, 3}};
  CHECK(point_distance_sq({1, 1}, w) == doctest::Approx(2.0));
  CHECK(point_distance_sq({3, 3}, w) == 0.0);
}

TEST_CASE("random 2D hulls agree with the half-plane oracle") {
  Rng rng(123);
  int checked = 0;
  for (int inst = 0; inst < 60; ++inst) {
    const auto w = random_points(rng, 3 + rng.uniform_index(6), 0.2, 0.8);
    const auto planes = supporting_halfplanes(w);
    for (int q = 0; q < 200; ++q) {
      const Point query = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
      // Skip queries too close to the hull boundary to attribute fairly.
      const bool inside_tight = oracle_contains(planes, query, -1e-6);
      const bool outside_clear = !oracle_contains(planes, query, 1e-6);
      if (!inside_tight && !outside_clear) continue;
      ++checked;
      CHECK_MESSAGE(hull_contains(w, query) == inside_tight, "instance ", inst, " query ", q);
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("hull distance matches the grid oracle") {
  Rng rng(456);
  const double res = 1e-3;
  for (int inst = 0; inst < 25; ++inst) {
    const auto w = random_points(rng, 3 + rng.uniform_index(6), 0.3, 0.7);
    const Point query = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    const double expect = oracle_grid_linf_distance(w, query, res);
    const double got = hull_distance(query, w);
    CHECK_MESSAGE(std::abs(got - expect) <= 2.0 * res, "instance ", inst, " got ", got,
                  " expect ", expect);
    CHECK(got <= expect + 1e-9);  // the LP can only do better than the grid
  }
}

TEST_CASE("point distance squared matches naive loop") {
  Rng rng(789);
  for (int inst = 0; inst < 1000; ++inst) {
    const std::size_t dim = 1 + rng.uniform_index(6);
    const std::size_t m = 1 + rng.uniform_index(20);
    std::vector<Point> w(m);
    for (auto& p : w) {
      p.resize(dim);
      for (auto& v : p) v = rng.uniform(-10.0, 10.0);
    }
    Point q(dim);
    for (auto& v : q) v = rng.uniform(-10.0, 10.0);

    double naive = std::numeric_limits<double>::infinity();
    for (const auto& p : w) {
      double acc = 0.0;
      for (std::size_t d = 0; d < dim; ++d) acc += (q[d] - p[d]) * (q[d] - p[d]);
      naive = std::min(naive, acc);
    }
    CHECK(std::abs(point_distance_sq(q, w) - naive) <= 1e-12);
  }
}

TEST_CASE("containment implies small hull distance and vice versa") {
  Rng rng(31337);
  for (int inst = 0; inst < 50; ++inst) {
    const auto w = random_points(rng, 3 + rng.uniform_index(6), 0.0, 1.0);
    const Point query = {rng.uniform(-0.5, 1.5), rng.uniform(-0.5, 1.5)};
    const bool inside = hull_contains(w, query);
    const double dist = hull_distance(query, w);
    if (inside) {
      CHECK(dist <= geometry::kContainTol);
    } else {
      CHECK(dist > 0.0);
    }
  }
}

TEST_CASE("hull distance is monotone non-increasing in witnesses") {
  Rng rng(555);
  for (int inst = 0; inst < 30; ++inst) {
    auto w = random_points(rng, 3, 0.0, 1.0);
    const Point query = {rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)};
    double prev = hull_distance(query, w);
    for (int add = 0; add < 5; ++add) {
      w.push_back({rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
      const double cur = hull_distance(query, w);
      CHECK(cur <= prev + 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("convex combinations of witnesses are contained") {
  Rng rng(808);
  for (int inst = 0; inst < 40; ++inst) {
    const std::size_t dim = 1 + rng.uniform_index(5);
    const std::size_t m = 2 + rng.uniform_index(7);
    std::vector<Point> w(m);
    for (auto& p : w) {
      p.resize(dim);
      for (auto& v : p) v = rng.uniform(-5.0, 5.0);
    }
    // Random convex combination.
    std::vector<double> lam(m);
    double sum = 0.0;
    for (auto& l : lam) {
      l = rng.uniform01();
      sum += l;
    }
    Point q(dim, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t d = 0; d < dim; ++d) q[d] += (lam[j] / sum) * w[j][d];
    }
    CHECK(hull_contains(w, q));
  }
}

TEST_CASE("point distance zero iff query is a witness") {
  const std::vector<Point> w = {{1, 2}, {3, 4}, {-1, 0.5}};
  for (const auto& p : w) CHECK(point_distance_sq(p, w) == 0.0);
  CHECK(point_distance_sq({1.0001, 2.0}, w) > 0.0);
}
