#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modescout/optimizer.hpp"
#include "modescout/regions.hpp"
#include "modescout/rng.hpp"

namespace modescout {

enum class SelectorKind { Random, Crs, RdmHull, RdmPoint };

// Selector choice plus strategy parameters; per-trial randomness comes from
// the Rng handed to the selection calls.
struct SelectorConfig {
  SelectorKind kind = SelectorKind::Random;
  int max_rejections = 10000;                // CRS
  std::size_t opt_evaluations = 1000;        // RDM optimization budget per point
  int phantom_retry_cap = 25;                // RDM point-wise

  std::string id() const;
  static SelectorConfig from_id(std::string_view id);
  bool accelerated() const { return kind != SelectorKind::Random; }
};

// Uniform draw from the box; Algorithm 1's random input point function g.
Point next_point_random(const InputBox& box, Rng& rng);

// Convex Rejection Sampling: first uniform candidate outside all region
// hulls; nullopt (Exhausted) after max_rejections consecutive interior draws.
std::optional<Point> next_point_crs(const InputBox& box, const RegionSet& set, int max_rejections,
                                    Rng& rng);

struct RdmPick {
  Point point;
  double objective;  // min distance to the regions at `point`
};

enum class RdmMetric { HullWise, PointWise };

// Region Distance Maximization: maximizes the distance to the closest region
// over the box, excluding incumbents that fall inside a region hull. With the
// point-wise metric an interior optimizer result is recorded as a phantom
// witness and the optimization retries (up to retry_cap); hull-wise has no
// such recourse. nullopt = Exhausted.
std::optional<RdmPick> next_point_rdm(const InputBox& box, RegionSet& set, RdmMetric metric,
                                      std::size_t opt_evaluations, int retry_cap, Rng& rng);

// Objectives behind RDM, exposed for tests and audits.
double min_region_distance_hull(const RegionSet& set, const Point& x);
double min_region_distance_point(const RegionSet& set, const Point& x);

// Dispatch on the configured kind; Random never exhausts. RDM requires a
// non-empty region set (Algorithm 1 selects only after the first region).
std::optional<Point> next_point(const SelectorConfig& config, const InputBox& box, RegionSet& set,
                                Rng& rng);

}  // namespace modescout
