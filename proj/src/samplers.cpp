#include "modescout/samplers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace modescout {

std::string SelectorConfig::id() const {
  switch (kind) {
    case SelectorKind::Random: return "random";
    case SelectorKind::Crs: return "crs";
    case SelectorKind::RdmHull: return "rdm-hull";
    case SelectorKind::RdmPoint: return "rdm-point";
  }
  return "?";
}

SelectorConfig SelectorConfig::from_id(std::string_view id) {
  SelectorConfig c;
  if (id == "random") c.kind = SelectorKind::Random;
  else if (id == "crs") c.kind = SelectorKind::Crs;
  else if (id == "rdm-hull") c.kind = SelectorKind::RdmHull;
  else if (id == "rdm-point") c.kind = SelectorKind::RdmPoint;
  else throw std::invalid_argument("unknown selector '" + std::string(id) + "'");
  return c;
}

Point next_point_random(const InputBox& box, Rng& rng) { return box.sample(rng); }

std::optional<Point> next_point_crs(const InputBox& box, const RegionSet& set, int max_rejections,
                                    Rng& rng) {
  for (int rejected = 0; rejected < max_rejections; ++rejected) {
    Point cand = box.sample(rng);
    if (!set.contains_any(cand)) return cand;
  }
  return std::nullopt;
}

double min_region_distance_hull(const RegionSet& set, const Point& x) {
  const auto& regions = set.regions();
  // Cheap bounds first: the bounding-box distance lower-bounds each region's
  // hull distance, the nearest witness upper-bounds it. LPs run only for
  // regions whose lower bound beats the best value so far.
  double best_ub = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::size_t>> lbs;
  lbs.reserve(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    lbs.emplace_back(regions[i].bbox_linf_distance(x), i);
    double wmin = std::numeric_limits<double>::infinity();
    for (const Point& p : regions[i].points) {
      double m = 0.0;
      for (std::size_t d = 0; d < x.size(); ++d) m = std::max(m, std::abs(x[d] - p[d]));
      wmin = std::min(wmin, m);
    }
    best_ub = std::min(best_ub, wmin);
  }
  std::sort(lbs.begin(), lbs.end());
  double best = best_ub;
  for (const auto& [lb, i] : lbs) {
    if (lb >= best) break;
    best = std::min(best, geometry::hull_distance(x, regions[i].witnesses()));
  }
  return best;
}

double min_region_distance_point(const RegionSet& set, const Point& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Region& r : set.regions()) {
    best = std::min(best, geometry::point_distance_sq(x, r.witnesses()));
  }
  return best;
}

std::optional<RdmPick> next_point_rdm(const InputBox& box, RegionSet& set, RdmMetric metric,
                                      std::size_t opt_evaluations, int retry_cap, Rng& rng) {
  if (set.empty()) {
    throw std::logic_error("next_point_rdm: region set must be non-empty");
  }
  for (int attempt = 0; attempt <= retry_cap; ++attempt) {
    std::optional<RdmPick> best_outside;
    auto objective = [&](const Point& x) {
      const double v = metric == RdmMetric::HullWise ? min_region_distance_hull(set, x)
                                                     : min_region_distance_point(set, x);
      // Inclusion check per improving incumbent; interior incumbents are
      // never returned.
      if ((!best_outside || v > best_outside->objective) && !set.contains_any(x)) {
        best_outside = RdmPick{x, v};
      }
      return v;
    };
    const auto result =
        optimizer::maximize(objective, box, optimizer::OptBudget{opt_evaluations, rng.next_u64()});
    if (best_outside) return best_outside;
    if (metric == RdmMetric::HullWise) return std::nullopt;  // Exhausted
    // Point-wise: remember the interior optimum as a phantom so the next
    // attempt stops proposing it.
    const auto located = set.locate(result.argmax);
    if (!located) {
      // Outside after all (borderline numerics): accept it.
      return RdmPick{result.argmax, result.value};
    }
    set.insert_phantom(result.argmax, *located);
  }
  return std::nullopt;  // Exhausted after retry cap
}

std::optional<Point> next_point(const SelectorConfig& config, const InputBox& box, RegionSet& set,
                                Rng& rng) {
  switch (config.kind) {
    case SelectorKind::Random:
      return next_point_random(box, rng);
    case SelectorKind::Crs:
      return next_point_crs(box, set, config.max_rejections, rng);
    case SelectorKind::RdmHull: {
      auto pick = next_point_rdm(box, set, RdmMetric::HullWise, config.opt_evaluations,
                                 config.phantom_retry_cap, rng);
      if (!pick) return std::nullopt;
      return std::move(pick->point);
    }
    case SelectorKind::RdmPoint: {
      auto pick = next_point_rdm(box, set, RdmMetric::PointWise, config.opt_evaluations,
                                 config.phantom_retry_cap, rng);
      if (!pick) return std::nullopt;
      return std::move(pick->point);
    }
  }
  return std::nullopt;
}

}  // namespace modescout
