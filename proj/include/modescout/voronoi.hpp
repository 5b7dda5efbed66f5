#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "modescout/regions.hpp"

namespace modescout {

// Scalable synthetic benchmark: 100 sites in [0,100]^n drawn from a normal
// distribution with mean 100 and sigma 10, truncated to the box by rejection.
// A "simulation" returns the ID of the nearest site; the preimage of each ID
// is a Voronoi cell, hence exactly convex.
class VoronoiSystem {
 public:
  static constexpr std::size_t kSiteCount = 100;
  static constexpr double kCoordMin = 0.0;
  static constexpr double kCoordMax = 100.0;
  static constexpr double kMean = 100.0;
  static constexpr double kStddev = 10.0;

  static VoronoiSystem make(std::size_t dimension, std::uint64_t seed);

  // Arbitrary site lists are allowed so tests can build small doubles.
  explicit VoronoiSystem(std::vector<Point> sites);

  // Nearest site in Euclidean distance; ties broken by lowest index. Throws
  // std::invalid_argument for inputs outside [0,100]^n.
  ModeSequence simulate(const Point& x) const;

  const std::vector<Point>& sites() const { return sites_; }
  std::size_t dimension() const { return sites_.front().size(); }
  InputBox input_box() const;

  // Site-list file (schema `voronoi v1`) for cross-run reproducibility.
  void save(std::ostream& out) const;
  static VoronoiSystem load(std::istream& in);

 private:
  std::vector<Point> sites_;
};

}  // namespace modescout
