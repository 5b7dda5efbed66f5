#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "modescout/geometry.hpp"

namespace modescout {

// Ordered list of discrete-state symbols; the behavior signature compared for
// equality. Tokens are opaque but must be nonempty and free of commas and
// whitespace so every text surface (records, snapshots, wire protocol) can
// carry them unescaped. Consecutive duplicates are not collapsed.
class ModeSequence {
 public:
  ModeSequence() = default;
  explicit ModeSequence(std::vector<std::string> symbols);

  static ModeSequence single(std::string symbol);
  static ModeSequence parse(std::string_view comma_joined);

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::string str() const;  // comma-joined

  bool operator==(const ModeSequence&) const = default;

 private:
  std::vector<std::string> symbols_;
};

struct ModeSequenceHash {
  std::size_t operator()(const ModeSequence& s) const noexcept;
};

// A mode sequence plus its witness input points. The convex hull of the
// witnesses is the region; phantom witnesses are optimizer-returned interior
// points that were never simulated, so they can never enlarge the hull.
struct Region {
  ModeSequence sequence;
  std::vector<Point> points;   // simulated and phantom, in insertion order
  std::vector<char> phantom;   // parallel flags, 1 = phantom
  Point bbox_lo, bbox_hi;      // conservative bounding box of `points`
  std::size_t simulated_count = 0;

  std::span<const Point> witnesses() const { return points; }
  std::vector<Point> simulated_witnesses() const;
  std::vector<Point> phantom_witnesses() const;
  bool bbox_contains(const Point& x, double tol) const;
  // Chebyshev distance from x to the bounding box; a lower bound on the hull
  // distance, used to prune LP calls.
  double bbox_linf_distance(const Point& x) const;
};

// All regions after i simulations, keyed by mode sequence, in deterministic
// insertion order. Single-writer within one trial.
class RegionSet {
 public:
  explicit RegionSet(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t simulation_count() const { return sim_count_; }
  const std::vector<Region>& regions() const { return regions_; }
  bool empty() const { return regions_.empty(); }

  // Algorithm step for one simulation outcome: creates a region for an unseen
  // sequence (returns true) or extends the existing region's hull (false).
  bool incorporate(const Point& x, const ModeSequence& y);

  // Sequence of the first region (insertion order) whose hull contains x.
  std::optional<ModeSequence> locate(const Point& x, double tol = geometry::kContainTol) const;
  std::optional<std::size_t> locate_index(const Point& x,
                                          double tol = geometry::kContainTol) const;

  // Whether any region hull contains x; scans larger regions first since they
  // reject most candidates.
  bool contains_any(const Point& x, double tol = geometry::kContainTol) const;

  // Records an optimizer-returned interior point so point-wise distance stops
  // proposing it. The point must lie inside the hull of the named region.
  void insert_phantom(const Point& x, const ModeSequence& y);

  const Region* find(const ModeSequence& y) const;

  // Snapshot export/import (schema `regionset v1`, see docs/formats.md).
  void save(std::ostream& out) const;
  static RegionSet load(std::istream& in);

 private:
  void check_dimension(const Point& x) const;
  void append_point(Region& r, const Point& x, bool is_phantom);
  const std::vector<std::size_t>& scan_order() const;

  std::size_t dimension_ = 0;
  std::size_t sim_count_ = 0;
  std::vector<Region> regions_;
  std::unordered_map<ModeSequence, std::size_t, ModeSequenceHash> index_;
  mutable std::vector<std::size_t> order_cache_;
  mutable bool order_dirty_ = true;
};

}  // namespace modescout
