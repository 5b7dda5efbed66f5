#include "modescout/regions.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "modescout/textio.hpp"

namespace modescout {

namespace {

void validate_token(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("mode sequence token must be nonempty");
  for (char c : tok) {
    if (c == ',' || c == '\n' || c == '\r' || c == ' ' || c == '\t') {
      throw std::invalid_argument("mode sequence token contains a separator character: '" + tok +
                                  "'");
    }
  }
}

}  // namespace

ModeSequence::ModeSequence(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("mode sequence must be nonempty");
  for (const auto& tok : symbols_) validate_token(tok);
}

ModeSequence ModeSequence::single(std::string symbol) {
  std::vector<std::string> syms;
  syms.push_back(std::move(symbol));
  return ModeSequence(std::move(syms));
}

ModeSequence ModeSequence::parse(std::string_view comma_joined) {
  return ModeSequence(split_on(comma_joined, ','));
}

std::string ModeSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out += ',';
    out += symbols_[i];
  }
  return out;
}

std::size_t ModeSequenceHash::operator()(const ModeSequence& s) const noexcept {
  std::size_t h = 1469598103934665603ULL;  // FNV-1a
  for (const auto& tok : s.symbols()) {
    for (char c : tok) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= 0xFFu;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Point> Region::simulated_witnesses() const {
  std::vector<Point> out;
  out.reserve(simulated_count);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!phantom[k]) out.push_back(points[k]);
  }
  return out;
}

std::vector<Point> Region::phantom_witnesses() const {
  std::vector<Point> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (phantom[k]) out.push_back(points[k]);
  }
  return out;
}

bool Region::bbox_contains(const Point& x, double tol) const {
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] < bbox_lo[d] - tol || x[d] > bbox_hi[d] + tol) return false;
  }
  return true;
}

double Region::bbox_linf_distance(const Point& x) const {
  double m = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] < bbox_lo[d]) m = std::max(m, bbox_lo[d] - x[d]);
    else if (x[d] > bbox_hi[d]) m = std::max(m, x[d] - bbox_hi[d]);
  }
  return m;
}

RegionSet::RegionSet(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw std::invalid_argument("RegionSet dimension must be >= 1");
}

void RegionSet::check_dimension(const Point& x) const {
  if (x.size() != dimension_) {
    throw std::invalid_argument("point dimension " + std::to_string(x.size()) +
                                " does not match region set dimension " +
                                std::to_string(dimension_));
  }
}

void RegionSet::append_point(Region& r, const Point& x, bool is_phantom) {
  if (r.points.empty()) {
    r.bbox_lo = x;
    r.bbox_hi = x;
  } else {
    for (std::size_t d = 0; d < dimension_; ++d) {
      r.bbox_lo[d] = std::min(r.bbox_lo[d], x[d]);
      r.bbox_hi[d] = std::max(r.bbox_hi[d], x[d]);
    }
  }
  r.points.push_back(x);
  r.phantom.push_back(is_phantom ? 1 : 0);
  if (!is_phantom) ++r.simulated_count;
}

bool RegionSet::incorporate(const Point& x, const ModeSequence& y) {
  check_dimension(x);
  ++sim_count_;
  order_dirty_ = true;
  auto it = index_.find(y);
  if (it == index_.end()) {
    Region r;
    r.sequence = y;
    append_point(r, x, false);
    index_.emplace(y, regions_.size());
    regions_.push_back(std::move(r));
    return true;
  }
  append_point(regions_[it->second], x, false);
  return false;
}

std::optional<std::size_t> RegionSet::locate_index(const Point& x, double tol) const {
  check_dimension(x);
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const Region& r = regions_[i];
    if (!r.bbox_contains(x, tol)) continue;
    if (geometry::hull_contains(r.witnesses(), x, tol)) return i;
  }
  return std::nullopt;
}

std::optional<ModeSequence> RegionSet::locate(const Point& x, double tol) const {
  const auto idx = locate_index(x, tol);
  if (!idx) return std::nullopt;
  return regions_[*idx].sequence;
}

const std::vector<std::size_t>& RegionSet::scan_order() const {
  if (order_dirty_) {
    order_cache_.resize(regions_.size());
    for (std::size_t i = 0; i < order_cache_.size(); ++i) order_cache_[i] = i;
    std::stable_sort(order_cache_.begin(), order_cache_.end(), [this](std::size_t a, std::size_t b) {
      return regions_[a].points.size() > regions_[b].points.size();
    });
    order_dirty_ = false;
  }
  return order_cache_;
}

bool RegionSet::contains_any(const Point& x, double tol) const {
  check_dimension(x);
  for (std::size_t i : scan_order()) {
    const Region& r = regions_[i];
    if (!r.bbox_contains(x, tol)) continue;
    if (geometry::hull_contains(r.witnesses(), x, tol)) return true;
  }
  return false;
}

void RegionSet::insert_phantom(const Point& x, const ModeSequence& y) {
  check_dimension(x);
  const auto located = locate(x);
  if (!located || !(*located == y)) {
    throw std::invalid_argument("insert_phantom: point is not inside region '" + y.str() + "'");
  }
  auto it = index_.find(y);
  append_point(regions_[it->second], x, true);
  order_dirty_ = true;
}

const Region* RegionSet::find(const ModeSequence& y) const {
  auto it = index_.find(y);
  if (it == index_.end()) return nullptr;
  return &regions_[it->second];
}

void RegionSet::save(std::ostream& out) const {
  out << "regionset v1\n";
  out << "dimension " << dimension_ << "\n";
  out << "simulations " << sim_count_ << "\n";
  out << "regions " << regions_.size() << "\n";
  for (const Region& r : regions_) {
    out << "region " << r.sequence.str() << "\n";
    out << "points " << r.points.size() << "\n";
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      out << (r.phantom[k] ? 'p' : 's');
      for (double v : r.points[k]) out << ' ' << format_double(v);
      out << "\n";
    }
  }
  out << "end\n";
}

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(std::string("region snapshot: unexpected end of file reading ") +
                             what);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::size_t expect_kv(const std::string& line, const std::string& key) {
  const auto parts = split_ws(line);
  if (parts.size() != 2 || parts[0] != key) {
    throw std::runtime_error("region snapshot: expected '" + key + " <n>', got '" + line + "'");
  }
  return static_cast<std::size_t>(parse_int(parts[1]));
}

}  // namespace

RegionSet RegionSet::load(std::istream& in) {
  if (next_line(in, "header") != "regionset v1") {
    throw std::runtime_error("region snapshot: bad header");
  }
  const std::size_t dim = expect_kv(next_line(in, "dimension"), "dimension");
  const std::size_t sims = expect_kv(next_line(in, "simulations"), "simulations");
  const std::size_t nregions = expect_kv(next_line(in, "regions"), "regions");

  RegionSet set(dim);
  for (std::size_t i = 0; i < nregions; ++i) {
    const std::string rline = next_line(in, "region");
    const auto rparts = split_ws(rline);
    if (rparts.size() != 2 || rparts[0] != "region") {
      throw std::runtime_error("region snapshot: expected 'region <seq>', got '" + rline + "'");
    }
    Region r;
    r.sequence = ModeSequence::parse(rparts[1]);
    const std::size_t npoints = expect_kv(next_line(in, "points"), "points");
    for (std::size_t k = 0; k < npoints; ++k) {
      const auto parts = split_ws(next_line(in, "point"));
      if (parts.size() != dim + 1 || (parts[0] != "s" && parts[0] != "p")) {
        throw std::runtime_error("region snapshot: malformed point line");
      }
      Point x(dim);
      for (std::size_t d = 0; d < dim; ++d) x[d] = parse_double(parts[d + 1]);
      set.append_point(r, x, parts[0] == "p");
    }
    if (r.points.empty()) throw std::runtime_error("region snapshot: region with no points");
    set.index_.emplace(r.sequence, set.regions_.size());
    set.regions_.push_back(std::move(r));
  }
  if (next_line(in, "end") != "end") throw std::runtime_error("region snapshot: missing 'end'");
  set.sim_count_ = sims;
  set.order_dirty_ = true;
  return set;
}

}  // namespace modescout
