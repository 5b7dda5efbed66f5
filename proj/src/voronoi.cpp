#include "modescout/voronoi.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "modescout/rng.hpp"
#include "modescout/textio.hpp"

namespace modescout {

VoronoiSystem::VoronoiSystem(std::vector<Point> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw std::invalid_argument("Voronoi system needs at least one site");
  const std::size_t n = sites_.front().size();
  if (n == 0) throw std::invalid_argument("Voronoi sites must have dimension >= 1");
  for (const Point& s : sites_) {
    if (s.size() != n) throw std::invalid_argument("Voronoi sites have mixed dimensions");
    for (double v : s) {
      if (v < kCoordMin || v > kCoordMax) {
        throw std::invalid_argument("Voronoi site coordinate outside [0,100]");
      }
    }
  }
}

VoronoiSystem VoronoiSystem::make(std::size_t dimension, std::uint64_t seed) {
  if (dimension < 1) throw std::invalid_argument("Voronoi dimension must be >= 1");
  Rng rng(seed);
  std::vector<Point> sites(kSiteCount, Point(dimension));
  for (auto& site : sites) {
    for (auto& coord : site) {
      // Truncated normal by rejection from N(100, 10).
      double v;
      do {
        v = kMean + kStddev * rng.gaussian();
      } while (v < kCoordMin || v > kCoordMax);
      coord = v;
    }
  }
  return VoronoiSystem(std::move(sites));
}

ModeSequence VoronoiSystem::simulate(const Point& x) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw std::invalid_argument("Voronoi input dimension mismatch");
  for (double v : x) {
    if (v < kCoordMin || v > kCoordMax) {
      throw std::invalid_argument("Voronoi input outside [0,100]^n");
    }
  }
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    double acc = 0.0;
    for (std::size_t d = 0; d < n; ++d) {
      const double diff = x[d] - sites_[i][d];
      acc += diff * diff;
    }
    if (acc < best_d) {
      best_d = acc;
      best = i;
    }
  }
  return ModeSequence::single(std::to_string(best));
}

InputBox VoronoiSystem::input_box() const {
  return InputBox(Point(dimension(), kCoordMin), Point(dimension(), kCoordMax));
}

void VoronoiSystem::save(std::ostream& out) const {
  out << "voronoi v1\n";
  out << "dimension " << dimension() << "\n";
  out << "sites " << sites_.size() << "\n";
  for (const Point& s : sites_) {
    for (std::size_t d = 0; d < s.size(); ++d) {
      if (d > 0) out << ' ';
      out << format_double(s[d]);
    }
    out << "\n";
  }
  out << "end\n";
}

VoronoiSystem VoronoiSystem::load(std::istream& in) {
  auto next_line = [&](const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
      throw std::runtime_error(std::string("voronoi: unexpected end of file reading ") + what);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  if (next_line("header") != "voronoi v1") throw std::runtime_error("voronoi: bad header");
  const auto dparts = split_ws(next_line("dimension"));
  if (dparts.size() != 2 || dparts[0] != "dimension") {
    throw std::runtime_error("voronoi: missing dimension");
  }
  const std::size_t dim = static_cast<std::size_t>(parse_int(dparts[1]));
  const auto sparts = split_ws(next_line("sites"));
  if (sparts.size() != 2 || sparts[0] != "sites") throw std::runtime_error("voronoi: missing sites");
  const std::size_t count = static_cast<std::size_t>(parse_int(sparts[1]));
  std::vector<Point> sites(count, Point(dim));
  for (auto& s : sites) {
    const auto parts = split_ws(next_line("site"));
    if (parts.size() != dim) throw std::runtime_error("voronoi: malformed site line");
    for (std::size_t d = 0; d < dim; ++d) s[d] = parse_double(parts[d]);
  }
  if (next_line("end") != "end") throw std::runtime_error("voronoi: missing 'end'");
  return VoronoiSystem(std::move(sites));
}

}  // namespace modescout
