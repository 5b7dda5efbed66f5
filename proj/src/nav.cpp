#include "modescout/nav.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "modescout/textio.hpp"

namespace modescout {

namespace {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

struct State {
  Vec2 p, v;
};

const std::array<Vec2, 8>& directions() {
  static const double s = std::sqrt(0.5);
  static const std::array<Vec2, 8> dirs = {{{1, 0}, {s, s}, {0, 1}, {-s, s},
                                            {-1, 0}, {-s, -s}, {0, -1}, {s, -s}}};
  return dirs;
}

State derivative(const NavMap& map, const State& s, const Vec2& vd) {
  State d;
  d.p = s.v;
  const auto& A = map.dynamics;
  d.v.x = A[0] * (s.v.x - vd.x) + A[1] * (s.v.y - vd.y);
  d.v.y = A[2] * (s.v.x - vd.x) + A[3] * (s.v.y - vd.y);
  return d;
}

State rk4_step(const NavMap& map, const State& s, const Vec2& vd, double h) {
  auto add = [](const State& a, const State& b, double f) {
    State r;
    r.p.x = a.p.x + f * b.p.x;
    r.p.y = a.p.y + f * b.p.y;
    r.v.x = a.v.x + f * b.v.x;
    r.v.y = a.v.y + f * b.v.y;
    return r;
  };
  const State k1 = derivative(map, s, vd);
  const State k2 = derivative(map, add(s, k1, h / 2), vd);
  const State k3 = derivative(map, add(s, k2, h / 2), vd);
  const State k4 = derivative(map, add(s, k3, h), vd);
  State out = s;
  out.p.x += h / 6 * (k1.p.x + 2 * k2.p.x + 2 * k3.p.x + k4.p.x);
  out.p.y += h / 6 * (k1.p.y + 2 * k2.p.y + 2 * k3.p.y + k4.p.y);
  out.v.x += h / 6 * (k1.v.x + 2 * k2.v.x + 2 * k3.v.x + k4.v.x);
  out.v.y += h / 6 * (k1.v.y + 2 * k2.v.y + 2 * k3.v.y + k4.v.y);
  return out;
}

bool finite(const State& s) {
  return std::isfinite(s.p.x) && std::isfinite(s.p.y) && std::isfinite(s.v.x) &&
         std::isfinite(s.v.y);
}

void push_sample(SimTrace& trace, double t, const State& s, const std::string& token) {
  trace.times.push_back(t);
  trace.signals.push_back({s.p.x, s.p.y, s.v.x, s.v.y});
  trace.tokens.push_back(token);
}

}  // namespace

int NavMap::cell_index_at(double x, double y) const {
  if (x < 0.0 || x >= static_cast<double>(width) || y < 0.0 || y >= static_cast<double>(height)) {
    return -1;
  }
  const std::size_t col = static_cast<std::size_t>(x);
  const std::size_t row = height - 1 - static_cast<std::size_t>(y);
  return static_cast<int>(row * width + col);
}

NavResult nav_simulate_trace(const NavMap& map, const Point& x0) {
  if (x0.size() != 4) throw std::invalid_argument("nav: initial state must be 4-dimensional");
  if (!map.initial_box.contains(x0)) {
    throw std::invalid_argument("nav: initial state outside the map's initial box");
  }
  State s{{x0[0], x0[1]}, {x0[2], x0[3]}};
  int cell = map.cell_index_at(s.p.x, s.p.y);
  if (cell < 0) throw std::invalid_argument("nav: initial position outside the grid");
  int8_t kind = map.cells[static_cast<std::size_t>(cell)];
  if (kind == NavMap::kForbidden) {
    throw std::invalid_argument("nav: initial position inside a forbidden cell");
  }

  NavResult res;
  res.trace.signal_names = {"px", "py", "vx", "vy"};
  std::vector<std::string> seq;
  seq.push_back(map.cell_token(cell));
  push_sample(res.trace, 0.0, s, seq.back());
  if (kind == NavMap::kTerminal) {
    res.sequence = ModeSequence(std::move(seq));
    return res;
  }

  const double h = map.time_step;
  const long steps = std::lround(map.max_time / h);
  for (long i = 0; i < steps; ++i) {
    const double t0 = static_cast<double>(i) * h;
    const double t1 = static_cast<double>(i + 1) * h;
    const Vec2 vd = directions()[static_cast<std::size_t>(kind)];
    const State next = rk4_step(map, s, vd, h);
    if (!finite(next)) throw std::runtime_error("nav: state became non-finite");

    const int next_cell = map.cell_index_at(next.p.x, next.p.y);
    if (next_cell != cell) {
      const bool out = next_cell < 0 ||
                       map.cells[static_cast<std::size_t>(next_cell)] == NavMap::kForbidden;
      const std::string token = out ? std::string(NavMap::kOutToken) : map.cell_token(next_cell);
      seq.push_back(token);

      // Snap a sample to the boundary crossing by linear interpolation on the
      // crossed coordinate.
      double theta = 1.0;
      const double ox = static_cast<double>(cell % static_cast<int>(map.width));
      const double oy = static_cast<double>(map.height - 1 - cell / static_cast<int>(map.width));
      auto crossing = [](double from, double to, double lo, double hi) {
        if (to < lo && from > lo) return (lo - from) / (to - from);
        if (to > hi && from < hi) return (hi - from) / (to - from);
        return 1.0;
      };
      theta = std::min(crossing(s.p.x, next.p.x, ox, ox + 1.0),
                       crossing(s.p.y, next.p.y, oy, oy + 1.0));
      if (theta > 1e-12 && theta < 1.0 - 1e-12) {
        State mid;
        mid.p.x = s.p.x + theta * (next.p.x - s.p.x);
        mid.p.y = s.p.y + theta * (next.p.y - s.p.y);
        mid.v.x = s.v.x + theta * (next.v.x - s.v.x);
        mid.v.y = s.v.y + theta * (next.v.y - s.v.y);
        push_sample(res.trace, t0 + theta * h, mid, token);
      }

      if (out) {
        res.sequence = ModeSequence(std::move(seq));
        return res;
      }
      cell = next_cell;
      kind = map.cells[static_cast<std::size_t>(cell)];
      if (kind == NavMap::kTerminal) {
        push_sample(res.trace, t1, next, token);
        res.sequence = ModeSequence(std::move(seq));
        return res;
      }
    }
    s = next;
    push_sample(res.trace, t1, s, map.cell_token(cell));
  }
  res.sequence = ModeSequence(std::move(seq));
  return res;
}

ModeSequence nav_simulate(const NavMap& map, const Point& x0) {
  return nav_simulate_trace(map, x0).sequence;
}

namespace {

int8_t parse_cell_token(const std::string& tok) {
  if (tok == "T") return NavMap::kTerminal;
  if (tok == "x") return NavMap::kForbidden;
  if (tok.size() == 1 && tok[0] >= '0' && tok[0] <= '7') return static_cast<int8_t>(tok[0] - '0');
  throw std::runtime_error("navmap: bad grid token '" + tok + "'");
}

std::string cell_to_token(int8_t kind) {
  if (kind == NavMap::kTerminal) return "T";
  if (kind == NavMap::kForbidden) return "x";
  return std::to_string(static_cast<int>(kind));
}

}  // namespace

NavMap NavMap::load(std::istream& in) {
  NavMap map;
  bool have_grid = false, have_box = false;
  std::string line;
  std::size_t grid_row = 0;
  bool in_grid = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto parts = split_ws(line);
    if (parts.empty() || parts[0][0] == '#') continue;
    if (in_grid) {
      if (parts[0] == "end") {
        if (grid_row != map.height) throw std::runtime_error("navmap: wrong number of grid rows");
        in_grid = false;
        have_grid = true;
        continue;
      }
      if (map.width == 0 || map.height == 0) throw std::runtime_error("navmap: grid before size");
      if (parts.size() != map.width) throw std::runtime_error("navmap: wrong grid row width");
      if (grid_row >= map.height) throw std::runtime_error("navmap: too many grid rows");
      for (std::size_t c = 0; c < map.width; ++c) {
        map.cells[grid_row * map.width + c] = parse_cell_token(parts[c]);
      }
      ++grid_row;
      continue;
    }
    const std::string& key = parts[0];
    if (key == "navmap") {
      if (parts.size() != 2 || parts[1] != "v1") throw std::runtime_error("navmap: bad header");
    } else if (key == "width") {
      map.width = static_cast<std::size_t>(parse_int(parts.at(1)));
    } else if (key == "height") {
      map.height = static_cast<std::size_t>(parse_int(parts.at(1)));
    } else if (key == "grid") {
      if (map.width == 0 || map.height == 0) throw std::runtime_error("navmap: grid before size");
      map.cells.assign(map.width * map.height, 0);
      in_grid = true;
      grid_row = 0;
    } else if (key == "dynamics") {
      if (parts.size() != 5) throw std::runtime_error("navmap: dynamics needs 4 entries");
      for (int k = 0; k < 4; ++k) map.dynamics[static_cast<std::size_t>(k)] = parse_double(parts[static_cast<std::size_t>(k) + 1]);
    } else if (key == "time_step") {
      map.time_step = parse_double(parts.at(1));
      if (!(map.time_step > 0.0)) throw std::runtime_error("navmap: time_step must be positive");
    } else if (key == "max_time") {
      map.max_time = parse_double(parts.at(1));
      if (!(map.max_time > 0.0)) throw std::runtime_error("navmap: max_time must be positive");
    } else if (key == "initial_box") {
      if (parts.size() != 9) {
        throw std::runtime_error("navmap: initial_box needs 8 entries (min/max per component)");
      }
      Point lo(4), hi(4);
      for (std::size_t d = 0; d < 4; ++d) {
        lo[d] = parse_double(parts[1 + 2 * d]);
        hi[d] = parse_double(parts[2 + 2 * d]);
      }
      map.initial_box = InputBox(std::move(lo), std::move(hi));
      have_box = true;
    } else {
      throw std::runtime_error("navmap: unknown key '" + key + "'");
    }
  }
  if (map.width == 0 || map.height == 0) throw std::runtime_error("navmap: missing grid size");
  if (!have_grid) throw std::runtime_error("navmap: missing grid");
  if (!have_box) throw std::runtime_error("navmap: missing initial_box");
  bool has_terminal = false;
  for (int8_t c : map.cells) has_terminal = has_terminal || c == kTerminal;
  if (!has_terminal) throw std::runtime_error("navmap: needs at least one terminal cell");
  return map;
}

NavMap NavMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file: " + path);
  return load(in);
}

void NavMap::save(std::ostream& out) const {
  out << "navmap v1\n";
  out << "width " << width << "\n";
  out << "height " << height << "\n";
  out << "grid\n";
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c > 0) out << ' ';
      out << cell_to_token(cells[r * width + c]);
    }
    out << "\n";
  }
  out << "end\n";
  out << "dynamics";
  for (double v : dynamics) out << ' ' << format_double(v);
  out << "\n";
  out << "time_step " << format_double(time_step) << "\n";
  out << "max_time " << format_double(max_time) << "\n";
  out << "initial_box";
  for (std::size_t d = 0; d < 4; ++d) {
    out << ' ' << format_double(initial_box.lower[d]) << ' ' << format_double(initial_box.upper[d]);
  }
  out << "\n";
}

}  // namespace modescout
