#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "modescout/regions.hpp"
#include "modescout/trace.hpp"

namespace modescout {

// Grid-of-cells navigation benchmark: an object moves through 1x1 cells, each
// encoding one of eight desired velocity directions (index i points at angle
// i*pi/4). Inside a cell the velocity follows vdot = A (v - v_desired) and
// the position follows pdot = v. The 4-dimensional input is the initial
// (px, py, vx, vy). The mode sequence is the ordered list of visited cell
// IDs; entering a terminal cell ends the simulation, and leaving the grid (or
// entering a forbidden cell) ends it with the "oob" token.
struct NavMap {
  static constexpr int8_t kTerminal = -1;
  static constexpr int8_t kForbidden = -2;
  static constexpr const char* kOutToken = "oob";

  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<int8_t> cells;  // row-major, top row first (file order)
  std::array<double, 4> dynamics = {-1.2, 0.1, 0.1, -1.2};  // A, row-major 2x2
  InputBox initial_box;                                     // (px, py, vx, vy)
  double time_step = 0.01;
  double max_time = 100.0;

  int8_t cell_kind(std::size_t row, std::size_t col) const { return cells[row * width + col]; }
  // Cell index in file order for a position, or -1 when outside the grid.
  int cell_index_at(double x, double y) const;
  std::string cell_token(int index) const { return std::to_string(index); }

  // Map file schema `navmap v1` (see docs/formats.md).
  static NavMap load(std::istream& in);
  static NavMap load_file(const std::string& path);
  void save(std::ostream& out) const;
};

struct NavResult {
  ModeSequence sequence;
  SimTrace trace;  // signals px, py, vx, vy; token = current cell ID
};

// Fixed-step RK4 simulation from initial state x0 = (px, py, vx, vy).
// Deterministic; throws std::invalid_argument when x0 violates the map's
// initial box or starts outside the grid, std::runtime_error on non-finite
// states.
NavResult nav_simulate_trace(const NavMap& map, const Point& x0);
ModeSequence nav_simulate(const NavMap& map, const Point& x0);

}  // namespace modescout
