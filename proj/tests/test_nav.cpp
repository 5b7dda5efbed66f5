#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "modescout/nav.hpp"
#include "modescout/rng.hpp"

using namespace modescout;

namespace {

NavMap map_from_string(const std::string& text) {
  std::stringstream ss(text);
  return NavMap::load(ss);
}

const char* kCorridor =
    "navmap v1\n"
    "width 2\n"
    "height 1\n"
    "grid\n"
    "0 T\n"
    "end\n"
    "time_step 0.01\n"
    "max_time 30\n"
    "initial_box 0 2 0 1 -2 2 -2 2\n";

NavMap demo_map() {
  return NavMap::load_file(std::string(MAPS_DIR) + "/demo3x3.map");
}

}  // namespace

TEST_CASE("map parsing and round-trip") {
  const NavMap map = demo_map();
  CHECK(map.width == 3);
  CHECK(map.height == 3);
  CHECK(map.cell_kind(0, 2) == NavMap::kTerminal);
  CHECK(map.cell_kind(1, 1) == NavMap::kForbidden);
  CHECK(map.cell_kind(2, 0) == 2);
  CHECK(map.time_step == 0.01);

  std::stringstream ss;
  map.save(ss);
  const NavMap back = NavMap::load(ss);
  CHECK(back.cells == map.cells);
  CHECK(back.dynamics == map.dynamics);
  CHECK(back.initial_box.lower == map.initial_box.lower);
  CHECK(back.initial_box.upper == map.initial_box.upper);
}

TEST_CASE("map parse errors") {
  CHECK_THROWS(map_from_string("navmap v1\nwidth 2\n"));
  CHECK_THROWS(map_from_string(
      "navmap v1\nwidth 1\nheight 1\ngrid\n0\nend\ninitial_box 0 1 0 1 0 1 0 1\n"));  // no terminal
  CHECK_THROWS(map_from_string(
      "navmap v1\nwidth 1\nheight 1\ngrid\n9\nend\ninitial_box 0 1 0 1 0 1 0 1\n"));  // bad token
}

TEST_CASE("cell addressing uses file order, top row first") {
  const NavMap map = demo_map();
  CHECK(map.cell_index_at(0.5, 2.5) == 0);  // top-left
  CHECK(map.cell_index_at(2.5, 2.5) == 2);  // top-right (terminal)
  CHECK(map.cell_index_at(0.5, 0.5) == 6);  // bottom-left
  CHECK(map.cell_index_at(2.5, 0.5) == 8);  // bottom-right
  CHECK(map.cell_index_at(-0.1, 0.5) == -1);
  CHECK(map.cell_index_at(0.5, 3.1) == -1);
}

TEST_CASE("starting inside a terminal cell yields a length-1 sequence") {
  NavMap map = map_from_string(kCorridor);
  const auto res = nav_simulate_trace(map, {1.5, 0.5, 0.0, 0.0});
  CHECK(res.sequence == ModeSequence::single("1"));
  CHECK(res.trace.size() == 1);
}

TEST_CASE("corridor crossing matches a tenth-step reference integration") {
  NavMap map = map_from_string(kCorridor);
  const Point x0 = {0.5, 0.5, 0.5, 0.0};
  CHECK(nav_simulate(map, x0) == ModeSequence::parse("0,1"));

  NavMap fine = map;
  fine.time_step = map.time_step / 10.0;
  CHECK(nav_simulate(fine, x0) == ModeSequence::parse("0,1"));
}

TEST_CASE("leaving the grid ends the run with the oob token") {
  NavMap map = map_from_string(
      "navmap v1\n"
      "width 2\n"
      "height 1\n"
      "grid\n"
      "4 T\n"
      "end\n"
      "time_step 0.01\n"
      "max_time 30\n"
      "initial_box 0 2 0 1 -2 2 -2 2\n");
  const auto seq = nav_simulate(map, {0.5, 0.5, -0.5, 0.0});
  REQUIRE(seq.size() == 2);
  CHECK(seq.symbols()[0] == "0");
  CHECK(seq.symbols()[1] == NavMap::kOutToken);
}

TEST_CASE("entering a forbidden cell behaves like leaving the grid") {
  NavMap map = map_from_string(
      "navmap v1\n"
      "width 3\n"
      "height 1\n"
      "grid\n"
      "0 x T\n"
      "end\n"
      "time_step 0.01\n"
      "max_time 30\n"
      "initial_box 0 3 0 1 -2 2 -2 2\n");
  const auto seq = nav_simulate(map, {0.5, 0.5, 1.0, 0.0});
  REQUIRE(seq.size() == 2);
  CHECK(seq.symbols()[1] == NavMap::kOutToken);
}

TEST_CASE("initial state validation") {
  NavMap map = map_from_string(kCorridor);
  CHECK_THROWS_AS(nav_simulate(map, {5.0, 0.5, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(nav_simulate(map, {0.5, 0.5, 9.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(nav_simulate(map, {0.5, 0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("determinism: identical input gives identical sequence and trace") {
  const NavMap map = demo_map();
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Point x0 = map.initial_box.sample(rng);
    const auto a = nav_simulate_trace(map, x0);
    const auto b = nav_simulate_trace(map, x0);
    CHECK(a.sequence == b.sequence);
    CHECK(a.trace.times == b.trace.times);
    CHECK(a.trace.signals == b.trace.signals);
    CHECK(a.trace.tokens == b.trace.tokens);
  }
}

TEST_CASE("no two consecutive equal cell IDs") {
  const NavMap map = demo_map();
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto seq = nav_simulate(map, map.initial_box.sample(rng));
    for (std::size_t k = 1; k < seq.size(); ++k) {
      CHECK(seq.symbols()[k] != seq.symbols()[k - 1]);
    }
  }
}

TEST_CASE("halving the time step changes no mode sequence") {
  const NavMap map = demo_map();
  NavMap halved = map;
  halved.time_step = map.time_step / 2.0;
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Point x0 = map.initial_box.sample(rng);
    CHECK(nav_simulate(map, x0) == nav_simulate(halved, x0));
  }
}

TEST_CASE("traces are well-formed and start at t=0") {
  const NavMap map = demo_map();
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto res = nav_simulate_trace(map, map.initial_box.sample(rng));
    res.trace.validate();
    CHECK(res.trace.times.front() == 0.0);
    CHECK(res.trace.signal_names == std::vector<std::string>{"px", "py", "vx", "vy"});
    // The token column starts with the initial cell and matches the sequence's
    // first symbol.
    CHECK(res.trace.tokens.front() == res.sequence.symbols().front());
  }
}
