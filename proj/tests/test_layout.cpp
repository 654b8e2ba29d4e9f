#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sqc/document.hpp"
#include "sqc/layout.hpp"
#include "sqc/pipeline.hpp"
#include "test_util.hpp"

using namespace sqc;

namespace {

double polyline_length(const Polyline& l) {
  double s = 0;
  for (std::size_t i = 1; i < l.size(); ++i) s += std::hypot(l[i].x - l[i - 1].x, l[i].y - l[i - 1].y);
  return s;
}

// Closed-form quarter-wave estimate typed in independently.
double quarter_wave_um(double f, double eps_r) { return 299792458.0 / (4 * f * std::sqrt((eps_r + 1) / 2)) * 1e6; }

}  // namespace

TEST(Place, SingleQubitCentred) {
  PlaceOptions opt;
  const ChipLayout l = place_qubits(generate_grid(1, 1), opt);
  ASSERT_EQ(l.components.size(), 1u);
  const double span = qubit_span(opt.style);
  EXPECT_DOUBLE_EQ(l.width, span + 2 * opt.border);
  EXPECT_DOUBLE_EQ(l.height, span + 2 * opt.border);
  EXPECT_DOUBLE_EQ(l.components[0].origin.x, l.width / 2);
  EXPECT_DOUBLE_EQ(l.components[0].origin.y, l.height / 2);
}

TEST(Place, TwoByTwoAtLatticePoints) {
  const ChipLayout l = place_qubits(generate_grid(2, 2), {});
  ASSERT_EQ(l.components.size(), 4u);
  const Point o = l.find("Q0")->origin;
  for (const auto& c : l.components) {
    ASSERT_TRUE(c.lattice);
    EXPECT_DOUBLE_EQ(c.origin.x - o.x, 2000.0 * c.lattice->col);
    EXPECT_DOUBLE_EQ(c.origin.y - o.y, 2000.0 * c.lattice->row);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_FALSE(l.components[i].bbox().overlaps(l.components[j].bbox()));
}

TEST(Place, PitchTooSmall) {
  PlaceOptions opt;
  opt.pitch = qubit_span(opt.style) - 1;
  EXPECT_EQ(code_of([&] { place_qubits(generate_grid(2, 2), opt); }), ErrorCode::PitchTooSmall);
  opt.style.kind = ComponentKind::TransmonFloating;
  opt.pitch = qubit_span(opt.style);
  EXPECT_EQ(code_of([&] { place_qubits(generate_grid(1, 2), opt); }), ErrorCode::PitchTooSmall);
}

TEST(Place, ComponentLibraryIsWellFormed) {
  for (auto kind : {ComponentKind::Xmon, ComponentKind::TransmonFloating}) {
    QubitStyle s;
    s.kind = kind;
    const PlacedComponent c = make_qubit("Q", {100, 200}, s);
    EXPECT_FALSE(c.footprint.empty());
    for (const auto& sh : c.footprint) EXPECT_TRUE(is_simple_polygon(sh.polygon));
    for (const auto& [k, v] : c.params) EXPECT_GT(v, 0) << k;
    // Ports on the footprint boundary.
    for (const auto& p : c.ports) {
      double d = 1e9;
      for (const auto& sh : c.footprint) {
        const auto& poly = sh.polygon;
        for (std::size_t i = 0; i < poly.size(); ++i)
          d = std::min(d, point_segment_distance(p.position, poly[i], poly[(i + 1) % poly.size()]));
      }
      EXPECT_LT(d, 1e-9) << p.name;
    }
  }
}

TEST(Frequencies, Checkerboard) {
  const auto plan = allocate_frequencies(generate_grid(2, 2), {4.1e9, 4.4e9});
  EXPECT_EQ(plan.at("Q0"), plan.at("Q3"));
  EXPECT_EQ(plan.at("Q1"), plan.at("Q2"));
  EXPECT_NE(plan.at("Q0"), plan.at("Q1"));
  EXPECT_EQ(allocate_frequencies(generate_grid(1, 1), {5e9}).at("Q0"), 5e9);
}

TEST(Frequencies, TriangleNeedsThree) {
  const Topology tri = parse_edge_list("a b\nb c\nc a\n");
  EXPECT_EQ(code_of([&] { allocate_frequencies(tri, {4e9, 5e9}); }), ErrorCode::InsufficientFrequencySet);
  const auto plan = allocate_frequencies(tri, {4e9, 5e9, 6e9});
  for (const auto& e : tri.edges) EXPECT_NE(plan.at(e.a), plan.at(e.b));
}

TEST(Frequencies, RandomGridsNeverClash) {
  std::mt19937 rng(99);
  for (int k = 0; k < 200; ++k) {
    const int m = 1 + static_cast<int>(rng() % 16), n = 1 + static_cast<int>(rng() % 16);
    const Topology t = generate_grid(m, n);
    const auto plan = allocate_frequencies(t, {4.17e9, 4.5e9});
    for (const auto& e : t.edges) ASSERT_NE(plan.at(e.a), plan.at(e.b)) << m << "x" << n;
  }
}

TEST(Resonator, QuarterWaveLength) {
  ResonatorSpec s;
  s.target_frequency = 6.5e9;
  const double l = resonator_length(s);
  EXPECT_NEAR(l, quarter_wave_um(6.5e9, 11.45), 1e-9);
  EXPECT_NEAR(l, 4621.4438, 1e-3);
  ResonatorSpec half = s;
  half.mode = ResonatorMode::HalfWave;
  EXPECT_DOUBLE_EQ(resonator_length(half), 2 * l);
  ResonatorSpec twice = s;
  twice.target_frequency = 13e9;
  EXPECT_DOUBLE_EQ(resonator_length(twice), l / 2);
}

TEST(Resonator, StrictlyDecreasing) {
  ResonatorSpec s;
  double prev = 1e300;
  for (double f = 4e9; f < 9e9; f += 0.25e9) {
    s.target_frequency = f;
    const double l = resonator_length(s);
    EXPECT_LT(l, prev);
    prev = l;
  }
  prev = 1e300;
  s.target_frequency = 6e9;
  for (double e = 2; e < 29; e += 1.5) {
    s.eps_r = e;
    const double l = resonator_length(s);
    EXPECT_LT(l, prev);
    prev = l;
  }
  s.target_frequency = 0;
  EXPECT_EQ(code_of([&] { resonator_length(s); }), ErrorCode::NonPositiveInput);
}

TEST(ReadoutBus, EightQubitLadder) {
  ChipLayout l = place_qubits(generate_grid(1, 8), {});
  const auto specs = generate_readout_bus(l, generate_grid(1, 8).row_ids(0), 6.535e9, 7.246e9);
  ASSERT_EQ(specs.size(), 8u);
  // Even spacing, endpoints exact.
  const double step = (7.246e9 - 6.535e9) / 7;
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(specs[i].target_frequency, 6.535e9 + i * step, 1e-3);
  // Rounded to MHz this is the ladder 6535, 6637, 6739, 6840, 6941, 7043, 7145, 7246.
  const int mhz[] = {6535, 6637, 6739, 6840, 6941, 7043, 7144, 7246};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(specs[i].target_frequency / 1e6, mhz[i], 1.0);
  for (std::size_t i = 1; i < 8; ++i) EXPECT_LT(specs[i].length, specs[i - 1].length);
  std::size_t resonators = 0;
  for (const auto& c : l.components)
    if (c.kind == ComponentKind::ReadoutResonator) {
      ++resonators;
      EXPECT_EQ(c.id, "R" + c.attached_to);
      // Attached at the qubit's readout port.
      const Point port = l.find(c.attached_to)->port("north");
      EXPECT_NEAR(c.origin.x, port.x, 1e-9);
      EXPECT_NEAR(c.origin.y, port.y, 1e-9);
    }
  EXPECT_EQ(resonators, 8u);
}

TEST(ReadoutBus, SingleQubitAtStart) {
  ChipLayout l = place_qubits(generate_grid(1, 1), {});
  const auto specs = generate_readout_bus(l, {"Q0"}, 6.5e9, 7e9);
  ASSERT_EQ(specs.size(), 1u);
  EXPECT_EQ(specs[0].target_frequency, 6.5e9);
}

TEST(ReadoutBus, MeanderMustFit) {
  ChipLayout l = place_qubits(generate_grid(1, 1), {});
  BusOptions tight;
  tight.cell_width = 200;
  tight.max_height = 100;
  EXPECT_EQ(code_of([&] { generate_readout_bus(l, {"Q0"}, 6.5e9, 7e9, tight); }), ErrorCode::MeanderDoesNotFit);
}

TEST(Meander, LengthAndBand) {
  for (double len : {600.0, 2500.0, 4621.4438, 5200.0}) {
    const Polyline line = meander_centerline(len, 10, 1900, 600, false);
    // Arcs are polygonized, so the chord length falls slightly short.
    EXPECT_NEAR(polyline_length(line), len, 2e-3 * len);
    for (const auto& p : line) {
      EXPECT_LE(std::abs(p.x), 950 + 1e-9);
      EXPECT_GE(p.y, -1e-9);
      EXPECT_LE(p.y, 600 + 1e-9);
    }
  }
}

// All geometry of generated chips stays in the die, footprints are simple
// and serialization is deterministic.
TEST(Chip, GeometrySanity) {
  for (auto [m, n] : {std::pair{1, 1}, {2, 3}, {4, 4}}) {
    PipelineConfig cfg;
    cfg.rows = m;
    cfg.cols = n;
    const Topology t = generate_grid(m, n);
    const ChipLayout l = build_chip(t, cfg);
    for (const auto& c : l.components) {
      for (const auto& sh : c.footprint) {
        ASSERT_TRUE(is_simple_polygon(sh.polygon)) << c.id;
        for (const auto& p : c.absolute(sh)) ASSERT_TRUE(l.die().contains(p)) << c.id;
      }
      for (const auto& p : c.ports) ASSERT_TRUE(l.die().contains(c.origin + p.position)) << c.id << "." << p.name;
    }
    EXPECT_EQ(to_json_text(l), to_json_text(build_chip(t, cfg)));
  }
}
