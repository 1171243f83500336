#include <cmath>
#include <regex>

#include <gtest/gtest.h>

#include "edwing/tiling.hpp"
#include "oracles.hpp"

using namespace edwing;

namespace {
std::vector<oracle::Pt> pts(geometry::Polygon const& p) {
  std::vector<oracle::Pt> out;
  for (auto const& v : p) out.push_back({v.x, v.y});
  return out;
}

void check_partition(TilingLayout const& t, double b, double c) {
  double sum = 0.0;
  for (auto const& tile : t.tiles) {
    EXPECT_GT(geometry::signed_area(tile), 0.0);
    for (auto const& v : tile) {
      EXPECT_GE(v.x, -1e-12);
      EXPECT_LE(v.x, b + 1e-12);
      EXPECT_GE(v.y, -1e-12);
      EXPECT_LE(v.y, c + 1e-12);
    }
    sum += geometry::area(tile);
  }
  EXPECT_NEAR(sum / (b * c), 1.0, 1e-9);
  EXPECT_NEAR(t.covered_area / (b * c), 1.0, 1e-9);
  double const tol = 1e-9 * std::max(b, c);
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < t.tiles.size(); ++j)
      ASSERT_LE(oracle::sat_overlap(pts(t.tiles[i]), pts(t.tiles[j])), tol) << i << " " << j;
}
}  // namespace

TEST(HexTiling, PrototypePlate) {
  auto const t = generate_hex_tiling({0.070, 0.6788, 0.1559});
  EXPECT_EQ(t.full_hex_count, 24u);
  EXPECT_EQ(t.partial_count, 25u);
  EXPECT_EQ(t.tiles.size(), 49u);
  EXPECT_NEAR(t.seam_length, 3.4528315811, 1e-8);
  auto const book = oracle::hex_lattice_book(0.6788, 0.1559, 0.070);
  EXPECT_EQ(t.full_hex_count, book.full);
  EXPECT_NEAR(t.seam_length, book.seam, 1e-9);
  check_partition(t, 0.6788, 0.1559);
}

TEST(HexTiling, BoundingBoxOfOneHexagon) {
  double const r = 0.035;
  auto const t = generate_hex_tiling({2 * r, 2 * r, std::sqrt(3.0) * r});
  EXPECT_EQ(t.full_hex_count, 1u);
  EXPECT_EQ(t.partial_count, 4u);
  EXPECT_NEAR(t.seam_length, 4 * r, 1e-12);
  check_partition(t, 2 * r, std::sqrt(3.0) * r);
}

TEST(HexTiling, TooLargeCellRejected) {
  EXPECT_THROW(generate_hex_tiling({0.5, 0.2, 0.2}), InvalidArgument);
  EXPECT_THROW(generate_hex_tiling({0.0, 0.2, 0.2}), InvalidArgument);
  EXPECT_THROW(generate_hex_tiling({0.07, 0.0, 0.2}), InvalidArgument);
}

TEST(HexTiling, RandomPlanformsPartitionAndMatchOracle) {
  for (int k = 0; k < 100; ++k) {
    double const d = oracle::uniform(0.02, 0.09);
    double const b = oracle::uniform(0.5 * d, 0.8), c = oracle::uniform(0.5 * d, 0.25);
    auto const t = generate_hex_tiling({d, b, c});
    auto const book = oracle::hex_lattice_book(b, c, d);
    EXPECT_EQ(t.full_hex_count, book.full) << b << " " << c << " " << d;
    EXPECT_NEAR(t.seam_length, book.seam, 1e-9 * (1 + book.seam));
    EXPECT_EQ(t.full_hex_count + t.partial_count, t.tiles.size());
    check_partition(t, b, c);
  }
}

TEST(HexTiling, SeamIsInteriorEdgeLength) {
  auto const t = generate_hex_tiling({0.070, 0.6788, 0.1559});
  double perimeters = 0.0;
  for (auto const& tile : t.tiles) perimeters += geometry::perimeter(tile);
  EXPECT_NEAR(t.seam_length, 0.5 * (perimeters - 2 * (0.6788 + 0.1559)), 1e-12);
}

TEST(SeamDensity, HexagonBeatsSquare) {
  double const a = 1.5 * std::sqrt(3.0) * 0.035 * 0.035;
  auto const s = seam_density_comparison(a);
  EXPECT_NEAR(s.hex, 32.99144, 1e-4);
  EXPECT_NEAR(s.square, 35.45161, 1e-4);
  EXPECT_NEAR(s.hex / s.square, 0.9306, 5e-5);
  for (int i = 0; i < 50; ++i) {
    auto const r = seam_density_comparison(oracle::log_uniform(1e-6, 1.0));
    EXPECT_NEAR(r.hex / r.square, 0.9306049, 1e-7);
  }
  EXPECT_THROW(seam_density_comparison(0.0), InvalidArgument);
}

TEST(MassAndCalories, PrototypeAndLinearity) {
  auto const m = seed_materials().front();
  AdhesiveRecord gelatin;
  gelatin.caloric_density = 2000;
  auto const w = mass_and_calories(0.105634, m, gelatin, 0.0058, 0.25, 0.2141);
  EXPECT_NEAR(w.cookie_mass, 0.0686, 0.0001);
  EXPECT_NEAR(w.adhesive_mass, 0.25 * w.cookie_mass, 1e-15);
  EXPECT_NEAR(w.total_kcal, 300.0, 3.0);
  EXPECT_NEAR(w.edible_fraction_of_drone, w.total_mass / 0.2141, 1e-15);
  auto const w2 = mass_and_calories(2 * 0.105634, m, gelatin, 0.0058, 0.25, 0.2141);
  EXPECT_NEAR(w2.total_mass, 2 * w.total_mass, 1e-15);
  EXPECT_NEAR(w2.total_kcal, 2 * w.total_kcal, 1e-12);
  EXPECT_THROW(mass_and_calories(0.1, m, gelatin, 0.0, 0.25, 0.2), InvalidArgument);
}

TEST(EdibleFraction, Basics) {
  EXPECT_DOUBLE_EQ(edible_fraction(0.1, 0.4), 0.25);
  EXPECT_EQ(edible_fraction(0.0, 0.4), 0.0);
  EXPECT_THROW(edible_fraction(0.1, 0.0), InvalidArgument);
}

TEST(TilingSvg, DeterministicOnePathPerTile) {
  auto const t = generate_hex_tiling({0.070, 0.6788, 0.1559});
  auto const a = tiling_svg(t);
  EXPECT_EQ(a, tiling_svg(generate_hex_tiling({0.070, 0.6788, 0.1559})));
  std::regex const path("<path d=\"M [^\"]* Z\"/>");
  auto const n = std::distance(std::sregex_iterator(a.begin(), a.end(), path), std::sregex_iterator());
  EXPECT_EQ(static_cast<std::size_t>(n), t.tiles.size());
  EXPECT_NE(a.find("width=\"678.800mm\""), std::string::npos);
  EXPECT_NE(a.find("viewBox=\"0 0 678.800 155.900\""), std::string::npos);
}
