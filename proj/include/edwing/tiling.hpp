#pragma once
/*
  Cut layout of a rectangular wing plate from hexagonal cookie pieces.

  Regular flat-top hexagons of circumradius R = D/2 are laid on a lattice with
  columns 1.5 R apart along the span and alternate columns shifted by half a
  hexagon height along the chord. The first hexagon sits in the root/leading
  corner with its bounding box flush to both edges. Every cell is clipped to
  the planform, so boundary cells become half hexagons (trapezoids) or other
  convex partials.
*/

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/geometry.hpp"
#include "edwing/materials.hpp"
#include "edwing/text.hpp"
#include "edwing/units.hpp"

namespace edwing {

inline constexpr double default_hex_circumdiameter = 0.070;  // m, one cookie across corners

struct HexTilingSpec {
  double circumdiameter = default_hex_circumdiameter;  // m
  double planform_span = 0.0;   // m, x extent
  double planform_chord = 0.0;  // m, y extent

  void validate() const {
    detail::require(planform_span > 0.0 && planform_chord > 0.0, "hex tiling: planform must be positive");
    detail::require(circumdiameter > 0.0, "hex tiling: circumdiameter must be > 0");
    if (circumdiameter > 2.0 * std::min(planform_span, planform_chord))
      throw InvalidArgument("hex tiling: circumdiameter is larger than the planform allows");
  }
};

struct TilingLayout {
  std::vector<geometry::Polygon> tiles;  // counter-clockwise, m
  std::size_t full_hex_count = 0;
  std::size_t partial_count = 0;
  double seam_length = 0.0;   // m, interior shared edges
  double covered_area = 0.0;  // m^2
  double span = 0.0;          // m
  double chord = 0.0;         // m
};

struct WingMassBreakdown {
  double cookie_mass = 0.0;    // kg
  double adhesive_mass = 0.0;  // kg
  double total_mass = 0.0;     // kg
  double total_kcal = 0.0;
  double edible_fraction_of_drone = 0.0;
};

inline geometry::Polygon flat_top_hexagon(double cx, double cy, double circumradius) {
  geometry::Polygon h;
  h.reserve(6);
  for (int k = 0; k < 6; ++k) {
    double const a = units::pi / 3.0 * k;
    h.push_back({cx + circumradius * std::cos(a), cy + circumradius * std::sin(a)});
  }
  return h;
}

/// Lattice centre of column i, row j.
inline geometry::Point hex_center(long i, long j, double circumradius) {
  double const row_pitch = std::sqrt(3.0) * circumradius;
  double const shift = (i % 2 != 0) ? 0.5 * row_pitch : 0.0;
  return {circumradius + 1.5 * circumradius * static_cast<double>(i),
          0.5 * row_pitch + row_pitch * static_cast<double>(j) + shift};
}

/// Column and row index ranges whose cells can touch a span x chord plate.
struct LatticeRange {
  long i_min, i_max, j_min, j_max;
};

inline LatticeRange lattice_range(double span, double chord, double circumradius) {
  double const row_pitch = std::sqrt(3.0) * circumradius;
  return {-1, static_cast<long>(std::ceil(span / (1.5 * circumradius))) + 1, -2,
          static_cast<long>(std::ceil(chord / row_pitch)) + 1};
}

inline TilingLayout generate_hex_tiling(HexTilingSpec const& spec) {
  spec.validate();
  double const r = 0.5 * spec.circumdiameter;
  double const b = spec.planform_span;
  double const c = spec.planform_chord;
  double const hex_area = 1.5 * std::sqrt(3.0) * r * r;
  double const eps = 1e-12 * std::max(b, c);
  auto const plate = geometry::rectangle(0.0, 0.0, b, c);
  auto const range = lattice_range(b, c, r);

  TilingLayout out;
  out.span = b;
  out.chord = c;
  double perimeter_sum = 0.0;
  for (long i = range.i_min; i <= range.i_max; ++i) {
    for (long j = range.j_min; j <= range.j_max; ++j) {
      auto const ctr = hex_center(i, j, r);
      if (ctr.x + r <= 0.0 || ctr.x - r >= b || ctr.y + r <= 0.0 || ctr.y - r >= c) continue;
      auto piece = geometry::simplify(geometry::clip_convex(flat_top_hexagon(ctr.x, ctr.y, r), plate), eps);
      if (piece.size() < 3) continue;
      double const a = geometry::area(piece);
      if (a <= 1e-12 * hex_area) continue;
      if (std::abs(a - hex_area) <= 1e-9 * hex_area)
        ++out.full_hex_count;
      else
        ++out.partial_count;
      out.covered_area += a;
      perimeter_sum += geometry::perimeter(piece);
      out.tiles.push_back(std::move(piece));
    }
  }
  // Every interior edge is counted by the two tiles sharing it; the plate
  // outline by one.
  out.seam_length = 0.5 * (perimeter_sum - 2.0 * (b + c));
  return out;
}

struct SeamDensity {
  double hex = 0.0;     // m of seam per m^2
  double square = 0.0;  // m of seam per m^2
};

/// Asymptotic interior seam length per unit area for an infinite hexagonal
/// and an infinite square tiling with the given cell area.
inline SeamDensity seam_density_comparison(double cell_area) {
  detail::require(cell_area > 0.0, "seam_density_comparison: cell area must be > 0");
  double const side = std::sqrt(2.0 * cell_area / (3.0 * std::sqrt(3.0)));
  return {2.0 / (std::sqrt(3.0) * side), 2.0 / std::sqrt(cell_area)};
}

inline WingMassBreakdown mass_and_calories(double covered_area, FoodMaterial const& material,
                                           AdhesiveRecord const& adhesive, double thickness,
                                           double adhesive_ratio, double drone_total_mass) {
  detail::require(thickness > 0.0, "mass_and_calories: thickness must be > 0");
  detail::require(covered_area > 0.0, "mass_and_calories: covered area must be > 0");
  detail::require(adhesive_ratio >= 0.0, "mass_and_calories: adhesive ratio must be >= 0");
  detail::require(drone_total_mass > 0.0, "mass_and_calories: drone mass must be > 0");
  WingMassBreakdown m;
  m.cookie_mass = covered_area * material.density * thickness;
  m.adhesive_mass = adhesive_ratio * m.cookie_mass;
  m.total_mass = m.cookie_mass + m.adhesive_mass;
  m.total_kcal = m.cookie_mass * material.caloric_density + m.adhesive_mass * adhesive.caloric_density;
  m.edible_fraction_of_drone = m.total_mass / drone_total_mass;
  return m;
}

inline WingMassBreakdown mass_and_calories(TilingLayout const& layout, FoodMaterial const& material,
                                           AdhesiveRecord const& adhesive, double thickness,
                                           double adhesive_ratio, double drone_total_mass) {
  return mass_and_calories(layout.covered_area, material, adhesive, thickness, adhesive_ratio, drone_total_mass);
}

/// Edible mass over total drone mass.
inline double edible_fraction(double edible_mass, double drone_total_mass) {
  detail::require(drone_total_mass > 0.0 && edible_mass >= 0.0, "edible_fraction: invalid masses");
  return edible_mass / drone_total_mass;
}

/// SVG 1.1 cut sheet in millimetres, one closed path per tile.
inline std::string tiling_svg(TilingLayout const& layout) {
  std::string const w = text::fixed(layout.span * units::m_to_mm, 3);
  std::string const h = text::fixed(layout.chord * units::m_to_mm, 3);
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "mm\" height=\"" + h +
       "mm\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  s += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"0.1\">\n";
  for (auto const& tile : layout.tiles) {
    s += "<path d=\"";
    for (std::size_t k = 0; k < tile.size(); ++k) {
      s += (k == 0 ? "M " : " L ");
      s += text::fixed(tile[k].x * units::m_to_mm, 3) + " " + text::fixed(tile[k].y * units::m_to_mm, 3);
    }
    s += " Z\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

inline void export_svg(TilingLayout const& layout, std::filesystem::path const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << tiling_svg(layout);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace edwing
