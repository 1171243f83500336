#pragma once
/*
  Report writers: an aligned text table for people, a JSON document for
  tools, and the wing-loading design map as CSV plus an SVG heat map.
*/

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edwing/error.hpp"
#include "edwing/pipeline.hpp"
#include "edwing/sizing.hpp"
#include "edwing/text.hpp"
#include "edwing/units.hpp"

namespace edwing {

enum class ReportFormat { human_text, machine_structured };

namespace detail {

inline void write_file(std::filesystem::path const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

class TextTable {
 public:
  void section(std::string title) { rows_.push_back({std::move(title), "", "", true}); }
  void row(std::string name, std::string value, std::string unit = "") {
    rows_.push_back({std::move(name), std::move(value), std::move(unit), false});
  }

  std::string str() const {
    std::size_t w_name = 0, w_value = 0;
    for (auto const& r : rows_)
      if (!r.heading) {
        w_name = std::max(w_name, r.name.size());
        w_value = std::max(w_value, r.value.size());
      }
    std::string s;
    for (auto const& r : rows_) {
      if (r.heading) {
        if (!s.empty()) s += "\n";
        s += r.name + "\n" + std::string(r.name.size(), '-') + "\n";
        continue;
      }
      std::string line = r.name + std::string(w_name - r.name.size() + 2, ' ') +
                         std::string(w_value - r.value.size(), ' ') + r.value;
      if (!r.unit.empty()) line += " " + r.unit;
      s += line + "\n";
    }
    return s;
  }

 private:
  struct Row {
    std::string name, value, unit;
    bool heading;
  };
  std::vector<Row> rows_;
};

inline std::string sig4(double v) { return text::significant(v, 4); }

}  // namespace detail

/// Human-readable report. Numbers carry 4 significant figures.
inline std::string report_text(DesignReport const& r) {
  using detail::sig4;
  detail::TextTable t;
  t.section("Design parameters of the edible wing");
  t.row("Nutrition to carry", sig4(r.config.requirements.nutrition_target), "kcal");
  t.row("Payload (W_payload)", sig4(r.mass.payload_mass * units::kg_to_g), "g");
  t.row("Estimated emptied drone mass (W_wo_payload)", sig4(r.mass.empty_mass * units::kg_to_g), "g");
  t.row("Gross mass of drone (W)", sig4(r.mass.gross_mass * units::kg_to_g), "g");
  t.row("Wing reference area (S)", sig4(r.wing.reference_area * units::m2_to_cm2), "cm^2");
  t.row("Wing loading (W/S)", sig4(r.aero.wing_loading), "N/m^2");
  t.row("Wing aspect ratio (AR)", sig4(r.wing.aspect_ratio));
  t.row("Wing chord (c)", sig4(r.wing.chord * units::m_to_mm), "mm");
  t.row("Wingspan (b)", sig4(r.wing.span * units::m_to_mm), "mm");
  t.row("Cruise speed (V_c)", sig4(r.aero.cruise_speed), "m/s");
  t.row("Chord Reynolds number (Re)", sig4(r.aero.achieved_re));
  t.row("Angle of attack (alpha)", sig4(units::degrees(r.aero.critical_alpha)), "deg");
  t.row("Lift coefficient (C_L)", sig4(r.aero.lift_coefficient));
  t.row("Stall speed (V_s)", sig4(r.aero.stall_speed), "m/s");
  t.row("Oswald efficiency (e)", sig4(r.aero.oswald_factor));
  t.row("Dynamic pressure (q)", sig4(r.aero.dynamic_pressure), "Pa");
  t.row("Plate thickness (t)", sig4(r.wing.plate_thickness * units::m_to_mm), "mm");
  t.row("Dihedral angle", sig4(r.wing.dihedral_deg), "deg");

  t.section("Thrust to weight");
  t.row("Drag coefficient (C_D)", sig4(r.propulsion.drag_coefficient));
  t.row("Cruise T/W", sig4(r.propulsion.required_tw_cruise));
  t.row("Thrust-match T/W (1/(L/D))", sig4(r.propulsion.thrust_match_tw));
  t.row("Maximum thrust (T_max)", sig4(r.propulsion.max_thrust), "N");
  t.row("Maximum T/W", sig4(r.propulsion.max_tw));
  t.row("Margin over cruise T/W", sig4(r.thrust_margin.margins.at(0)));
  t.row("Margin over thrust-match T/W", sig4(r.thrust_margin.margins.at(1)));
  t.row("Thrust verdict", r.thrust_margin.pass ? "pass" : "fail");

  t.section("Tail");
  t.row("Vertical tail volume coefficient (C_VT)", sig4(r.tail.c_vt));
  t.row("Horizontal tail volume coefficient (C_HT)", sig4(r.tail.c_ht));
  t.row("Vertical tail area (S_VT)", sig4(r.tail.s_vt * units::m2_to_cm2), "cm^2");
  t.row("Horizontal tail area (S_HT)", sig4(r.tail.s_ht * units::m2_to_cm2), "cm^2");
  t.row("Vertical tail arm (L_VT)", sig4(r.tail.l_vt * units::m_to_mm), "mm");
  t.row("Horizontal tail arm (L_HT)", sig4(r.tail.l_ht * units::m_to_mm), "mm");
  t.row("C_HT / C_VT", sig4(r.tail_verdict.coefficient_ratio));
  t.row("Tail verdict", r.tail_verdict.pass ? "pass" : "fail");

  t.section("Structure (half wing, Schrenk loading)");
  t.row("Root load F(0)", sig4(r.root_load), "N/m");
  t.row("Half-span lift (quadrature)", sig4(r.half_span_lift), "N");
  if (r.strength) {
    t.row("Required half-span lift (0.5 W g)", sig4(r.strength->required_half_lift), "N");
    t.row("Half-span capacity (L_s)", sig4(r.strength->capacity_half_lift), "N");
    t.row("Strength margin", sig4(r.strength->margin));
    t.row("Full-span capacity", sig4(r.strength->full_span_capacity_in_wg), "x W g");
    t.row("Capacity over empty weight", sig4(*r.empty_weight_ratio));
    t.row("Strength verdict", r.strength->pass ? "pass" : "fail");
  }
  if (r.deflection) t.row("Tip deflection", sig4(r.deflection->tip_deflection * units::m_to_mm), "mm");
  for (std::size_t k = 0; k < r.bag_plan.size(); ++k) {
    auto const& s = r.bag_plan[k];
    t.row("Bag " + std::to_string(k + 1) + " [" + sig4(s.x_begin * units::m_to_mm) + ", " +
              sig4(s.x_end * units::m_to_mm) + "] mm",
          sig4(s.mass * units::kg_to_g), "g");
  }

  t.section("Cut layout and nutrition");
  t.row("Material", r.material.name);
  t.row("Adhesive", r.adhesive.adhesive.name);
  t.row("Adhesive conservative strength", sig4(r.adhesive.conservative_strength * units::pa_to_kpa), "kPa");
  t.row("Hexagon size (across corners)", sig4(r.config.hex_circumdiameter * units::m_to_mm), "mm");
  t.row("Full hexagons", std::to_string(r.tiling.full_hex_count));
  t.row("Partial tiles", std::to_string(r.tiling.partial_count));
  t.row("Seam length", sig4(r.tiling.seam_length * units::m_to_mm), "mm");
  t.row("Covered area", sig4(r.tiling.covered_area * units::m2_to_cm2), "cm^2");
  t.row("Cookie mass", sig4(r.wing_mass.cookie_mass * units::kg_to_g), "g");
  t.row("Adhesive mass", sig4(r.wing_mass.adhesive_mass * units::kg_to_g), "g");
  t.row("Edible wing mass", sig4(r.wing_mass.total_mass * units::kg_to_g), "g");
  t.row("Energy in wing", sig4(r.wing_mass.total_kcal), "kcal");
  t.row("Edible fraction of drone", sig4(r.wing_mass.edible_fraction_of_drone));

  t.section("Inputs");
  for (auto const& e : config_echo(r.config))
    t.row(e.key, e.value ? *e.value : "(unset)", e.is_default ? "(default)" : "");

  std::string s = t.str();
  if (!r.warnings.empty()) {
    s += "\nWarnings\n--------\n";
    for (auto const& w : r.warnings) s += w + "\n";
  }
  s += std::string("\nVerdict: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
  return s;
}

/// JSON report: SI values, a `display` block in table units and an echo of
/// every input with its origin.
inline nlohmann::ordered_json report_json(DesignReport const& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["mass_budget"] = {{"payload_mass_kg", r.mass.payload_mass},
                      {"empty_mass_kg", r.mass.empty_mass},
                      {"gross_mass_kg", r.mass.gross_mass},
                      {"gross_weight_n", r.mass.gross_weight}};
  j["wing"] = {{"reference_area_m2", r.wing.reference_area},
               {"aspect_ratio", r.wing.aspect_ratio},
               {"span_m", r.wing.span},
               {"chord_m", r.wing.chord},
               {"plate_thickness_m", r.wing.plate_thickness},
               {"dihedral_deg", r.wing.dihedral_deg}};
  j["aero"] = {{"cruise_speed_m_s", r.aero.cruise_speed},
               {"stall_speed_m_s", r.aero.stall_speed},
               {"critical_alpha_rad", r.aero.critical_alpha},
               {"lift_coefficient", r.aero.lift_coefficient},
               {"oswald_factor", r.aero.oswald_factor},
               {"dynamic_pressure_pa", r.aero.dynamic_pressure},
               {"achieved_re", r.aero.achieved_re},
               {"wing_loading_n_m2", r.aero.wing_loading},
               {"lift_drag_ratio", r.aero.lift_drag_ratio}};
  j["propulsion"] = {{"drag_coefficient", r.propulsion.drag_coefficient},
                     {"max_thrust_n", r.propulsion.max_thrust},
                     {"required_tw_cruise", r.propulsion.required_tw_cruise},
                     {"thrust_match_tw", r.propulsion.thrust_match_tw},
                     {"max_tw", r.propulsion.max_tw},
                     {"margins", r.thrust_margin.margins},
                     {"pass", r.thrust_margin.pass}};
  j["tail"] = {{"c_vt", r.tail.c_vt},
               {"c_ht", r.tail.c_ht},
               {"s_vt_m2", r.tail.s_vt},
               {"s_ht_m2", r.tail.s_ht},
               {"l_vt_m", r.tail.l_vt},
               {"l_ht_m", r.tail.l_ht},
               {"coefficient_ratio", r.tail_verdict.coefficient_ratio},
               {"violations", r.tail_verdict.violations},
               {"pass", r.tail_verdict.pass}};
  json structure = {{"root_load_n_m", r.root_load}, {"half_span_lift_n", r.half_span_lift}};
  if (r.strength) {
    structure["strength"] = {{"required_half_lift_n", r.strength->required_half_lift},
                             {"capacity_half_lift_n", r.strength->capacity_half_lift},
                             {"margin", r.strength->margin},
                             {"full_span_capacity_in_wg", r.strength->full_span_capacity_in_wg},
                             {"empty_weight_ratio", *r.empty_weight_ratio},
                             {"pass", r.strength->pass}};
  }
  if (r.deflection)
    structure["deflection"] = {{"tip_deflection_m", r.deflection->tip_deflection},
                               {"flexural_rigidity_n_m2", r.deflection->flexural_rigidity_used}};
  json bags = json::array();
  for (auto const& s : r.bag_plan) bags.push_back({{"x_begin_m", s.x_begin}, {"x_end_m", s.x_end}, {"mass_kg", s.mass}});
  structure["bag_plan"] = bags;
  j["structure"] = structure;
  j["tiling"] = {{"material", r.material.name},
                 {"adhesive", r.adhesive.adhesive.name},
                 {"adhesive_conservative_strength_pa", r.adhesive.conservative_strength},
                 {"tile_count", r.tiling.tile_count},
                 {"full_hex_count", r.tiling.full_hex_count},
                 {"partial_count", r.tiling.partial_count},
                 {"seam_length_m", r.tiling.seam_length},
                 {"covered_area_m2", r.tiling.covered_area},
                 {"cookie_mass_kg", r.wing_mass.cookie_mass},
                 {"adhesive_mass_kg", r.wing_mass.adhesive_mass},
                 {"total_mass_kg", r.wing_mass.total_mass},
                 {"total_kcal", r.wing_mass.total_kcal},
                 {"edible_fraction_of_drone", r.wing_mass.edible_fraction_of_drone}};
  j["display"] = {{"payload_g", r.mass.payload_mass * units::kg_to_g},
                  {"empty_mass_g", r.mass.empty_mass * units::kg_to_g},
                  {"gross_mass_g", r.mass.gross_mass * units::kg_to_g},
                  {"reference_area_cm2", r.wing.reference_area * units::m2_to_cm2},
                  {"chord_mm", r.wing.chord * units::m_to_mm},
                  {"span_mm", r.wing.span * units::m_to_mm},
                  {"plate_thickness_mm", r.wing.plate_thickness * units::m_to_mm},
                  {"critical_alpha_deg", units::degrees(r.aero.critical_alpha)},
                  {"tail_arm_vt_mm", r.tail.l_vt * units::m_to_mm},
                  {"tail_arm_ht_mm", r.tail.l_ht * units::m_to_mm},
                  {"edible_wing_mass_g", r.wing_mass.total_mass * units::kg_to_g}};
  json echo = json::array();
  for (auto const& e : config_echo(r.config)) {
    echo.push_back({{"key", e.key},
                    {"value", e.value ? json(*e.value) : json(nullptr)},
                    {"source", e.is_default ? "default" : "config"}});
  }
  j["inputs"] = echo;
  j["warnings"] = r.warnings;
  j["pass"] = r.pass();
  return j;
}

inline std::string report_json_text(DesignReport const& r) { return report_json(r).dump(2) + "\n"; }

inline void emit_report(DesignReport const& r, ReportFormat format, std::filesystem::path const& path) {
  detail::write_file(path, format == ReportFormat::human_text ? report_text(r) : report_json_text(r));
}

// --- design map -------------------------------------------------------------

inline std::string design_map_csv(DesignSpaceGrid const& g) {
  std::string s = "Vc,AR,wing_loading\n";
  for (std::size_t i = 0; i < g.speeds.size(); ++i)
    for (std::size_t j = 0; j < g.aspect_ratios.size(); ++j)
      s += text::exact(g.speeds[i]) + "," + text::exact(g.aspect_ratios[j]) + "," + text::exact(g.at(i, j)) + "\n";
  return s;
}

namespace detail {

// Dark blue -> teal -> yellow ramp, t in [0, 1].
inline std::string heat_color(double t) {
  struct Stop {
    double t, r, g, b;
  };
  static constexpr Stop stops[] = {{0.0, 68, 1, 84}, {0.5, 33, 145, 140}, {1.0, 253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0);
  std::size_t k = t < 0.5 ? 0 : 1;
  double const u = (t - stops[k].t) / (stops[k + 1].t - stops[k].t);
  auto mix = [&](double a, double b) { return static_cast<int>(std::lround(a + u * (b - a))); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(stops[k].r, stops[k + 1].r), mix(stops[k].g, stops[k + 1].g),
                mix(stops[k].b, stops[k + 1].b));
  return buf;
}

}  // namespace detail

/// Heat map of W/S over (V_c, AR) with the target iso-line drawn dashed.
inline std::string design_map_svg(DesignSpaceGrid const& g, double target_wing_loading) {
  constexpr double width = 600.0, height = 400.0, margin = 50.0;
  double const v0 = g.speeds.front(), v1 = g.speeds.back();
  double const a0 = g.aspect_ratios.front(), a1 = g.aspect_ratios.back();
  auto px = [&](double v) { return margin + (v - v0) / (v1 - v0) * width; };
  auto py = [&](double ar) { return margin + height - (ar - a0) / (a1 - a0) * height; };
  auto const [lo_it, hi_it] = std::minmax_element(g.wing_loading.begin(), g.wing_loading.end());
  double const lo = *lo_it, hi = *hi_it;
  auto f = [](double v) { return text::fixed(v, 2); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + f(width + 2 * margin) +
       "\" height=\"" + f(height + 2 * margin) + "\">\n";
  s += "<g stroke=\"none\">\n";
  std::size_t const ns = g.speeds.size(), na = g.aspect_ratios.size();
  for (std::size_t i = 0; i < ns; ++i) {
    double const xa = px(i == 0 ? v0 : 0.5 * (g.speeds[i - 1] + g.speeds[i]));
    double const xb = px(i + 1 == ns ? v1 : 0.5 * (g.speeds[i] + g.speeds[i + 1]));
    for (std::size_t j = 0; j < na; ++j) {
      double const ya = py(j + 1 == na ? a1 : 0.5 * (g.aspect_ratios[j] + g.aspect_ratios[j + 1]));
      double const yb = py(j == 0 ? a0 : 0.5 * (g.aspect_ratios[j - 1] + g.aspect_ratios[j]));
      double const t = hi > lo ? (g.at(i, j) - lo) / (hi - lo) : 0.0;
      s += "<rect x=\"" + f(xa) + "\" y=\"" + f(ya) + "\" width=\"" + f(xb - xa) + "\" height=\"" + f(yb - ya) +
           "\" fill=\"" + detail::heat_color(t) + "\"/>\n";
    }
  }
  s += "</g>\n";

  auto const contour = iso_contour(g, target_wing_loading);
  if (contour.size() >= 2) {
    s += "<polyline fill=\"none\" stroke=\"#ffffff\" stroke-width=\"2\" stroke-dasharray=\"6,4\" points=\"";
    for (std::size_t k = 0; k < contour.size(); ++k)
      s += (k ? " " : "") + f(px(contour[k].speed)) + "," + f(py(contour[k].aspect_ratio));
    s += "\"/>\n";
  }
  s += "<rect x=\"" + f(margin) + "\" y=\"" + f(margin) + "\" width=\"" + f(width) + "\" height=\"" + f(height) +
       "\" fill=\"none\" stroke=\"#000000\"/>\n";
  s += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  s += "<text x=\"" + f(margin + width / 2) + "\" y=\"" + f(height + 2 * margin - 12) +
       "\" text-anchor=\"middle\">cruise speed V_c [m/s] (" + text::significant(v0, 4) + " to " +
       text::significant(v1, 4) + ")</text>\n";
  s += "<text x=\"14\" y=\"" + f(margin + height / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
       f(margin + height / 2) + ")\">aspect ratio AR (" + text::significant(a0, 4) + " to " +
       text::significant(a1, 4) + ")</text>\n";
  s += "<text x=\"" + f(margin) + "\" y=\"" + f(margin - 16) + "\">W/S [N/m^2] " + text::significant(lo, 4) +
       " to " + text::significant(hi, 4) + "; dashed: W/S = " + text::significant(target_wing_loading, 4) +
       "</text>\n";
  s += "</g>\n</svg>\n";
  return s;
}

inline void emit_design_map(DesignSpaceGrid const& g, double target_wing_loading,
                            std::filesystem::path const& csv_path, std::filesystem::path const& svg_path) {
  detail::write_file(csv_path, design_map_csv(g));
  detail::write_file(svg_path, design_map_svg(g, target_wing_loading));
}

}  // namespace edwing
