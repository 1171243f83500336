#pragma once
/*
  End-to-end design run: mass -> area -> planform -> stall/alpha -> thrust ->
  tail -> structure -> cut layout. Each stage's failure is rethrown as a
  StageError carrying the stage name.
*/

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edwing/config.hpp"
#include "edwing/error.hpp"
#include "edwing/materials.hpp"
#include "edwing/performance.hpp"
#include "edwing/sizing.hpp"
#include "edwing/structure.hpp"
#include "edwing/tail.hpp"
#include "edwing/tiling.hpp"

namespace edwing {

struct TilingSummary {
  std::size_t tile_count = 0;
  std::size_t full_hex_count = 0;
  std::size_t partial_count = 0;
  double seam_length = 0.0;   // m
  double covered_area = 0.0;  // m^2
};

struct DesignReport {
  DesignConfig config;
  MassBudget mass;
  WingGeometry wing;
  AeroResult aero;
  PropulsionSpec propulsion;
  ThrustMarginReport thrust_margin;
  TailSpec tail;
  TailVerdict tail_verdict;
  double half_span_lift = 0.0;  // N, quadrature of the Schrenk loading
  double root_load = 0.0;       // N/m, F(0)
  std::optional<StrengthReport> strength;
  std::optional<double> empty_weight_ratio;
  std::optional<DeflectionResult> deflection;
  std::vector<BagStation> bag_plan;
  TilingSummary tiling;
  FoodMaterial material;
  AdhesiveChoice adhesive;
  WingMassBreakdown wing_mass;
  std::vector<std::string> warnings;

  bool pass() const {
    return thrust_margin.pass && tail_verdict.pass && (!strength || strength->pass);
  }
};

namespace detail {

template <typename Fn>
auto run_stage(char const* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (StageError const&) {
    throw;
  } catch (std::exception const& e) {
    throw StageError(stage, e.what());
  }
}

inline FoodMaterial pick_material(DesignConfig const& cfg) {
  auto const db = cfg.material_db.empty() ? seed_materials() : load_material_db(cfg.material_db);
  auto it = std::find_if(db.begin(), db.end(), [&](auto const& m) { return m.name == cfg.material; });
  if (it == db.end()) throw InvalidArgument("material '" + cfg.material + "' not in the material DB");
  return *it;
}

inline AdhesiveChoice pick_adhesive(DesignConfig const& cfg) {
  auto const db = cfg.adhesive_db.empty() ? seed_adhesives() : load_adhesive_db(cfg.adhesive_db);
  if (cfg.adhesive.empty()) return select_adhesive(db);
  auto it = std::find_if(db.begin(), db.end(), [&](auto const& a) { return a.name == cfg.adhesive; });
  if (it == db.end()) throw InvalidArgument("adhesive '" + cfg.adhesive + "' not in the adhesive DB");
  return {*it, conservative_strength(*it)};
}

}  // namespace detail

/// Mass budget and reference area only; shared by the full run and the map.
struct AreaStageResult {
  MassBudget mass;
  double area = 0.0;          // m^2
  double wing_loading = 0.0;  // N/m^2
};

inline AreaStageResult run_area_stages(DesignConfig const& cfg) {
  detail::run_stage("config", [&] { validate_config(cfg); });
  AreaStageResult r;
  r.mass = detail::run_stage("mass", [&] { return estimate_mass_budget(cfg.requirements, cfg.environment); });
  r.area = detail::run_stage("area", [&] {
    detail::require(cfg.requirements.nutrition_target > 0.0, "nutrition target must be > 0");
    return wing_area_from_calories(cfg.requirements.nutrition_target, cfg.requirements.areal_caloric_density);
  });
  r.wing_loading = r.mass.gross_weight / r.area;
  return r;
}

inline DesignReport run_design_pipeline(DesignConfig const& cfg) {
  DesignReport rep;
  rep.config = cfg;
  auto const& req = cfg.requirements;
  auto const& env = cfg.environment;

  auto const area_stage = run_area_stages(cfg);
  rep.mass = area_stage.mass;
  double const area = area_stage.area;
  double const wing_loading = area_stage.wing_loading;

  auto const planform = detail::run_stage("planform", [&] {
    return solve_planform(wing_loading, area, req.target_re, req.zero_lift_drag, env);
  });
  rep.wing = planform.geometry;
  rep.wing.plate_thickness = cfg.plate_thickness;
  rep.wing.dihedral_deg = cfg.dihedral_deg;

  detail::run_stage("aero", [&] {
    auto& a = rep.aero;
    a.cruise_speed = planform.cruise_speed;
    a.achieved_re = planform.achieved_re;
    a.wing_loading = wing_loading;
    a.oswald_factor = oswald_factor(rep.wing.aspect_ratio);
    a.dynamic_pressure = 0.5 * env.air_density * a.cruise_speed * a.cruise_speed;
    a.lift_drag_ratio = cfg.lift_drag_ratio;
    auto const crit = critical_alpha(wing_loading, rep.wing.aspect_ratio, a.cruise_speed, env);
    a.critical_alpha = crit.alpha;
    a.lift_coefficient = crit.lift_coefficient;
    a.stall_speed = crit.stall_speed;
    if (crit.beyond_linear_regime)
      rep.warnings.push_back("critical angle of attack " + text::significant(units::degrees(crit.alpha), 4) +
                             " deg is beyond the 15 deg linear lift range");
  });

  detail::run_stage("thrust", [&] {
    auto& p = rep.propulsion;
    p = cfg.propulsion;
    p.required_tw_cruise = cruise_thrust_to_weight(rep.mass.gross_weight, area, rep.wing.aspect_ratio,
                                                   rep.aero.oswald_factor, rep.aero.cruise_speed,
                                                   p.drag_coefficient, env);
    p.thrust_match_tw = thrust_match_tw(cfg.lift_drag_ratio);
    p.max_tw = max_thrust_to_weight(p.max_thrust, rep.mass.gross_weight);
    rep.thrust_margin = check_thrust_margin(p.max_tw, {p.required_tw_cruise, p.thrust_match_tw});
  });

  detail::run_stage("tail", [&] {
    rep.tail = solve_tail_arms(cfg.tail, rep.wing.span, rep.wing.chord, area);
    rep.tail_verdict = validate_tail(rep.tail, rep.wing.span, rep.wing.chord, area);
  });

  detail::run_stage("structure", [&] {
    auto const dist = schrenk_distribution({rep.mass.gross_weight, rep.wing.span, cfg.load_samples});
    rep.half_span_lift = integrate_halfspan(dist);
    rep.root_load = dist.samples.front().f;
    if (cfg.strength_capacity) {
      rep.strength = strength_margin(*cfg.strength_capacity, rep.mass.gross_weight);
      rep.empty_weight_ratio = empty_weight_ratio_check(*cfg.strength_capacity, rep.mass.empty_mass * env.gravity);
    }
    if (cfg.flexural_rigidity) rep.deflection = cantilever_deflection(dist, *cfg.flexural_rigidity);
    rep.bag_plan = bag_load_plan(dist, cfg.bag_stations, env.gravity);
  });

  detail::run_stage("tiling", [&] {
    rep.material = detail::pick_material(cfg);
    rep.adhesive = detail::pick_adhesive(cfg);
    auto const layout = generate_hex_tiling({cfg.hex_circumdiameter, rep.wing.span, rep.wing.chord});
    rep.tiling = {layout.tiles.size(), layout.full_hex_count, layout.partial_count, layout.seam_length,
                  layout.covered_area};
    double const drone_mass = cfg.drone_total_mass.value_or(rep.mass.empty_mass);
    rep.wing_mass = mass_and_calories(layout, rep.material, rep.adhesive.adhesive, cfg.plate_thickness,
                                      cfg.adhesive_ratio, drone_mass);
  });

  return rep;
}

}  // namespace edwing
