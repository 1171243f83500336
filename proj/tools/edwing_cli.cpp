// edwing: command-line front end for the edible-wing design toolkit.
//
//   edwing design    [--config FILE] [--out-dir DIR] [--format text|json|both] [--<key> VALUE ...]
//   edwing map       [--config FILE] [--out-dir DIR] [--target N_PER_M2] [--<key> VALUE ...]
//   edwing tile      [--config FILE] [--out-dir DIR] [--span-mm B --chord-mm C] [--<key> VALUE ...]
//   edwing structure [--config FILE] [--out-dir DIR] [--lift-n L --span-mm B] [--<key> VALUE ...]
//   edwing materials [--db FILE] [--adhesive-db FILE] [--target-modulus-mpa E --target-density RHO]
//
// Exit status: 0 when every check passes, 1 when a design check fails,
// 2 on input or stage errors.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edwing/edwing.hpp"

namespace {

using namespace edwing;

constexpr int exit_pass = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_error = 2;

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::map<std::string, std::string> overrides;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "design config file (key = value)")->check(CLI::ExistingFile);
  sub->add_option("--out-dir", opts.out_dir, "output directory (overrides out_dir)");
  for (auto const& k : config_keys()) {
    auto& slot = opts.overrides[k.name];
    sub->add_option("--" + k.name, slot, k.doc);
  }
}

DesignConfig resolve_config(CommonOptions const& opts) {
  DesignConfig cfg = opts.config_path.empty() ? DesignConfig{} : load_config(opts.config_path);
  for (auto const& [key, value] : opts.overrides)
    if (!value.empty()) set_config_value(cfg, key, value);
  if (!opts.out_dir.empty()) set_config_value(cfg, "out_dir", opts.out_dir);
  return cfg;
}

std::filesystem::path output_dir(DesignConfig const& cfg) {
  std::filesystem::path dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

int run_design(CommonOptions const& opts, std::string const& format) {
  auto const cfg = resolve_config(opts);
  auto const report = run_design_pipeline(cfg);
  auto const dir = output_dir(cfg);
  if (format == "text" || format == "both") emit_report(report, ReportFormat::human_text, dir / "design_report.txt");
  if (format == "json" || format == "both")
    emit_report(report, ReportFormat::machine_structured, dir / "design_report.json");
  std::cout << report_text(report);
  return report.pass() ? exit_pass : exit_check_failed;
}

int run_map(CommonOptions const& opts, std::optional<double> target) {
  auto const cfg = resolve_config(opts);
  double const wing_loading = target ? *target : run_area_stages(cfg).wing_loading;
  auto const& m = cfg.map;
  auto const grid = design_space_grid({m.speed_min, m.speed_max}, {m.ar_min, m.ar_max}, m.speed_steps, m.ar_steps,
                                      cfg.requirements.zero_lift_drag, cfg.environment);
  auto const dir = output_dir(cfg);
  emit_design_map(grid, wing_loading, dir / "design_map.csv", dir / "design_map.svg");
  auto const contour = iso_contour(grid, wing_loading);
  std::cout << "grid " << grid.speeds.size() << " x " << grid.aspect_ratios.size() << ", target W/S "
            << text::significant(wing_loading, 4) << " N/m^2, iso-line vertices " << contour.size() << "\n"
            << "wrote " << (dir / "design_map.csv").string() << " and " << (dir / "design_map.svg").string() << "\n";
  return exit_pass;
}

int run_tile(CommonOptions const& opts, std::optional<double> span_mm, std::optional<double> chord_mm) {
  auto const cfg = resolve_config(opts);
  double span = 0.0, chord = 0.0, drone_mass = 0.0;
  if (span_mm && chord_mm) {
    span = *span_mm * units::mm_to_m;
    chord = *chord_mm * units::mm_to_m;
    drone_mass = cfg.drone_total_mass.value_or(0.0);
  } else if (span_mm || chord_mm) {
    throw InvalidArgument("--span-mm and --chord-mm must be given together");
  } else {
    auto const rep = run_design_pipeline(cfg);
    span = rep.wing.span;
    chord = rep.wing.chord;
    drone_mass = cfg.drone_total_mass.value_or(rep.mass.empty_mass);
  }
  auto const layout = generate_hex_tiling({cfg.hex_circumdiameter, span, chord});
  auto const dir = output_dir(cfg);
  export_svg(layout, dir / "tiling.svg");

  auto const material = detail::pick_material(cfg);
  auto const adhesive = detail::pick_adhesive(cfg);
  std::cout << "planform " << text::fixed(span * units::m_to_mm, 1) << " x " << text::fixed(chord * units::m_to_mm, 1)
            << " mm, hexagon " << text::fixed(cfg.hex_circumdiameter * units::m_to_mm, 1) << " mm across corners\n"
            << "full hexagons " << layout.full_hex_count << ", partial tiles " << layout.partial_count
            << ", seam length " << text::significant(layout.seam_length * units::m_to_mm, 4) << " mm\n";
  if (drone_mass > 0.0) {
    auto const m = mass_and_calories(layout, material, adhesive.adhesive, cfg.plate_thickness, cfg.adhesive_ratio,
                                     drone_mass);
    std::cout << "wing mass " << text::significant(m.total_mass * units::kg_to_g, 4) << " g ("
              << material.name << " " << text::significant(m.cookie_mass * units::kg_to_g, 4) << " g, "
              << adhesive.adhesive.name << " " << text::significant(m.adhesive_mass * units::kg_to_g, 4)
              << " g), " << text::significant(m.total_kcal, 4) << " kcal, edible fraction "
              << text::significant(m.edible_fraction_of_drone, 4) << "\n";
  }
  std::cout << "wrote " << (dir / "tiling.svg").string() << "\n";
  return exit_pass;
}

int run_structure(CommonOptions const& opts, std::optional<double> lift_n, std::optional<double> span_mm) {
  auto const cfg = resolve_config(opts);
  double lift = 0.0, span = 0.0;
  std::optional<double> empty_weight;
  if (lift_n && span_mm) {
    lift = *lift_n;
    span = *span_mm * units::mm_to_m;
  } else if (lift_n || span_mm) {
    throw InvalidArgument("--lift-n and --span-mm must be given together");
  } else {
    auto const rep = run_design_pipeline(cfg);
    lift = rep.mass.gross_weight;
    span = rep.wing.span;
    empty_weight = rep.mass.empty_mass * cfg.environment.gravity;
  }
  auto const dist = schrenk_distribution({lift, span, cfg.load_samples});
  auto const dir = output_dir(cfg);
  std::string csv = "x_m,F_n_per_m\n";
  for (auto const& s : dist.samples) csv += text::exact(s.x) + "," + text::exact(s.f) + "\n";
  detail::write_file(dir / "schrenk_load.csv", csv);

  std::cout << "full-span lift " << text::significant(lift, 4) << " N, span "
            << text::significant(span * units::m_to_mm, 4) << " mm\n"
            << "f0 " << text::significant(dist.intercept, 4) << " N/m, F(0) "
            << text::significant(dist.samples.front().f, 4) << " N/m, F(b/2) "
            << text::significant(dist.samples.back().f, 4) << " N/m\n"
            << "half-span lift " << text::significant(integrate_halfspan(dist), 6) << " N\n";
  int status = exit_pass;
  if (cfg.strength_capacity) {
    auto const s = strength_margin(*cfg.strength_capacity, lift);
    std::cout << "required " << text::significant(s.required_half_lift, 4) << " N, capacity "
              << text::significant(s.capacity_half_lift, 4) << " N, margin " << text::significant(s.margin, 4)
              << " (full span " << text::significant(s.full_span_capacity_in_wg, 4) << " W g) "
              << (s.pass ? "pass" : "fail") << "\n";
    if (empty_weight)
      std::cout << "capacity over empty weight " << text::significant(empty_weight_ratio_check(s.capacity_half_lift, *empty_weight), 4) << "\n";
    if (!s.pass) status = exit_check_failed;
  }
  if (cfg.flexural_rigidity) {
    auto const d = cantilever_deflection(dist, *cfg.flexural_rigidity);
    std::cout << "tip deflection " << text::significant(d.tip_deflection * units::m_to_mm, 4) << " mm\n";
  }
  auto const plan = bag_load_plan(dist, cfg.bag_stations, cfg.environment.gravity);
  for (std::size_t k = 0; k < plan.size(); ++k)
    std::cout << "bag " << k + 1 << ": x " << text::fixed(plan[k].x_begin * units::m_to_mm, 1) << " to "
              << text::fixed(plan[k].x_end * units::m_to_mm, 1) << " mm, "
              << text::significant(plan[k].mass * units::kg_to_g, 4) << " g\n";
  std::cout << "wrote " << (dir / "schrenk_load.csv").string() << "\n";
  return status;
}

int run_materials(std::string const& db, std::string const& adhesive_db, std::optional<double> modulus_mpa,
                  std::optional<double> density) {
  auto const materials = db.empty() ? seed_materials() : load_material_db(db);
  auto const adhesives = adhesive_db.empty() ? seed_adhesives() : load_adhesive_db(adhesive_db);

  if (modulus_mpa || density) {
    if (!(modulus_mpa && density))
      throw InvalidArgument("--target-modulus-mpa and --target-density must be given together");
    std::cout << "Ashby ranking (distance in log10 E, log10 rho)\n";
    for (auto const& r : rank_by_ashby_distance(materials, {*modulus_mpa * units::mpa_to_pa, *density}))
      std::cout << "  " << text::fixed(r.distance, 4) << "  " << r.material.name << "\n";
  }
  if (!materials.empty()) {
    std::cout << "Pareto front (light, stiff, energy dense)\n";
    for (auto const& m : pareto_front(materials))
      std::cout << "  " << m.name << ": E " << text::significant(m.youngs_modulus * units::pa_to_mpa, 4)
                << " MPa, rho " << text::significant(m.density, 4) << " kg/m^3, "
                << text::significant(m.caloric_density, 4) << " kcal/kg\n";
  }
  if (!adhesives.empty()) {
    auto const choice = select_adhesive(adhesives);
    std::cout << "Adhesive: " << choice.adhesive.name << " (conservative strength "
              << text::significant(choice.conservative_strength * units::pa_to_kpa, 4) << " kPa)\n";
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edible-wing drone design toolkit"};
  app.require_subcommand(1);

  CommonOptions design_opts, map_opts, tile_opts, structure_opts;
  std::string format = "both";
  std::optional<double> map_target, tile_span, tile_chord, structure_lift, structure_span;
  std::string db, adhesive_db;
  std::optional<double> target_modulus, target_density;

  auto* design = app.add_subcommand("design", "run the full sizing pipeline and write reports");
  add_common(design, design_opts);
  design->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "both"}));

  auto* map = app.add_subcommand("map", "wing loading over cruise speed and aspect ratio");
  add_common(map, map_opts);
  map->add_option("--target", map_target, "iso-line wing loading [N/m^2] (default: from the mass/area stages)");

  auto* tile = app.add_subcommand("tile", "hexagonal cut layout and SVG");
  add_common(tile, tile_opts);
  tile->add_option("--span-mm", tile_span, "planform span [mm] (default: solved wing)");
  tile->add_option("--chord-mm", tile_chord, "planform chord [mm] (default: solved wing)");

  auto* structure = app.add_subcommand("structure", "Schrenk loading, strength margin and bag plan");
  add_common(structure, structure_opts);
  structure->add_option("--lift-n", structure_lift, "full-span lift [N] (default: gross weight)");
  structure->add_option("--span-mm", structure_span, "span [mm] (default: solved wing)");

  auto* materials = app.add_subcommand("materials", "material ranking, Pareto front and adhesive choice");
  materials->add_option("--db", db, "material DB file")->check(CLI::ExistingFile);
  materials->add_option("--adhesive-db", adhesive_db, "adhesive DB file")->check(CLI::ExistingFile);
  materials->add_option("--target-modulus-mpa", target_modulus, "target Young's modulus [MPa]");
  materials->add_option("--target-density", target_density, "target density [kg/m^3]");

  CLI11_PARSE(app, argc, argv);

  try {
    if (design->parsed()) return run_design(design_opts, format);
    if (map->parsed()) return run_map(map_opts, map_target);
    if (tile->parsed()) return run_tile(tile_opts, tile_span, tile_chord);
    if (structure->parsed()) return run_structure(structure_opts, structure_lift, structure_span);
    if (materials->parsed()) return run_materials(db, adhesive_db, target_modulus, target_density);
  } catch (edwing::Error const& e) {
    std::cerr << "edwing: " << e.what() << "\n";
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "edwing: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
