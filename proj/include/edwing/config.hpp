#pragma once
/*
  Flat `key = value` design configuration.

  Keys carry their unit as a suffix (payload_mass_g, plate_thickness_mm, ...)
  and are converted to SI on read. Unknown or repeated keys are errors. Lines
  starting with '#' are comments.
*/

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/performance.hpp"
#include "edwing/sizing.hpp"
#include "edwing/structure.hpp"
#include "edwing/tail.hpp"
#include "edwing/text.hpp"
#include "edwing/tiling.hpp"

namespace edwing {

struct DesignMapSettings {
  double speed_min = 4.0;   // m/s
  double speed_max = 16.0;  // m/s
  double ar_min = 1.0;
  double ar_max = 10.0;
  std::size_t speed_steps = 121;
  std::size_t ar_steps = 91;
};

struct DesignConfig {
  DesignRequirements requirements;
  EnvironmentSpec environment;
  PropulsionSpec propulsion;
  double lift_drag_ratio = default_lift_drag_ratio;
  TailSpec tail{0.05, 0.25, 50.0e-4, 100.0e-4, 0.0, 0.0};
  double hex_circumdiameter = default_hex_circumdiameter;  // m
  double plate_thickness = default_plate_thickness;        // m
  double adhesive_ratio = 0.25;
  double dihedral_deg = default_dihedral_deg;
  std::optional<double> strength_capacity;   // N, half-span simulated lift the wing survived
  std::optional<double> flexural_rigidity;   // N m^2
  std::optional<double> drone_total_mass;    // kg, for the edible fraction; default is the empty mass
  std::size_t load_samples = 256;
  std::size_t bag_stations = 4;
  DesignMapSettings map;

  std::string material_db;  // empty: built-in records
  std::string adhesive_db;  // empty: built-in records
  std::string material = "rice cookie";
  std::string adhesive;     // empty: strongest by conservative bond strength
  std::string out_dir = ".";

  std::set<std::string> provided;  // keys set explicitly
};

enum class KeyKind { number, integer, optional_number, text };

struct ConfigKey {
  std::string name;
  KeyKind kind;
  double scale;  // config unit -> SI
  std::string doc;
  std::function<double*(DesignConfig&)> number;
  std::function<std::optional<double>*(DesignConfig&)> optional_number;
  std::function<std::size_t*(DesignConfig&)> integer;
  std::function<std::string*(DesignConfig&)> text;
};

inline std::vector<ConfigKey> const& config_keys() {
  using C = DesignConfig;
  auto num = [](std::string n, double scale, std::string doc, std::function<double*(C&)> f) {
    return ConfigKey{std::move(n), KeyKind::number, scale, std::move(doc), std::move(f), {}, {}, {}};
  };
  auto opt = [](std::string n, double scale, std::string doc, std::function<std::optional<double>*(C&)> f) {
    return ConfigKey{std::move(n), KeyKind::optional_number, scale, std::move(doc), {}, std::move(f), {}, {}};
  };
  auto cnt = [](std::string n, std::string doc, std::function<std::size_t*(C&)> f) {
    return ConfigKey{std::move(n), KeyKind::integer, 1.0, std::move(doc), {}, {}, std::move(f), {}};
  };
  auto str = [](std::string n, std::string doc, std::function<std::string*(C&)> f) {
    return ConfigKey{std::move(n), KeyKind::text, 1.0, std::move(doc), {}, {}, {}, std::move(f)};
  };
  static std::vector<ConfigKey> const keys = {
      num("nutrition_kcal", 1.0, "energy carried by the wing [kcal]", [](C& c) { return &c.requirements.nutrition_target; }),
      num("payload_mass_g", units::g_to_kg, "payload mass [g]", [](C& c) { return &c.requirements.payload_mass; }),
      num("payload_ratio", 1.0, "payload mass over gross mass", [](C& c) { return &c.requirements.payload_ratio; }),
      num("target_re", 1.0, "design chord Reynolds number", [](C& c) { return &c.requirements.target_re; }),
      num("cd0", 1.0, "zero-lift drag coefficient", [](C& c) { return &c.requirements.zero_lift_drag; }),
      num("areal_kcal_per_m2", 1.0, "energy per wing area [kcal/m^2]", [](C& c) { return &c.requirements.areal_caloric_density; }),
      num("air_density_kg_m3", 1.0, "air density [kg/m^3]", [](C& c) { return &c.environment.air_density; }),
      num("air_viscosity_pa_s", 1.0, "air dynamic viscosity [kg/(m s)]", [](C& c) { return &c.environment.air_viscosity; }),
      num("gravity_m_s2", 1.0, "gravitational acceleration [m/s^2]", [](C& c) { return &c.environment.gravity; }),
      num("drag_coefficient", 1.0, "aircraft drag coefficient C_D", [](C& c) { return &c.propulsion.drag_coefficient; }),
      num("max_thrust_n", 1.0, "static thrust of the motor [N]", [](C& c) { return &c.propulsion.max_thrust; }),
      num("lift_drag_ratio", 1.0, "L/D at the design angle of attack", [](C& c) { return &c.lift_drag_ratio; }),
      num("c_vt", 1.0, "vertical tail volume coefficient", [](C& c) { return &c.tail.c_vt; }),
      num("c_ht", 1.0, "horizontal tail volume coefficient", [](C& c) { return &c.tail.c_ht; }),
      num("s_vt_cm2", units::cm2_to_m2, "vertical tail area [cm^2]", [](C& c) { return &c.tail.s_vt; }),
      num("s_ht_cm2", units::cm2_to_m2, "horizontal tail area [cm^2]", [](C& c) { return &c.tail.s_ht; }),
      num("hex_circumdiameter_mm", units::mm_to_m, "hexagon size across corners [mm]", [](C& c) { return &c.hex_circumdiameter; }),
      num("plate_thickness_mm", units::mm_to_m, "wing plate thickness [mm]", [](C& c) { return &c.plate_thickness; }),
      num("adhesive_ratio", 1.0, "adhesive mass per unit cookie mass", [](C& c) { return &c.adhesive_ratio; }),
      num("dihedral_deg", 1.0, "dihedral angle, recorded only [deg]", [](C& c) { return &c.dihedral_deg; }),
      opt("strength_capacity_n", 1.0, "half-span lift the wing withstood [N]", [](C& c) { return &c.strength_capacity; }),
      opt("flexural_rigidity_n_m2", 1.0, "effective EI of the half wing [N m^2]", [](C& c) { return &c.flexural_rigidity; }),
      opt("drone_total_mass_g", units::g_to_kg, "drone mass for the edible fraction [g]", [](C& c) { return &c.drone_total_mass; }),
      cnt("load_samples", "intervals over the half span (even, >= 64)", [](C& c) { return &c.load_samples; }),
      cnt("bag_stations", "number of sand-bag stations on the half span", [](C& c) { return &c.bag_stations; }),
      num("map_vc_min_m_s", 1.0, "design map: lowest cruise speed [m/s]", [](C& c) { return &c.map.speed_min; }),
      num("map_vc_max_m_s", 1.0, "design map: highest cruise speed [m/s]", [](C& c) { return &c.map.speed_max; }),
      num("map_ar_min", 1.0, "design map: lowest aspect ratio", [](C& c) { return &c.map.ar_min; }),
      num("map_ar_max", 1.0, "design map: highest aspect ratio", [](C& c) { return &c.map.ar_max; }),
      cnt("map_vc_steps", "design map: speed samples", [](C& c) { return &c.map.speed_steps; }),
      cnt("map_ar_steps", "design map: aspect ratio samples", [](C& c) { return &c.map.ar_steps; }),
      str("material_db", "material DB file (default: built-in records)", [](C& c) { return &c.material_db; }),
      str("adhesive_db", "adhesive DB file (default: built-in records)", [](C& c) { return &c.adhesive_db; }),
      str("material", "structural material name", [](C& c) { return &c.material; }),
      str("adhesive", "adhesive name (default: strongest)", [](C& c) { return &c.adhesive; }),
      str("out_dir", "output directory", [](C& c) { return &c.out_dir; }),
  };
  return keys;
}

inline ConfigKey const* find_config_key(std::string const& name) {
  auto const& keys = config_keys();
  auto it = std::find_if(keys.begin(), keys.end(), [&](auto const& k) { return k.name == name; });
  return it == keys.end() ? nullptr : &*it;
}

/// Sets one key from its textual value (in the key's unit). Throws
/// InvalidArgument for unknown keys and malformed values.
inline void set_config_value(DesignConfig& cfg, std::string const& key, std::string const& value) {
  auto const* k = find_config_key(key);
  if (!k) throw InvalidArgument("unknown config key '" + key + "'");
  if (k->kind == KeyKind::text) {
    *k->text(cfg) = value;
  } else {
    auto const v = text::parse_double(value);
    if (!v || !std::isfinite(*v)) throw InvalidArgument("key '" + key + "': not a number: '" + value + "'");
    if (k->kind == KeyKind::integer) {
      if (*v < 0.0 || std::floor(*v) != *v)
        throw InvalidArgument("key '" + key + "': expected a non-negative integer, got '" + value + "'");
      *k->integer(cfg) = static_cast<std::size_t>(*v);
    } else if (k->kind == KeyKind::optional_number) {
      *k->optional_number(cfg) = *v * k->scale;
    } else {
      *k->number(cfg) = *v * k->scale;
    }
  }
  cfg.provided.insert(key);
}

struct ConfigEcho {
  std::string key;
  std::optional<std::string> value;  // in the key's unit; nullopt for an unset optional
  bool is_default = true;
};

/// Every key with its effective value and whether it came from the defaults.
inline std::vector<ConfigEcho> config_echo(DesignConfig cfg) {
  std::vector<ConfigEcho> out;
  for (auto const& k : config_keys()) {
    ConfigEcho e{k.name, std::nullopt, cfg.provided.count(k.name) == 0};
    switch (k.kind) {
      case KeyKind::text: e.value = *k.text(cfg); break;
      case KeyKind::integer: e.value = std::to_string(*k.integer(cfg)); break;
      case KeyKind::optional_number:
        if (auto const& o = *k.optional_number(cfg)) e.value = text::significant(*o / k.scale, 15);
        break;
      case KeyKind::number: e.value = text::significant(*k.number(cfg) / k.scale, 15); break;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline DesignConfig read_config(std::istream& in, std::string const& source = "<config>") {
  DesignConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::is_blank_or_comment(line)) continue;
    auto const eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, line_no, "expected 'key = value'");
    std::string const key(text::trim(std::string_view(line).substr(0, eq)));
    std::string const value(text::trim(std::string_view(line).substr(eq + 1)));
    if (cfg.provided.count(key)) throw ParseError(source, line_no, "duplicate key '" + key + "'");
    try {
      set_config_value(cfg, key, value);
    } catch (InvalidArgument const& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return cfg;
}

inline DesignConfig load_config(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return read_config(in, path.string());
}

/// Checks the values that no single pipeline stage owns. Stage-specific
/// inputs (nutrition target, payload, ...) are checked by their stage.
inline void validate_config(DesignConfig const& c) {
  c.environment.validate();
  detail::require(c.requirements.target_re > 0.0, "target_re must be > 0");
  detail::require(c.requirements.zero_lift_drag > 0.0, "cd0 must be > 0");
  detail::require(c.propulsion.drag_coefficient > 0.0, "drag_coefficient must be > 0");
  detail::require(c.propulsion.max_thrust >= 0.0, "max_thrust_n must be >= 0");
  detail::require(c.lift_drag_ratio > 0.0, "lift_drag_ratio must be > 0");
  detail::require(c.tail.c_vt > 0.0 && c.tail.c_ht > 0.0, "tail volume coefficients must be > 0");
  detail::require(c.tail.s_vt > 0.0 && c.tail.s_ht > 0.0, "tail areas must be > 0");
  detail::require(c.hex_circumdiameter > 0.0, "hex_circumdiameter_mm must be > 0");
  detail::require(c.plate_thickness > 0.0, "plate_thickness_mm must be > 0");
  detail::require(c.adhesive_ratio >= 0.0, "adhesive_ratio must be >= 0");
  detail::require(!c.strength_capacity || *c.strength_capacity > 0.0, "strength_capacity_n must be > 0");
  detail::require(!c.flexural_rigidity || *c.flexural_rigidity > 0.0, "flexural_rigidity_n_m2 must be > 0");
  detail::require(!c.drone_total_mass || *c.drone_total_mass > 0.0, "drone_total_mass_g must be > 0");
  detail::require(c.load_samples >= min_load_samples && c.load_samples % 2 == 0,
                  "load_samples must be even and >= 64");
  detail::require(c.bag_stations >= 1, "bag_stations must be >= 1");
  detail::require(c.map.speed_min > 0.0 && c.map.speed_max > c.map.speed_min, "map speed range must be positive and ordered");
  detail::require(c.map.ar_min > 0.0 && c.map.ar_max > c.map.ar_min, "map AR range must be positive and ordered");
  detail::require(c.map.speed_steps >= 2 && c.map.ar_steps >= 2, "map steps must be >= 2");
}

}  // namespace edwing
