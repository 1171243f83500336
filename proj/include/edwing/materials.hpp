#pragma once
/*
  Edible structural materials and edible adhesives.

  Candidate foods are compared on an Ashby (log E, log rho) chart against a
  target such as a packaging foam; adhesives are compared on a conservative
  bond strength so that a glue whose true strength is only bounded from below
  (the substrate broke first) can be ranked against glues with measured means.
*/

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "edwing/error.hpp"
#include "edwing/text.hpp"
#include "edwing/units.hpp"

namespace edwing {

struct FoodMaterial {
  std::string name;
  double youngs_modulus = 0.0;     // Pa
  double youngs_modulus_sd = 0.0;  // Pa, 0 if unknown
  double density = 0.0;            // kg/m^3
  double density_sd = 0.0;         // kg/m^3, 0 if unknown
  double caloric_density = 0.0;    // kcal/kg
  std::string provenance;

  void validate() const {
    detail::require(youngs_modulus > 0.0, "material '" + name + "': Young's modulus must be > 0");
    detail::require(density > 0.0, "material '" + name + "': density must be > 0");
    detail::require(caloric_density >= 0.0, "material '" + name + "': caloric density must be >= 0");
    detail::require(youngs_modulus_sd >= 0.0 && density_sd >= 0.0,
                    "material '" + name + "': standard deviations must be >= 0");
  }

  friend bool operator==(FoodMaterial const&, FoodMaterial const&) = default;
};

enum class StrengthKind { measured_mean, lower_bound };

struct AdhesiveRecord {
  std::string name;
  StrengthKind strength_kind = StrengthKind::measured_mean;
  double adhesive_stress = 0.0;     // Pa, mean or lower bound per kind
  double adhesive_stress_sd = 0.0;  // Pa, always 0 for lower_bound
  double caloric_density = 0.0;     // kcal/kg
  std::string provenance;

  void validate() const {
    detail::require(adhesive_stress > 0.0, "adhesive '" + name + "': stress must be > 0");
    detail::require(adhesive_stress_sd >= 0.0, "adhesive '" + name + "': stress sd must be >= 0");
    detail::require(strength_kind != StrengthKind::lower_bound || adhesive_stress_sd == 0.0,
                    "adhesive '" + name + "': lower_bound records carry no sd");
    detail::require(caloric_density >= 0.0, "adhesive '" + name + "': caloric density must be >= 0");
  }

  friend bool operator==(AdhesiveRecord const&, AdhesiveRecord const&) = default;
};

struct MaterialTarget {
  double target_modulus = 0.0;  // Pa
  double target_density = 0.0;  // kg/m^3

  void validate() const {
    detail::require(target_modulus > 0.0 && target_density > 0.0,
                    "material target: modulus and density must be > 0");
  }
};

struct RankedMaterial {
  FoodMaterial material;
  double distance = 0.0;
};

struct AdhesiveChoice {
  AdhesiveRecord adhesive;
  double conservative_strength = 0.0;  // Pa
};

inline constexpr char const* material_db_header =
    "name,E_MPa,E_sd_MPa,rho_kg_m3,rho_sd,kcal_per_kg,provenance";
inline constexpr char const* adhesive_db_header =
    "name,kind,stress_kPa,stress_sd_kPa,kcal_per_kg,provenance";

// Records with attested numbers only. Other foods on the chart are
// user-supplied through a DB file.
inline std::vector<FoodMaterial> seed_materials() {
  return {
      {"rice cookie", 10.4e6, 1.3e6, 112.0, 8.4, 3870.0,
       "measured: 3-point bending and weighing; kcal from manufacturer (387 kcal/100 g)"},
  };
}

inline std::vector<AdhesiveRecord> seed_adhesives() {
  return {
      {"corn starch", StrengthKind::measured_mean, 79.4e3, 18.3e3, 0.0,
       "tensile pull test on bonded rice cookies; kcal not reported"},
      {"chocolate", StrengthKind::measured_mean, 113.3e3, 15.1e3, 5000.0,
       "tensile pull test on bonded rice cookies; kcal lower bound for chocolate"},
      {"gelatin", StrengthKind::lower_bound, 150e3, 0.0, 2000.0,
       "substrate failed before the bond; kcal of a gelatin-based adhesive (200 kcal/100 g)"},
  };
}

namespace detail {

// Splits a DB row into `fixed` fields plus a trailing free-text field that may
// itself contain commas.
inline std::vector<std::string> split_row(std::string const& line, std::size_t fixed) {
  auto fields = text::split(line, ',');
  if (fields.size() > fixed + 1) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < fixed; ++i) pos = line.find(',', pos) + 1;
    fields.resize(fixed);
    fields.push_back(std::string(text::trim(std::string_view(line).substr(pos))));
  }
  return fields;
}

inline double number_field(std::string const& source, std::size_t line, std::string const& field,
                           std::string const& column) {
  auto const v = text::parse_double(field);
  if (!v || !std::isfinite(*v))
    throw ParseError(source, line, "column '" + column + "': not a number: '" + field + "'");
  return *v;
}

// Iterates data rows after checking the header; fn(fields, line_number).
template <typename RowFn>
void for_each_row(std::istream& in, std::string const& source, std::string const& header,
                  std::size_t fixed_fields, RowFn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::is_blank_or_comment(line)) continue;
    if (!have_header) {
      std::string normalized;
      for (auto const& f : text::split(line, ',')) normalized += (normalized.empty() ? "" : ",") + f;
      if (normalized != header)
        throw ParseError(source, line_no, "expected header '" + header + "'");
      have_header = true;
      continue;
    }
    auto fields = split_row(line, fixed_fields);
    if (fields.size() != fixed_fields + 1)
      throw ParseError(source, line_no,
                       "expected " + std::to_string(fixed_fields + 1) + " fields, got " +
                           std::to_string(fields.size()));
    fn(fields, line_no);
  }
}

inline std::ifstream open_for_read(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace detail

/// Reads a material DB. E columns are in MPa, densities in kg/m^3; returned
/// records are in base units. A file with only the header (or nothing at all)
/// yields an empty list.
inline std::vector<FoodMaterial> read_material_db(std::istream& in, std::string const& source = "<stream>") {
  std::vector<FoodMaterial> out;
  detail::for_each_row(in, source, material_db_header, 6, [&](auto const& f, std::size_t line) {
    FoodMaterial m;
    m.name = f[0];
    if (m.name.empty()) throw ParseError(source, line, "empty name");
    m.youngs_modulus = detail::number_field(source, line, f[1], "E_MPa") * units::mpa_to_pa;
    m.youngs_modulus_sd = detail::number_field(source, line, f[2], "E_sd_MPa") * units::mpa_to_pa;
    m.density = detail::number_field(source, line, f[3], "rho_kg_m3");
    m.density_sd = detail::number_field(source, line, f[4], "rho_sd");
    m.caloric_density = detail::number_field(source, line, f[5], "kcal_per_kg");
    m.provenance = f[6];
    try {
      m.validate();
    } catch (InvalidArgument const& e) {
      throw ParseError(source, line, e.what());
    }
    out.push_back(std::move(m));
  });
  return out;
}

inline std::vector<FoodMaterial> load_material_db(std::filesystem::path const& path) {
  auto in = detail::open_for_read(path);
  return read_material_db(in, path.string());
}

inline StrengthKind parse_strength_kind(std::string const& s) {
  if (s == "mean") return StrengthKind::measured_mean;
  if (s == "lower_bound") return StrengthKind::lower_bound;
  throw InvalidArgument("unknown adhesive kind '" + s + "' (expected mean or lower_bound)");
}

inline char const* to_string(StrengthKind k) {
  return k == StrengthKind::lower_bound ? "lower_bound" : "mean";
}

/// Reads an adhesive DB; stress columns are in kPa.
inline std::vector<AdhesiveRecord> read_adhesive_db(std::istream& in, std::string const& source = "<stream>") {
  std::vector<AdhesiveRecord> out;
  detail::for_each_row(in, source, adhesive_db_header, 5, [&](auto const& f, std::size_t line) {
    AdhesiveRecord a;
    a.name = f[0];
    if (a.name.empty()) throw ParseError(source, line, "empty name");
    try {
      a.strength_kind = parse_strength_kind(f[1]);
    } catch (InvalidArgument const& e) {
      throw ParseError(source, line, e.what());
    }
    a.adhesive_stress = detail::number_field(source, line, f[2], "stress_kPa") * units::kpa_to_pa;
    a.adhesive_stress_sd = detail::number_field(source, line, f[3], "stress_sd_kPa") * units::kpa_to_pa;
    a.caloric_density = detail::number_field(source, line, f[4], "kcal_per_kg");
    a.provenance = f[5];
    try {
      a.validate();
    } catch (InvalidArgument const& e) {
      throw ParseError(source, line, e.what());
    }
    out.push_back(std::move(a));
  });
  return out;
}

inline std::vector<AdhesiveRecord> load_adhesive_db(std::filesystem::path const& path) {
  auto in = detail::open_for_read(path);
  return read_adhesive_db(in, path.string());
}

/// Euclidean distance between two points on a log10-log10 (E, rho) chart.
inline double ashby_distance(FoodMaterial const& m, MaterialTarget const& t) {
  double const de = std::log10(m.youngs_modulus) - std::log10(t.target_modulus);
  double const dr = std::log10(m.density) - std::log10(t.target_density);
  return std::hypot(de, dr);
}

/// All records, nearest first. Equal distances are ordered by name.
inline std::vector<RankedMaterial> rank_by_ashby_distance(std::vector<FoodMaterial> const& db,
                                                          MaterialTarget const& target) {
  if (db.empty()) throw InvalidArgument("rank_by_ashby_distance: empty material db");
  target.validate();
  std::vector<RankedMaterial> ranked;
  ranked.reserve(db.size());
  for (auto const& m : db) ranked.push_back({m, ashby_distance(m, target)});
  std::stable_sort(ranked.begin(), ranked.end(), [](auto const& a, auto const& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.material.name < b.material.name;
  });
  return ranked;
}

/// True if `a` is at least as light, stiff and energy-dense as `b` and
/// strictly better in at least one of the three.
inline bool dominates(FoodMaterial const& a, FoodMaterial const& b) {
  bool const no_worse = a.density <= b.density && a.youngs_modulus >= b.youngs_modulus &&
                        a.caloric_density >= b.caloric_density;
  bool const better = a.density < b.density || a.youngs_modulus > b.youngs_modulus ||
                      a.caloric_density > b.caloric_density;
  return no_worse && better;
}

/// Non-dominated records (minimise density, maximise E and kcal/kg), by name.
inline std::vector<FoodMaterial> pareto_front(std::vector<FoodMaterial> const& db) {
  if (db.empty()) throw InvalidArgument("pareto_front: empty material db");
  std::vector<FoodMaterial> front;
  for (auto const& candidate : db) {
    bool dominated = std::any_of(db.begin(), db.end(),
                                 [&](FoodMaterial const& other) { return dominates(other, candidate); });
    if (!dominated) front.push_back(candidate);
  }
  std::stable_sort(front.begin(), front.end(),
                   [](auto const& a, auto const& b) { return a.name < b.name; });
  return front;
}

/// Strength used for ranking: the bound itself for lower-bound records,
/// mean minus one standard deviation for measured ones.
inline double conservative_strength(AdhesiveRecord const& a) {
  if (a.strength_kind == StrengthKind::lower_bound) return a.adhesive_stress;
  return a.adhesive_stress - a.adhesive_stress_sd;
}

inline AdhesiveChoice select_adhesive(std::vector<AdhesiveRecord> const& candidates) {
  if (candidates.empty()) throw InvalidArgument("select_adhesive: no candidates");
  auto const* best = &candidates.front();
  for (auto const& a : candidates) {
    double const s = conservative_strength(a);
    double const s_best = conservative_strength(*best);
    if (s > s_best || (s == s_best && a.name < best->name)) best = &a;
  }
  return {*best, conservative_strength(*best)};
}

}  // namespace edwing
