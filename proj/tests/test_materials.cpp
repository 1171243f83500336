#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "edwing/materials.hpp"
#include "oracles.hpp"

using namespace edwing;

namespace {

FoodMaterial mat(std::string name, double e_mpa, double rho, double kcal) {
  return {std::move(name), e_mpa * 1e6, 0.0, rho, 0.0, kcal, "test"};
}

std::string db_text(std::string const& rows) {
  return "# comment\nname,E_MPa,E_sd_MPa,rho_kg_m3,rho_sd,kcal_per_kg,provenance\n" + rows;
}

}  // namespace

TEST(MaterialDb, ParsesSeedRowIntoBaseUnits) {
  std::istringstream in(db_text("rice cookie, 10.4, 1.3, 112, 8.4, 3870, measured\n"));
  auto const db = read_material_db(in);
  ASSERT_EQ(db.size(), 1u);
  EXPECT_DOUBLE_EQ(db[0].youngs_modulus, 1.04e7);
  EXPECT_DOUBLE_EQ(db[0].youngs_modulus_sd, 1.3e6);
  EXPECT_DOUBLE_EQ(db[0].density, 112.0);
  EXPECT_DOUBLE_EQ(db[0].caloric_density, 3870.0);
  EXPECT_EQ(db[0].provenance, "measured");
}

TEST(MaterialDb, EmptyDataSectionGivesEmptyList) {
  std::istringstream in(db_text(""));
  EXPECT_TRUE(read_material_db(in).empty());
}

TEST(MaterialDb, NegativeDensityReportsLine) {
  std::istringstream in(db_text("good,10,0,100,0,1000,x\nbad,10,0,-5,0,1000,x\n"));
  try {
    read_material_db(in, "db.csv");
    FAIL() << "expected ParseError";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("density"), std::string::npos);
  }
}

TEST(MaterialDb, MalformedRowsAreRejected) {
  std::istringstream wrong_header("name,E,rho\nx,1,2\n");
  EXPECT_THROW(read_material_db(wrong_header), ParseError);
  std::istringstream short_row(db_text("x,10,0,100\n"));
  EXPECT_THROW(read_material_db(short_row), ParseError);
  std::istringstream not_number(db_text("x,ten,0,100,0,1,p\n"));
  EXPECT_THROW(read_material_db(not_number), ParseError);
  std::istringstream zero_modulus(db_text("x,0,0,100,0,1,p\n"));
  EXPECT_THROW(read_material_db(zero_modulus), ParseError);
}

TEST(MaterialDb, ProvenanceMayContainCommas) {
  std::istringstream in(db_text("x,10,0,100,0,1,a, b, c\n"));
  EXPECT_EQ(read_material_db(in).at(0).provenance, "a, b, c");
}

TEST(MaterialDb, MissingFileIsIoError) {
  EXPECT_THROW(load_material_db("/nonexistent/materials.csv"), IoError);
}

TEST(MaterialDb, ShippedFilesMatchBuiltInSeed) {
  EXPECT_EQ(load_material_db(std::string(EDWING_DATA_DIR) + "/materials.csv"), seed_materials());
  EXPECT_EQ(load_adhesive_db(std::string(EDWING_DATA_DIR) + "/adhesives.csv"), seed_adhesives());
}

TEST(AdhesiveDb, LowerBoundWithSdIsRejected) {
  std::istringstream in(std::string(adhesive_db_header) + "\ngel,lower_bound,150,5,2000,x\n");
  EXPECT_THROW(read_adhesive_db(in), ParseError);
  std::istringstream bad_kind(std::string(adhesive_db_header) + "\ngel,median,150,0,2000,x\n");
  EXPECT_THROW(read_adhesive_db(bad_kind), ParseError);
}

TEST(Ashby, SeedRankingPutsRiceCookieFirst) {
  auto db = seed_materials();
  db.push_back(mat("chocolate-like", 100.0, 1300.0, 5000.0));
  db.push_back(mat("pasta-like", 1000.0, 1500.0, 3700.0));
  MaterialTarget const target{10e6, 100.0};
  auto const ranked = rank_by_ashby_distance(db, target);
  // Brute-force distances.
  std::vector<std::pair<double, std::string>> brute;
  for (auto const& m : db)
    brute.emplace_back(std::hypot(std::log10(m.youngs_modulus / 10e6), std::log10(m.density / 100.0)), m.name);
  std::sort(brute.begin(), brute.end());
  ASSERT_EQ(ranked.size(), db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    EXPECT_EQ(ranked[i].material.name, brute[i].second);
    EXPECT_NEAR(ranked[i].distance, brute[i].first, 1e-15);
  }
  EXPECT_EQ(ranked.front().material.name, "rice cookie");
}

TEST(Ashby, SingletonAndIdentity) {
  auto const one = rank_by_ashby_distance({mat("a", 10.0, 100.0, 1.0)}, {1e6, 10.0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0].distance, std::sqrt(2.0), 1e-15);

  auto const id = rank_by_ashby_distance({mat("b", 5.0, 50.0, 1.0), mat("a", 10.0, 100.0, 1.0)}, {10e6, 100.0});
  EXPECT_EQ(id[0].material.name, "a");
  EXPECT_EQ(id[0].distance, 0.0);
}

TEST(Ashby, TiesBreakByName) {
  auto const r = rank_by_ashby_distance({mat("zeta", 100.0, 100.0, 1.0), mat("alpha", 1.0, 100.0, 1.0)}, {10e6, 100.0});
  EXPECT_EQ(r[0].material.name, "alpha");
  EXPECT_EQ(r[0].distance, r[1].distance);
}

TEST(Ashby, EmptyDbThrows) { EXPECT_THROW(rank_by_ashby_distance({}, {1e6, 1.0}), InvalidArgument); }

TEST(Ashby, PropertyScaleInvarianceAndTotalOrder) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FoodMaterial> db;
    int const n = 1 + static_cast<int>(oracle::uniform(0.0, 30.0));
    for (int i = 0; i < n; ++i)
      db.push_back(mat("m" + std::to_string(i), oracle::log_uniform(0.1, 1e4), oracle::log_uniform(10, 5000), 1.0));
    MaterialTarget const t{oracle::log_uniform(1e5, 1e10), oracle::log_uniform(10, 5000)};
    double const ke = oracle::log_uniform(1e-3, 1e3), kr = oracle::log_uniform(1e-3, 1e3);
    auto scaled = db;
    for (auto& m : scaled) m.youngs_modulus *= ke, m.density *= kr;
    auto const a = rank_by_ashby_distance(db, t);
    auto const b = rank_by_ashby_distance(scaled, {t.target_modulus * ke, t.target_density * kr});
    ASSERT_EQ(a.size(), db.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a[i].distance, b[i].distance, 1e-12);
      if (i > 0) {
        EXPECT_LE(a[i - 1].distance, a[i].distance);
      }
    }
  }
}

TEST(Pareto, ThreeRecordExample) {
  auto const front = pareto_front({mat("A", 10, 100, 3870), mat("B", 5, 200, 2000), mat("C", 20, 500, 5000)});
  ASSERT_EQ(front.size(), 2u);
  EXPECT_EQ(front[0].name, "A");
  EXPECT_EQ(front[1].name, "C");
}

TEST(Pareto, DuplicatesSurviveAndSingleton) {
  auto const dup = pareto_front({mat("x", 10, 100, 1), mat("y", 10, 100, 1)});
  EXPECT_EQ(dup.size(), 2u);
  EXPECT_EQ(pareto_front({mat("only", 1, 1, 0)}).size(), 1u);
  EXPECT_THROW(pareto_front({}), InvalidArgument);
}

TEST(Pareto, MatchesBruteForceOnRandomDbs) {
  for (int trial = 0; trial < 300; ++trial) {
    int const n = 1 + static_cast<int>(oracle::uniform(0.0, 50.0));
    std::vector<FoodMaterial> db;
    std::vector<oracle::Rec> recs;
    for (int i = 0; i < n; ++i) {
      // Coarse values so that ties and duplicates occur.
      double const e = std::round(oracle::uniform(1, 6)), rho = std::round(oracle::uniform(1, 6)) * 100,
                   kcal = std::round(oracle::uniform(0, 5)) * 1000;
      char name[16];
      std::snprintf(name, sizeof name, "m%03d", i);
      db.push_back(mat(name, e, rho, kcal));
      recs.push_back({rho, e * 1e6, kcal});
    }
    auto const front = pareto_front(db);
    auto const keep = oracle::non_dominated(recs);
    ASSERT_EQ(front.size(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) EXPECT_EQ(front[k].name, db[keep[k]].name);
    // Every excluded record is dominated by some front member.
    for (auto const& m : db) {
      bool in_front = std::any_of(front.begin(), front.end(), [&](auto const& f) { return f.name == m.name; });
      if (!in_front) {
        EXPECT_TRUE(std::any_of(front.begin(), front.end(), [&](auto const& f) { return dominates(f, m); }));
      }
    }
  }
}

TEST(Adhesive, SeedRecordsSelectGelatin) {
  auto const choice = select_adhesive(seed_adhesives());
  EXPECT_EQ(choice.adhesive.name, "gelatin");
  EXPECT_DOUBLE_EQ(choice.conservative_strength, 150e3);
}

TEST(Adhesive, LowerBoundBeatsWeakerConservativeMean) {
  std::vector<AdhesiveRecord> c{{"bound", StrengthKind::lower_bound, 100e3, 0.0, 0.0, ""},
                                {"choc", StrengthKind::measured_mean, 113.3e3, 15.1e3, 0.0, ""}};
  auto const choice = select_adhesive(c);
  EXPECT_EQ(choice.adhesive.name, "bound");
  EXPECT_NEAR(conservative_strength(c[1]), 98.2e3, 1e-9);
}

TEST(Adhesive, SingletonEmptyAndTies) {
  AdhesiveRecord const a{"a", StrengthKind::measured_mean, 10.0, 1.0, 0.0, ""};
  EXPECT_EQ(select_adhesive({a}).adhesive.name, "a");
  EXPECT_THROW(select_adhesive({}), InvalidArgument);
  AdhesiveRecord const b{"b", StrengthKind::lower_bound, 9.0, 0.0, 0.0, ""};
  EXPECT_EQ(select_adhesive({b, a}).adhesive.name, "a");
}

TEST(Adhesive, RemovingDominatedCandidateKeepsChoice) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<AdhesiveRecord> c;
    int const n = 2 + static_cast<int>(oracle::uniform(0.0, 8.0));
    for (int i = 0; i < n; ++i) {
      bool const bound = oracle::uniform(0, 1) < 0.3;
      c.push_back({"a" + std::to_string(i), bound ? StrengthKind::lower_bound : StrengthKind::measured_mean,
                   oracle::uniform(50e3, 200e3), bound ? 0.0 : oracle::uniform(0, 30e3), 0.0, ""});
    }
    auto const best = select_adhesive(c).adhesive.name;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].name == best) continue;
      auto reduced = c;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
      EXPECT_EQ(select_adhesive(reduced).adhesive.name, best);
    }
  }
}
