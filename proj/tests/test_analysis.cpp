#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rindler/analysis.hpp"
#include "test_helpers.hpp"

using namespace rindler;
using namespace rindler::test;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("critical p thresholds") {
  CHECK(critical_p(RindlerR(0.0), Family::AI).value() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(critical_p(RindlerR(kPiQuarter), Family::AI).value() ==
        doctest::Approx(3.0 / 7.0).epsilon(1e-9));
  CHECK(critical_p(RindlerR(kPiQuarter), Family::AII).value() ==
        doctest::Approx(3.0 / 7.0).epsilon(1e-9));
  CHECK(!critical_p(RindlerR(0.0), Family::AII).has_value());
  CHECK_THROWS_AS(critical_p(RindlerR(0.0), Family::III), DomainError);
}

TEST_CASE("critical p is nondecreasing in r for Alice-Rob") {
  double prev = 0.0;
  for (int i = 0; i < 33; ++i) {
    const double r = kPiQuarter * i / 32.0;
    const double pc = critical_p(RindlerR(r), Family::AI).value();
    CHECK(pc >= prev - 1e-12);
    prev = pc;
  }
}

TEST_CASE("critical r") {
  SUBCASE("boundary cases") {
    const CriticalR at_boundary = critical_r(FractionP(3.0 / 7.0));
    CHECK(at_boundary.kind == CriticalR::Kind::Threshold);
    CHECK(at_boundary.r == doctest::Approx(kPiQuarter).epsilon(1e-6));

    const CriticalR inertial = critical_r(FractionP(1.0 / 3.0));
    CHECK(inertial.kind == CriticalR::Kind::AlreadySeparable);
    CHECK(inertial.r == doctest::Approx(0.0).epsilon(1e-6));
  }

  SUBCASE("interior root with verified sign change") {
    const CriticalR cr = critical_r(FractionP(0.4));
    CHECK(cr.kind == CriticalR::Kind::Threshold);
    CHECK(cr.r > 0.0);
    CHECK(cr.r < kPiQuarter);
    const auto lam = [](double r) {
      return closed_form_spectra(SpectrumFamily::AIpt, FractionP(0.4), RindlerR(r))[1];
    };
    CHECK(lam(cr.r - 1e-3) < 0.0);
    CHECK(lam(cr.r + 1e-3) > 0.0);
  }

  SUBCASE("entangled at all accelerations") {
    CHECK(critical_r(FractionP(0.5)).kind == CriticalR::Kind::EntangledAtAllR);
    CHECK(critical_r(FractionP(0.2)).kind == CriticalR::Kind::AlreadySeparable);
  }
}

TEST_CASE("extremal beta of the equivalence gap") {
  const BetaExtremum ext = extremal_beta(RindlerR(kPiQuarter));
  CHECK(ext.beta == doctest::Approx(0.80).epsilon(0.013));
  CHECK(ext.gap > 0.1);
}

TEST_CASE("the gap function is continuous along the beta scan") {
  SweepSpec spec;
  spec.family = Family::IBPair;
  spec.r_grid = {kPiQuarter};
  spec.p_grid = uniform_grid(0.0, 1.0, 201);
  spec.measures = {Measure::Negativity};
  const SweepTable t = run_sweep(spec);
  double max_jump = 0.0, mean_jump = 0.0;
  for (size_t i = 1; i < t.rows.size(); ++i) {
    const double jump = std::abs(t.rows[i][4] - t.rows[i - 1][4]);
    max_jump = std::max(max_jump, jump);
    mean_jump += jump;
  }
  mean_jump /= static_cast<double>(t.rows.size() - 1);
  CHECK(max_jump <= 10.0 * mean_jump + 1e-12);
}

TEST_CASE("run_sweep") {
  SweepSpec spec;
  spec.family = Family::AI;
  spec.r_grid = uniform_grid(0.0, kPiQuarter, 5);
  spec.p_grid = uniform_grid(0.0, 1.0, 5);
  spec.measures = {Measure::Negativity, Measure::Discord, Measure::MutualInfo,
                   Measure::ClassicalCorr};

  const SweepTable table = run_sweep(spec);
  REQUIRE(table.columns.size() == 6);
  REQUIRE(table.rows.size() == 25);

  SUBCASE("Bell corner and product column") {
    // rows are r-major: (r=0, p=1) is row 4
    CHECK(table.rows[4][0] == 0.0);
    CHECK(table.rows[4][1] == 1.0);
    CHECK(table.rows[4][2] == doctest::Approx(1.0).epsilon(1e-12));  // negativity
    for (const auto& row : table.rows) {
      if (row[1] == 0.0) CHECK(std::abs(row[3]) < 1e-12);  // discord at p = 0
      CHECK(row[4] == doctest::Approx(row[5] + row[3]).epsilon(1e-12));  // I = C + D
    }
  }

  SUBCASE("determinism") {
    const SweepTable again = run_sweep(spec);
    REQUIRE(again.rows.size() == table.rows.size());
    for (size_t i = 0; i < table.rows.size(); ++i)
      for (size_t c = 0; c < table.rows[i].size(); ++c)
        CHECK(again.rows[i][c] == table.rows[i][c]);
  }
}

TEST_CASE("family III sweeps are p-independent") {
  SweepSpec spec;
  spec.family = Family::III;
  spec.r_grid = uniform_grid(0.0, kPiQuarter, 4);
  spec.p_grid = uniform_grid(0.0, 1.0, 3);
  spec.measures = {Measure::Discord};
  const SweepTable table = run_sweep(spec);
  for (size_t ri = 0; ri < 4; ++ri) {
    const double first = table.rows[ri * 3][2];
    for (size_t pi = 1; pi < 3; ++pi) CHECK(table.rows[ri * 3 + pi][2] == first);
  }
}

TEST_CASE("IB pair sweep emits both sides and the gap") {
  SweepSpec spec;
  spec.family = Family::IBPair;
  spec.r_grid = {kPiQuarter};
  spec.p_grid = uniform_grid(0.0, 1.0, 11);
  spec.measures = {Measure::Negativity};
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.columns.size() == 5);
  CHECK(table.columns[1] == "beta");
  CHECK(table.columns[4] == "negativity_gap");
  for (const auto& row : table.rows)
    CHECK(row[4] == doctest::Approx(row[2] - row[3]).epsilon(1e-14));
  // endpoints remain equivalent
  CHECK(std::abs(table.rows.front()[4]) < 1e-10);
  CHECK(std::abs(table.rows.back()[4]) < 1e-10);
}

TEST_CASE("run_sweep rejects malformed grids") {
  SweepSpec spec;
  spec.family = Family::AI;
  spec.r_grid = {0.0, 0.5};
  spec.p_grid = {0.3, 0.2};  // not ascending
  spec.measures = {Measure::Negativity};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.p_grid = {0.3, 1.4};  // out of domain
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.p_grid = {};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
}

TEST_CASE("discord direction table at the Bell point") {
  const SweepTable t = discord_direction_table({0.0, 0.3}, FractionP(1.0));
  REQUIRE(t.columns.size() == 7);
  // at r = 0 the state is Bell: discord 1 in both directions
  CHECK(t.rows[0][1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.rows[0][2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sweep table serialization") {
  SweepSpec spec;
  spec.family = Family::AI;
  spec.r_grid = uniform_grid(0.0, kPiQuarter, 2);
  spec.p_grid = uniform_grid(0.0, 1.0, 2);
  spec.measures = {Measure::Negativity};
  const SweepTable table = run_sweep(spec);

  SUBCASE("csv round-trips at printed precision") {
    std::ostringstream os;
    table.write_csv(os, /*with_metadata=*/false);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "r,p,negativity");
    size_t row = 0;
    for (std::string line; std::getline(is, line); ++row) {
      std::istringstream cells(line);
      std::string cell;
      size_t col = 0;
      while (std::getline(cells, cell, ',')) {
        const double parsed = std::stod(cell);
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", table.rows[row][col]);
        CHECK(cell == buf);
        CHECK(parsed == doctest::Approx(table.rows[row][col]).epsilon(1e-12));
        ++col;
      }
      CHECK(col == 3);
    }
    CHECK(row == table.rows.size());
  }

  SUBCASE("csv body is byte-stable across writes") {
    std::ostringstream a, b;
    table.write_csv(a, false);
    table.write_csv(b, false);
    CHECK(a.str() == b.str());
  }

  SUBCASE("metadata line is the only difference") {
    std::ostringstream with, without;
    table.write_csv(with, true);
    table.write_csv(without, false);
    const std::string w = with.str();
    CHECK(w.substr(0, 1) == "#");
    CHECK(w.substr(w.find('\n') + 1) == without.str());
  }

  SUBCASE("json mirrors the rows") {
    std::ostringstream os;
    table.write_json(os, true);
    const nlohmann::json doc = nlohmann::json::parse(os.str());
    CHECK(doc["metadata"]["family"] == "AI");
    REQUIRE(doc["rows"].size() == table.rows.size());
    CHECK(doc["rows"][3]["negativity"].get<double>() ==
          doctest::Approx(table.rows[3][2]).epsilon(1e-14));
  }
}

TEST_CASE("claim groups run standalone") {
  const ClaimReport one = verify_claim_group(1);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].id == "1_inertial_threshold");
  CHECK(one.entries[0].pass);
  CHECK_THROWS_AS(verify_claim_group(0), DomainError);
  CHECK_THROWS_AS(verify_claim_group(15), DomainError);
}

TEST_SUITE_END();
