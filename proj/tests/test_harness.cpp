// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "holoconf/error.hpp"
#include "holoconf/harness.hpp"

using namespace holoconf;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header, int skip_cols = 0) {
  std::istringstream in(text);
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> r;
    std::istringstream ls(line);
    int col = 0;
    for (std::string cell; std::getline(ls, cell, ','); ++col)
      if (col >= skip_cols) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST(Suite, DefaultConfigPasses) {
  const VerificationReport r = run_suite({});
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_GT(r.checks.size(), 50u);
  for (const auto& c : r.checks) {
    EXPECT_FALSE(c.anchor.empty()) << c.name;
    EXPECT_LE(c.max_defect, c.threshold) << c.name;
  }
}

TEST(Suite, TightToleranceFailsWithFiniteDefects) {
  SuiteConfig cfg;
  cfg.tol = 1e-20;
  cfg.suites = {Suite::bicomplex, Suite::charts};
  const VerificationReport r = run_suite(cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.failures(), 0u);
  for (const auto& c : r.checks) EXPECT_TRUE(std::isfinite(c.max_defect)) << c.name;
}

TEST(Suite, FilteringKeepsOnlySelectedSuites) {
  SuiteConfig cfg;
  cfg.suites = {Suite::laplace};
  const VerificationReport r = run_suite(cfg);
  ASSERT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_EQ(c.suite, Suite::laplace);
}

TEST(Suite, JsonIsDeterministicAndVersioned) {
  SuiteConfig cfg;
  cfg.seed = 99;
  cfg.samples = 10;
  const std::string a = to_json(run_suite(cfg)), b = to_json(run_suite(cfg));
  EXPECT_EQ(a, b);
  const json j = json::parse(a);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["config"]["seed"], 99);
  EXPECT_EQ(j["config"]["suites"][0], "all");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["checks_total"].get<std::size_t>(), j["checks"].size());
  bool saw_ledger = false;
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("suite"));
    EXPECT_TRUE(c.contains("check"));
    EXPECT_TRUE(c.contains("anchor"));
    if (c.contains("sign_ledger")) saw_ledger = true;
  }
  EXPECT_TRUE(saw_ledger);
}

TEST(Suite, DifferentSeedsDrawDifferentSamples) {
  SuiteConfig a, b;
  a.suites = b.suites = {Suite::bicomplex};
  b.seed = 2;
  const auto ra = run_suite(a), rb = run_suite(b);
  bool differ = false;
  for (std::size_t k = 0; k < ra.checks.size(); ++k) differ |= ra.checks[k].max_defect != rb.checks[k].max_defect;
  EXPECT_TRUE(differ);
}

TEST(Suite, InvalidConfig) {
  SuiteConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(validate(cfg), Error);
  const VerificationReport r = run_suite(cfg);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_FALSE(r.passed());
  cfg.samples = 5;
  cfg.tol = -1;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Suite, TextSummaryLine) {
  SuiteConfig cfg;
  cfg.suites = {Suite::projective};
  const std::string t = to_text(run_suite(cfg));
  EXPECT_NE(t.find("overall: pass"), std::string::npos);
  EXPECT_NE(t.find("PASS projective/"), std::string::npos);
}

TEST(Names, RoundTrip) {
  for (Suite s : kAllSuites) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("all").has_value());
  for (GridKind k : {GridKind::joukowski, GridKind::hopf_fibers, GridKind::conformal_flow})
    EXPECT_EQ(parse_grid_kind(to_string(k)), k);
}

TEST(Grid, JoukowskiUnitCircleIsReal) {
  std::string header;
  const auto rows = parse_csv(grid_csv(GridKind::joukowski, 5), &header);
  EXPECT_EQ(header, "radius,phi,v_re,v_im,cn_re,cn_im,sn_re,sn_im");
  ASSERT_EQ(rows.size(), 25u);
  int on_circle = 0;
  for (const auto& r : rows) {
    if (std::abs(r[0] - 1.0) > 1e-12) continue;
    ++on_circle;
    EXPECT_NEAR(r[5], 0.0, 1e-15);
    EXPECT_LE(std::abs(r[4]), 1.0 + 1e-15);
    EXPECT_NEAR(r[4], std::cos(r[1]), 1e-15);
  }
  EXPECT_EQ(on_circle, 5);
}

TEST(Grid, HopfFibersProjectToTheirBasePoint) {
  std::string header;
  const auto rows = parse_csv(grid_csv(GridKind::hopf_fibers, 6), &header);
  EXPECT_EQ(header, "fiber,xi1,xi2,xi3,lambda,s1,s2,s3,s4");
  ASSERT_EQ(rows.size(), 36u);
  for (const auto& r : rows) {
    const double s1 = r[5], s2 = r[6], s3 = r[7], s4 = r[8];
    EXPECT_NEAR(s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4, 1.0, 1e-14);
    EXPECT_NEAR(2 * (s1 * s3 + s2 * s4), r[1], 1e-14);
    EXPECT_NEAR(2 * (s2 * s3 - s1 * s4), r[2], 1e-14);
    EXPECT_NEAR(s1 * s1 + s2 * s2 - s3 * s3 - s4 * s4, r[3], 1e-14);
    if (r[0] == 0) {
      EXPECT_NEAR(s1, std::cos(r[4]), 1e-15);
      EXPECT_NEAR(s2, std::sin(r[4]), 1e-15);
      EXPECT_EQ(s3, 0.0);
    }
  }
}

TEST(Grid, DilationFlowIsRadial) {
  std::string header;
  const std::string csv = grid_csv(GridKind::conformal_flow, 4);
  const auto rows = parse_csv(csv, &header, 1);
  EXPECT_EQ(header, "generator,start,eps,v_re,v_im");
  ASSERT_EQ(rows.size(), 32u);
  for (std::size_t k = 0; k < 16; ++k) {
    const auto& r = rows[k];
    const double phi0 = 2 * kPi * r[0] / 4;
    EXPECT_NEAR(r[2], std::exp(r[1]) * std::cos(phi0), 1e-14);
    EXPECT_NEAR(r[3], std::exp(r[1]) * std::sin(phi0), 1e-14);
  }
  // Rotation keeps the unit circle.
  for (std::size_t k = 16; k < 32; ++k) EXPECT_NEAR(std::hypot(rows[k][2], rows[k][3]), 1.0, 1e-14);
}

TEST(Grid, Errors) {
  try {
    (void)grid_csv(GridKind::joukowski, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
  try {
    emit_grid(GridKind::joukowski, 4, "/nonexistent-dir/x/grid.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io);
  }
}

TEST(Grid, EmitWritesTheCsv) {
  const auto path = std::filesystem::temp_directory_path() / "holoconf_grid_test.csv";
  emit_grid(GridKind::hopf_fibers, 3, path.string());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), grid_csv(GridKind::hopf_fibers, 3));
  std::filesystem::remove(path);
}

TEST(GeneratorTable, Rows) {
  const auto t = generator_table(Realization::holographic);
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[0], "generator\td_theta\td_phi");
  EXPECT_EQ(t[1], "b\ttan(theta)\t0");
  EXPECT_EQ(generator_table(Realization::upsilon_line)[5], "q0\tv^2\t");
}
