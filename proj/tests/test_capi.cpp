// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "holoconf/holoconf.h"

namespace {

struct ConfigDeleter {
  void operator()(hc_config* c) const { hc_config_free(c); }
};
struct ReportDeleter {
  void operator()(hc_report* r) const { hc_report_free(r); }
};
using ConfigPtr = std::unique_ptr<hc_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<hc_report, ReportDeleter>;

std::string render(hc_report* r, hc_format f) {
  const char* out = nullptr;
  EXPECT_EQ(hc_report_render(r, f, &out), HC_OK);
  return out ? out : "";
}

}  // namespace

TEST(CApi, RunAndRenderJson) {
  ConfigPtr cfg(hc_config_new());
  ASSERT_TRUE(cfg);
  ASSERT_EQ(hc_config_set_seed(cfg.get(), 5), HC_OK);
  ASSERT_EQ(hc_config_set_samples(cfg.get(), 10), HC_OK);
  ASSERT_EQ(hc_config_add_suite(cfg.get(), "bicomplex"), HC_OK);
  ASSERT_EQ(hc_config_add_suite(cfg.get(), "projective"), HC_OK);
  hc_report* raw = nullptr;
  ASSERT_EQ(hc_run(cfg.get(), &raw), HC_OK);
  ReportPtr rep(raw);
  EXPECT_EQ(hc_report_passed(rep.get()), 1);
  EXPECT_EQ(hc_report_failures(rep.get()), 0u);

  const auto j = nlohmann::json::parse(render(rep.get(), HC_FORMAT_JSON));
  EXPECT_EQ(j["config"]["seed"], 5);
  EXPECT_EQ(j["config"]["suites"].size(), 2u);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["suite"] == "bicomplex" || c["suite"] == "projective");
  EXPECT_NE(render(rep.get(), HC_FORMAT_TEXT).find("overall: pass"), std::string::npos);
}

TEST(CApi, SameSeedSameReport) {
  auto run = [] {
    ConfigPtr cfg(hc_config_new());
    hc_config_set_seed(cfg.get(), 3);
    hc_config_set_samples(cfg.get(), 5);
    hc_report* raw = nullptr;
    EXPECT_EQ(hc_run(cfg.get(), &raw), HC_OK);
    ReportPtr rep(raw);
    return render(rep.get(), HC_FORMAT_JSON);
  };
  EXPECT_EQ(run(), run());
}

TEST(CApi, TightToleranceReportsFailures) {
  ConfigPtr cfg(hc_config_new());
  hc_config_add_suite(cfg.get(), "charts");
  ASSERT_EQ(hc_config_set_tol(cfg.get(), 1e-20), HC_OK);
  hc_report* raw = nullptr;
  ASSERT_EQ(hc_run(cfg.get(), &raw), HC_OK);
  ReportPtr rep(raw);
  EXPECT_EQ(hc_report_passed(rep.get()), 0);
  EXPECT_GT(hc_report_failures(rep.get()), 0u);
}

TEST(CApi, ConfigErrors) {
  ConfigPtr cfg(hc_config_new());
  EXPECT_EQ(hc_config_set_samples(cfg.get(), 0), HC_INVALID_ARGUMENT);
  EXPECT_NE(std::strlen(hc_last_error()), 0u);
  EXPECT_EQ(hc_config_set_tol(cfg.get(), 0.0), HC_INVALID_ARGUMENT);
  EXPECT_EQ(hc_config_set_tol(cfg.get(), NAN), HC_INVALID_ARGUMENT);
  EXPECT_EQ(hc_config_add_suite(cfg.get(), "geometry"), HC_INVALID_ARGUMENT);
  EXPECT_NE(std::string(hc_last_error()).find("geometry"), std::string::npos);
  EXPECT_EQ(hc_config_add_suite(cfg.get(), "all"), HC_OK);
  EXPECT_EQ(hc_config_set_seed(nullptr, 1), HC_INVALID_ARGUMENT);
  EXPECT_EQ(hc_run(cfg.get(), nullptr), HC_INVALID_ARGUMENT);
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(hc_status_name(HC_OK), "ok");
  EXPECT_STREQ(hc_status_name(HC_POLE), "pole");
  EXPECT_STREQ(hc_status_name(HC_BUFFER_TOO_SMALL), "buffer_too_small");
  EXPECT_STREQ(hc_status_name(static_cast<hc_status>(42)), "unknown");
}

TEST(CApi, GeneratorTableBuffer) {
  size_t needed = 0;
  char small[8];
  EXPECT_EQ(hc_generator_table("polar", small, sizeof small, &needed), HC_BUFFER_TOO_SMALL);
  ASSERT_GT(needed, sizeof small);
  std::string buf(needed, '\0');
  ASSERT_EQ(hc_generator_table("polar", buf.data(), buf.size(), &needed), HC_OK);
  EXPECT_EQ(buf.rfind("generator\td_r\td_phi\n", 0), 0u);
  EXPECT_EQ(hc_generator_table("sphere", buf.data(), buf.size(), &needed), HC_INVALID_ARGUMENT);
}

TEST(CApi, Solve) {
  double re = 0, im = 0;
  ASSERT_EQ(hc_solve("polar", 2.0, M_PI / 2, 2.0, 0.0, &re, &im), HC_OK);
  EXPECT_NEAR(re, -4.0, 1e-14);
  EXPECT_NEAR(im, 0.0, 1e-14);
  EXPECT_EQ(hc_solve("holographic", M_PI / 2, 0.0, 1.0, 0.0, &re, &im), HC_DOMAIN);
  EXPECT_EQ(hc_solve("upsilon", 1.0, 0.0, 1.0, 0.0, &re, &im), HC_INVALID_ARGUMENT);
}

TEST(CApi, HopfAndProduct) {
  const double s[4] = {1, 0, 1, 0};
  double h[3];
  ASSERT_EQ(hc_hopf(s, h), HC_OK);
  EXPECT_NEAR(h[0], 1.0, 1e-15);
  EXPECT_NEAR(h[2], 0.0, 1e-15);
  const double zero[4] = {0, 0, 0, 0};
  EXPECT_EQ(hc_hopf(zero, h), HC_SINGULAR);

  // i * j = ij
  const double i[4] = {0, 1, 0, 0}, j[4] = {0, 0, 1, 0};
  double p[4];
  ASSERT_EQ(hc_bicomplex_mul(i, j, p), HC_OK);
  EXPECT_EQ(p[3], 1.0);
  EXPECT_EQ(p[0] + p[1] + p[2], 0.0);
}

TEST(CApi, GridErrors) {
  EXPECT_EQ(hc_emit_grid("spiral", 8, "/tmp/x.csv"), HC_INVALID_ARGUMENT);
  EXPECT_EQ(hc_emit_grid("joukowski", 1, "/tmp/x.csv"), HC_INVALID_ARGUMENT);
  EXPECT_EQ(hc_emit_grid("joukowski", 4, "/nonexistent-dir/x/grid.csv"), HC_IO);
  const std::string path = ::testing::TempDir() + "capi_grid.csv";
  EXPECT_EQ(hc_emit_grid("hopf-fibers", 4, path.c_str()), HC_OK);
  std::remove(path.c_str());
}
