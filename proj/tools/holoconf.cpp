// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

// holoconf command-line front end. Talks to the library only through the C
// interface.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holoconf/holoconf.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int report_error(hc_status status) {
  std::cerr << "holoconf: " << hc_status_name(status) << ": " << hc_last_error() << '\n';
  return status == HC_INVALID_ARGUMENT ? kExitUsage : kExitFail;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("HOLOCONF_SEED");
  if (!env || !*env) return 1;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("HOLOCONF_SEED", std::string("not an unsigned integer: ") + env);
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  int samples = 50;
  double tol = 1e-10;
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  std::unique_ptr<hc_config, decltype(&hc_config_free)> cfg(hc_config_new(), hc_config_free);
  if (!cfg) return report_error(HC_INTERNAL);
  hc_status st = hc_config_set_seed(cfg.get(), args.seed ? *args.seed : default_seed());
  if (st == HC_OK) st = hc_config_set_samples(cfg.get(), args.samples);
  if (st == HC_OK) st = hc_config_set_tol(cfg.get(), args.tol);
  for (const auto& s : args.suites)
    if (st == HC_OK) st = hc_config_add_suite(cfg.get(), s.c_str());
  if (st != HC_OK) return report_error(st);

  hc_report* raw = nullptr;
  st = hc_run(cfg.get(), &raw);
  if (st != HC_OK) return report_error(st);
  std::unique_ptr<hc_report, decltype(&hc_report_free)> report(raw, hc_report_free);

  const char* text = nullptr;
  st = hc_report_render(report.get(), args.format == "text" ? HC_FORMAT_TEXT : HC_FORMAT_JSON, &text);
  if (st != HC_OK) return report_error(st);
  std::fputs(text, stdout);
  return hc_report_passed(report.get()) ? 0 : kExitFail;
}

int run_table(const std::string& realization) {
  std::size_t needed = 0;
  hc_status st = hc_generator_table(realization.c_str(), nullptr, 0, &needed);
  if (st != HC_OK && st != HC_BUFFER_TOO_SMALL) return report_error(st);
  std::string buf(needed, '\0');
  st = hc_generator_table(realization.c_str(), buf.data(), buf.size(), &needed);
  if (st != HC_OK) return report_error(st);
  std::fputs(buf.c_str(), stdout);
  return 0;
}

int run_grid(const std::string& kind, int res, const std::string& out) {
  const hc_status st = hc_emit_grid(kind.c_str(), res, out.c_str());
  return st == HC_OK ? 0 : report_error(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of the holographic-coordinate identities"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suites and print a report");
  verify_cmd->add_option("--suite", verify.suites, "suite to run (repeatable)")
      ->check(CLI::IsMember({"bicomplex", "charts", "laplace", "algebra", "projective", "all"}));
  verify_cmd->add_option("--seed", verify.seed, "sampling seed (default: $HOLOCONF_SEED, else 1)");
  verify_cmd->add_option("--samples", verify.samples, "random samples per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", verify.tol, "defect tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string realization;
  auto* table_cmd = app.add_subcommand("table", "print the generator coefficient table");
  table_cmd->add_option("--realization", realization, "cartesian, polar, holographic, conformal or upsilon")
      ->required();

  std::string kind, out;
  int res = 32;
  auto* grid_cmd = app.add_subcommand("grid", "write a CSV grid for plotting");
  grid_cmd->add_option("--kind", kind, "joukowski, hopf-fibers or conformal-flow")
      ->required()
      ->check(CLI::IsMember({"joukowski", "hopf-fibers", "conformal-flow"}));
  grid_cmd->add_option("--res", res, "points per axis (>= 2)")->check(CLI::Range(2, 100000));
  grid_cmd->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
    if (*verify_cmd) return run_verify(verify);
    if (*table_cmd) return run_table(realization);
    if (*grid_cmd) return run_grid(kind, res, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return kExitUsage;
}
