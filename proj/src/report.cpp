// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "holoconf/harness.hpp"

namespace holoconf {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no infinity; failures that never produced a finite defect are
// written as null.
ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::string fmt(double v) {
  if (std::isinf(v)) return "inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  ordered_json root;
  root["schema_version"] = VerificationReport::kSchemaVersion;

  ordered_json cfg;
  cfg["seed"] = report.config.seed;
  cfg["samples"] = report.config.samples;
  cfg["tol"] = report.config.tol;
  ordered_json suites = ordered_json::array();
  if (report.config.suites.empty()) {
    suites.push_back("all");
  } else {
    for (Suite s : report.config.suites) suites.push_back(std::string(to_string(s)));
  }
  cfg["suites"] = suites;
  root["config"] = cfg;

  root["status"] = report.passed() ? "pass" : "fail";
  root["checks_total"] = report.checks.size();
  root["failures"] = report.failures();

  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    ordered_json j;
    j["suite"] = std::string(to_string(c.suite));
    j["check"] = c.name;
    j["anchor"] = c.anchor;
    j["status"] = c.passed ? "pass" : "fail";
    j["max_defect"] = number(c.max_defect);
    j["threshold"] = c.threshold;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.ledger) {
      ordered_json ledger = ordered_json::array();
      for (const LedgerEntry& e : c.ledger->entries) {
        ordered_json row;
        row["bracket"] = e.label;
        row["sign"] = e.sign;
        row["trivial"] = e.trivial;
        row["defect"] = number(e.defect);
        ledger.push_back(row);
      }
      j["sign_ledger"] = ledger;
    }
    checks.push_back(j);
  }
  root["checks"] = checks;
  return root.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckRecord& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << to_string(c.suite) << '/' << c.name << "  defect=" << fmt(c.max_defect)
        << " threshold=" << fmt(c.threshold);
    if (!c.note.empty()) out << "  (" << c.note << ')';
    out << '\n';
    if (c.ledger && !c.passed) {
      for (const LedgerEntry& e : c.ledger->entries)
        out << "    " << e.label << " sign=" << e.sign << " defect=" << fmt(e.defect) << '\n';
    }
  }
  out << (report.passed() ? "overall: pass" : "overall: fail") << " (" << report.checks.size() - report.failures()
      << '/' << report.checks.size() << " checks passed, seed " << report.config.seed << ")\n";
  return out.str();
}

}  // namespace holoconf
