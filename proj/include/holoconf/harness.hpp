// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holoconf/algebra.hpp"

namespace holoconf {

enum class Suite { bicomplex, charts, laplace, algebra, projective };

inline constexpr std::array<Suite, 5> kAllSuites = {Suite::bicomplex, Suite::charts, Suite::laplace, Suite::algebra,
                                                    Suite::projective};

std::string_view to_string(Suite s) noexcept;
/// Accepts the five suite names; "all" is handled by callers.
std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct SuiteConfig {
  std::uint64_t seed = 1;
  int samples = 50;
  double tol = 1e-10;
  /// Empty means every suite.
  std::vector<Suite> suites;
};

/// Throws Error(invalid_argument) for samples < 1 or a non-positive tolerance.
void validate(const SuiteConfig& cfg);

struct CheckRecord {
  Suite suite = Suite::bicomplex;
  std::string name;
  std::string anchor;  ///< the identity being checked, in words
  bool passed = false;
  double max_defect = 0.0;
  double threshold = 0.0;
  std::string note;
  std::optional<SignLedger> ledger;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  SuiteConfig config;
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::size_t failures() const;
};

/// Runs the selected suites in declaration order. Check failures and
/// exceptions raised inside a check become failing records.
VerificationReport run_suite(const SuiteConfig& cfg);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

enum class GridKind { joukowski, hopf_fibers, conformal_flow };

std::string_view to_string(GridKind k) noexcept;
std::optional<GridKind> parse_grid_kind(std::string_view name) noexcept;

/// CSV text for a plot grid; resolution >= 2 or Error(invalid_argument).
///   joukowski       v on circles |v| in [0.5, 2], cn(v) and sn(v)
///   hopf-fibers     S2 base points and the fiber circle over each
///   conformal-flow  v-line flows of b and s01 from a ring of start points
std::string grid_csv(GridKind kind, int resolution);

/// Writes grid_csv to `path`; Error(io) when the file cannot be written.
void emit_grid(GridKind kind, int resolution, const std::string& path);

/// Rows of closed-form generator coefficients for a realization, one line
/// per generator: name, then the two coefficient expressions.
std::vector<std::string> generator_table(Realization r);

}  // namespace holoconf
