// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace holoconf {

enum class ErrorCode {
  invalid_argument = 1,
  domain,                ///< chart point outside the chart's validity region
  singular,              ///< degenerate metric or zero input where an inverse is needed
  pole,                  ///< fractional-linear or inversion denominator vanishes
  unsupported,           ///< generator not available in the requested ring
  structure,             ///< an algebraic identity produced an unexpected component
  realization_mismatch,  ///< bracket of fields living on different realizations
  unmatched_bracket,     ///< commutator matches neither sign of the reference relation
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holoconf
