// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/error.hpp"

namespace holoconf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::singular: return "singular";
    case ErrorCode::pole: return "pole";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::structure: return "structure";
    case ErrorCode::realization_mismatch: return "realization_mismatch";
    case ErrorCode::unmatched_bracket: return "unmatched_bracket";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace holoconf
