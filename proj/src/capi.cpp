// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/holoconf.h"

#include <cstring>
#include <new>
#include <string>

#include "holoconf/bicomplex.hpp"
#include "holoconf/error.hpp"
#include "holoconf/harness.hpp"
#include "holoconf/laplace.hpp"
#include "holoconf/projective.hpp"

struct hc_config {
  holoconf::SuiteConfig cfg;
};

struct hc_report {
  holoconf::VerificationReport report;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

hc_status fail(hc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

hc_status from_code(holoconf::ErrorCode code) {
  using holoconf::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return HC_INVALID_ARGUMENT;
    case ErrorCode::domain: return HC_DOMAIN;
    case ErrorCode::singular: return HC_SINGULAR;
    case ErrorCode::pole: return HC_POLE;
    case ErrorCode::unsupported: return HC_UNSUPPORTED;
    case ErrorCode::structure: return HC_STRUCTURE;
    case ErrorCode::realization_mismatch: return HC_REALIZATION_MISMATCH;
    case ErrorCode::unmatched_bracket: return HC_UNMATCHED_BRACKET;
    case ErrorCode::io: return HC_IO;
  }
  return HC_INTERNAL;
}

template <class F>
hc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const holoconf::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

HC_API const char* hc_last_error(void) { return g_last_error.c_str(); }

HC_API const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_BUFFER_TOO_SMALL: return "buffer_too_small";
    case HC_INTERNAL: return "internal";
    default: break;
  }
  if (status >= HC_INVALID_ARGUMENT && status <= HC_IO)
    return holoconf::to_string(static_cast<holoconf::ErrorCode>(status));
  return "unknown";
}

HC_API hc_config* hc_config_new(void) { return new (std::nothrow) hc_config{}; }

HC_API void hc_config_free(hc_config* cfg) { delete cfg; }

HC_API hc_status hc_config_set_seed(hc_config* cfg, uint64_t seed) {
  if (!cfg) return fail(HC_INVALID_ARGUMENT, "null config");
  cfg->cfg.seed = seed;
  return HC_OK;
}

HC_API hc_status hc_config_set_samples(hc_config* cfg, int samples) {
  if (!cfg) return fail(HC_INVALID_ARGUMENT, "null config");
  if (samples < 1) return fail(HC_INVALID_ARGUMENT, "samples must be at least 1");
  cfg->cfg.samples = samples;
  return HC_OK;
}

HC_API hc_status hc_config_set_tol(hc_config* cfg, double tol) {
  if (!cfg) return fail(HC_INVALID_ARGUMENT, "null config");
  if (!(tol > 0.0)) return fail(HC_INVALID_ARGUMENT, "tol must be positive");
  cfg->cfg.tol = tol;
  return HC_OK;
}

HC_API hc_status hc_config_add_suite(hc_config* cfg, const char* name) {
  if (!cfg || !name) return fail(HC_INVALID_ARGUMENT, "null argument");
  if (std::strcmp(name, "all") == 0) {
    cfg->cfg.suites.assign(holoconf::kAllSuites.begin(), holoconf::kAllSuites.end());
    return HC_OK;
  }
  const auto suite = holoconf::parse_suite(name);
  if (!suite) return fail(HC_INVALID_ARGUMENT, std::string("unknown suite: ") + name);
  for (auto s : cfg->cfg.suites)
    if (s == *suite) return HC_OK;
  cfg->cfg.suites.push_back(*suite);
  return HC_OK;
}

HC_API hc_status hc_run(const hc_config* cfg, hc_report** out) {
  if (!cfg || !out) return fail(HC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    holoconf::validate(cfg->cfg);
    auto* rep = new hc_report{};
    rep->report = holoconf::run_suite(cfg->cfg);
    *out = rep;
    return HC_OK;
  });
}

HC_API void hc_report_free(hc_report* report) { delete report; }

HC_API int hc_report_passed(const hc_report* report) { return report && report->report.passed() ? 1 : 0; }

HC_API size_t hc_report_failures(const hc_report* report) { return report ? report->report.failures() : 0; }

HC_API hc_status hc_report_render(hc_report* report, hc_format format, const char** out) {
  if (!report || !out) return fail(HC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    switch (format) {
      case HC_FORMAT_JSON: report->rendered = holoconf::to_json(report->report); break;
      case HC_FORMAT_TEXT: report->rendered = holoconf::to_text(report->report); break;
      default: return fail(HC_INVALID_ARGUMENT, "unknown format");
    }
    *out = report->rendered.c_str();
    return HC_OK;
  });
}

HC_API hc_status hc_emit_grid(const char* kind, int resolution, const char* path) {
  if (!kind || !path) return fail(HC_INVALID_ARGUMENT, "null argument");
  const auto k = holoconf::parse_grid_kind(kind);
  if (!k) return fail(HC_INVALID_ARGUMENT, std::string("unknown grid kind: ") + kind);
  return guarded([&] {
    holoconf::emit_grid(*k, resolution, path);
    return HC_OK;
  });
}

HC_API hc_status hc_generator_table(const char* realization, char* buf, size_t size, size_t* needed) {
  if (!realization) return fail(HC_INVALID_ARGUMENT, "null argument");
  const auto r = holoconf::parse_realization(realization);
  if (!r) return fail(HC_INVALID_ARGUMENT, std::string("unknown realization: ") + realization);
  return guarded([&] {
    std::string text;
    for (const auto& line : holoconf::generator_table(*r)) text += line + '\n';
    if (needed) *needed = text.size() + 1;
    if (!buf || size < text.size() + 1) return fail(HC_BUFFER_TOO_SMALL, "buffer too small for generator table");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return HC_OK;
  });
}

HC_API hc_status hc_solve(const char* chart, double y0, double y1, double alpha_re, double alpha_im, double* out_re,
                          double* out_im) {
  if (!chart || !out_re || !out_im) return fail(HC_INVALID_ARGUMENT, "null argument");
  const auto c = holoconf::parse_chart(chart);
  if (!c) return fail(HC_INVALID_ARGUMENT, std::string("unknown chart: ") + chart);
  return guarded([&] {
    const holoconf::cplx v = holoconf::solve({alpha_re, alpha_im}, {*c, y0, y1});
    *out_re = v.real();
    *out_im = v.imag();
    return HC_OK;
  });
}

HC_API hc_status hc_hopf(const double s[4], double out[3]) {
  if (!s || !out) return fail(HC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const holoconf::HopfTriple h = holoconf::hopf({s[0], s[1], s[2], s[3]});
    out[0] = h.xi1;
    out[1] = h.xi2;
    out[2] = h.xi3;
    return HC_OK;
  });
}

HC_API hc_status hc_bicomplex_mul(const double a[4], const double b[4], double out[4]) {
  if (!a || !b || !out) return fail(HC_INVALID_ARGUMENT, "null argument");
  const holoconf::Bicomplex p = holoconf::Bicomplex{a[0], a[1], a[2], a[3]} * holoconf::Bicomplex{b[0], b[1], b[2], b[3]};
  out[0] = p.re;
  out[1] = p.im_i;
  out[2] = p.im_j;
  out[3] = p.im_ij;
  return HC_OK;
}

}  // extern "C"
