// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "holoconf/error.hpp"
#include "holoconf/harness.hpp"
#include "holoconf/projective.hpp"

namespace holoconf {

namespace {

constexpr double kPi = std::numbers::pi;

void row(std::ostringstream& out, std::initializer_list<double> values) {
  bool first = true;
  char buf[40];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!first) out << ',';
    out << buf;
    first = false;
  }
  out << '\n';
}

void joukowski(std::ostringstream& out, int res) {
  out << "radius,phi,v_re,v_im,cn_re,cn_im,sn_re,sn_im\n";
  for (int i = 0; i < res; ++i) {
    const double radius = 0.5 * std::pow(4.0, static_cast<double>(i) / (res - 1));
    for (int k = 0; k < res; ++k) {
      const double phi = 2.0 * kPi * k / res;
      const cplx v = std::polar(radius, phi);
      const cplx c = cn(v), s = sn(v);
      row(out, {radius, phi, v.real(), v.imag(), c.real(), c.imag(), s.real(), s.imag()});
    }
  }
}

// Base points spiral from the north to the south pole; over the base point
// with polar angle a and azimuth b the fiber is
// (cos(a/2) e^{i l}, sin(a/2) e^{i(l - b)}).
void hopf_fibers(std::ostringstream& out, int res) {
  out << "fiber,xi1,xi2,xi3,lambda,s1,s2,s3,s4\n";
  for (int i = 0; i < res; ++i) {
    const double a = kPi * i / (res - 1);
    const double b = 2.0 * kPi * i / res;
    const double xi1 = std::sin(a) * std::cos(b), xi2 = std::sin(a) * std::sin(b), xi3 = std::cos(a);
    for (int k = 0; k < res; ++k) {
      const double lambda = 2.0 * kPi * k / res;
      const cplx z1 = std::polar(std::cos(0.5 * a), lambda);
      const cplx z2 = std::polar(std::sin(0.5 * a), lambda - b);
      row(out, {static_cast<double>(i), xi1, xi2, xi3, lambda, z1.real(), z1.imag(), z2.real(), z2.imag()});
    }
  }
}

void conformal_flow(std::ostringstream& out, int res) {
  out << "generator,start,eps,v_re,v_im\n";
  for (GeneratorId g : {GeneratorId::b, GeneratorId::s01}) {
    for (int i = 0; i < res; ++i) {
      const cplx v0 = std::polar(1.0, 2.0 * kPi * i / res);
      for (int k = 0; k < res; ++k) {
        const double eps = -1.0 + 2.0 * k / (res - 1);
        const cplx v = mobius_apply(exp_one_param(g, eps, Ring::complex), v0);
        out << to_string(g) << ',';
        row(out, {static_cast<double>(i), eps, v.real(), v.imag()});
      }
    }
  }
}

}  // namespace

std::string_view to_string(GridKind k) noexcept {
  switch (k) {
    case GridKind::joukowski: return "joukowski";
    case GridKind::hopf_fibers: return "hopf-fibers";
    case GridKind::conformal_flow: return "conformal-flow";
  }
  return "?";
}

std::optional<GridKind> parse_grid_kind(std::string_view name) noexcept {
  for (auto k : {GridKind::joukowski, GridKind::hopf_fibers, GridKind::conformal_flow})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string grid_csv(GridKind kind, int resolution) {
  if (resolution < 2) throw Error(ErrorCode::invalid_argument, "grid resolution must be at least 2");
  std::ostringstream out;
  switch (kind) {
    case GridKind::joukowski: joukowski(out, resolution); break;
    case GridKind::hopf_fibers: hopf_fibers(out, resolution); break;
    case GridKind::conformal_flow: conformal_flow(out, resolution); break;
  }
  return out.str();
}

void emit_grid(GridKind kind, int resolution, const std::string& path) {
  const std::string csv = grid_csv(kind, resolution);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::io, "cannot open " + path + " for writing");
  file << csv;
  if (!file.flush()) throw Error(ErrorCode::io, "write to " + path + " failed");
}

std::vector<std::string> generator_table(Realization r) {
  struct Row {
    const char* c0;
    const char* c1;
  };
  const char* axis0 = "";
  const char* axis1 = "";
  std::array<Row, 6> rows{};
  switch (r) {
    case Realization::cartesian:
      axis0 = "d_x0";
      axis1 = "d_x1";
      rows = {{{"x0", "x1"},
               {"-x1", "x0"},
               {"1", "0"},
               {"0", "1"},
               {"x0^2 - x1^2", "2 x0 x1"},
               {"2 x0 x1", "x1^2 - x0^2"}}};
      break;
    case Realization::polar:
      axis0 = "d_r";
      axis1 = "d_phi";
      rows = {{{"r", "0"},
               {"0", "1"},
               {"cos(phi)", "-sin(phi)/r"},
               {"sin(phi)", "cos(phi)/r"},
               {"r^2 cos(phi)", "r sin(phi)"},
               {"r^2 sin(phi)", "-r cos(phi)"}}};
      break;
    case Realization::holographic:
      axis0 = "d_theta";
      axis1 = "d_phi";
      rows = {{{"tan(theta)", "0"},
               {"0", "1"},
               {"cos(phi)/cos(theta)", "-sin(phi)/sin(theta)"},
               {"sin(phi)/cos(theta)", "cos(phi)/sin(theta)"},
               {"cos(phi) sin(theta) tan(theta)", "sin(phi) sin(theta)"},
               {"sin(phi) sin(theta) tan(theta)", "-cos(phi) sin(theta)"}}};
      break;
    case Realization::conformal:
      axis0 = "d_rho";
      axis1 = "d_phi";
      rows = {{{"1", "0"},
               {"0", "1"},
               {"e^-rho cos(phi)", "-e^-rho sin(phi)"},
               {"e^-rho sin(phi)", "e^-rho cos(phi)"},
               {"e^rho cos(phi)", "e^rho sin(phi)"},
               {"e^rho sin(phi)", "-e^rho cos(phi)"}}};
      break;
    case Realization::upsilon_line:
      axis0 = "d_v";
      axis1 = "-";
      rows = {{{"v", ""}, {"i v", ""}, {"1", ""}, {"i", ""}, {"v^2", ""}, {"-i v^2", ""}}};
      break;
  }
  std::vector<std::string> out;
  out.push_back(std::string("generator\t") + axis0 + '\t' + axis1);
  for (GeneratorId g : kAllGenerators) {
    const Row& rw = rows[index_of(g)];
    out.push_back(std::string(to_string(g)) + '\t' + rw.c0 + '\t' + rw.c1);
  }
  return out;
}

}  // namespace holoconf
