// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holoconf/charts.hpp"
#include "holoconf/jet.hpp"
#include "holoconf/laplace.hpp"

namespace holoconf {

enum class GeneratorId { b, s01, p0, p1, q0, q1 };

inline constexpr std::array<GeneratorId, 6> kAllGenerators = {GeneratorId::b,  GeneratorId::s01, GeneratorId::p0,
                                                              GeneratorId::p1, GeneratorId::q0,  GeneratorId::q1};

std::string_view to_string(GeneratorId g) noexcept;
std::optional<GeneratorId> parse_generator(std::string_view name) noexcept;
constexpr std::size_t index_of(GeneratorId g) { return static_cast<std::size_t>(g); }

/// Where a generator acts: one of the four planar charts, or the complex
/// line of the solution variable v.
enum class Realization { cartesian, polar, holographic, conformal, upsilon_line };

inline constexpr std::array<Realization, 5> kAllRealizations = {
    Realization::cartesian, Realization::polar, Realization::holographic, Realization::conformal,
    Realization::upsilon_line};

std::string_view to_string(Realization r) noexcept;
std::optional<Realization> parse_realization(std::string_view name) noexcept;
std::optional<ChartId> chart_of(Realization r) noexcept;
Realization realization_of(ChartId chart) noexcept;

/// Point of a realization. Chart realizations use the real coordinates
/// (y0, y1); the v-line uses {v, 0}.
using Point2 = std::array<cplx, 2>;

Point2 to_point(const ChartPoint& p);

/// Element of the six-dimensional algebra written over the generator basis,
/// indexed by index_of(GeneratorId).
using Coeffs6 = std::array<cplx, 6>;

Coeffs6 unit(GeneratorId g);
Coeffs6 operator+(const Coeffs6& a, const Coeffs6& b);
Coeffs6 operator-(const Coeffs6& a, const Coeffs6& b);
Coeffs6 operator*(cplx s, const Coeffs6& a);
bool is_zero(const Coeffs6& a);

/// First-order differential operator c0 d_0 + c1 d_1 on a realization. On
/// the v-line only c0 is used and differentiation is complex-analytic.
class VectorField {
 public:
  using Components = std::array<Jet, 2>;
  /// Coefficients as functions of the coordinate jets.
  using Formula = std::function<Components(const Jet& y0, const Jet& y1)>;

  struct Node;

  VectorField(Realization realization, Formula formula);

  Realization realization() const noexcept { return realization_; }

  /// Coefficient jets at p, truncated at `order`.
  Components eval(const Point2& p, int order) const;

  /// Coefficient values at p.
  std::array<cplx, 2> at(const Point2& p) const;

  /// (X f)(p).
  cplx apply(const ScalarField& f, const Point2& p) const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(cplx s, const VectorField& a);
  friend VectorField bracket(const VectorField& x, const VectorField& y);
  friend VectorField pushforward_generator(GeneratorId g, ChartId chart);

 private:
  VectorField(Realization realization, std::shared_ptr<const Node> node)
      : realization_(realization), node_(std::move(node)) {}

  Realization realization_;
  std::shared_ptr<const Node> node_;
};

/// Lie bracket [X, Y] with coefficients X(Y_j) - Y(X_j). Throws
/// Error(realization_mismatch) when X and Y live on different realizations.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Closed-form generator fields for each realization.
VectorField generator(GeneratorId g, Realization r);

/// Flat generator transported into `chart` through the inverse Jacobian of
/// the embedding. Independent of the closed forms used by generator().
VectorField pushforward_generator(GeneratorId g, ChartId chart);

VectorField combination(Realization r, const Coeffs6& c);

/// Largest pointwise coefficient difference, each point scaled by
/// 1 + the largest coefficient magnitude there.
double field_defect(const VectorField& a, const VectorField& b, std::span<const Point2> points);

/// Deterministic sample points of a realization's valid region.
std::vector<Point2> sample_points(Realization r, int count, std::uint64_t seed);

/// Seed and count for bracket comparisons.
inline constexpr std::uint64_t kBracketSeed = 20260;
inline constexpr int kBracketSamples = 50;

/// Right-hand side of the reference commutator [a, b] of the conformal
/// algebra with Euclidean metric:
///   [s01, p_s] = g_1s p0 - g_0s p1,  [s01, q_s] = g_1s q0 - g_0s q1,
///   [b, p] = -p,  [b, q] = q,  [q_m, p_n] = 2 (g_mn b + s_mn).
Coeffs6 reference_commutator(GeneratorId a, GeneratorId b);

/// True for the four [q_m, p_n] pairs, in either order.
bool is_translation_pair(GeneratorId a, GeneratorId b);

// ---------------------------------------------------------------------------
// Sign ledgers.

struct LedgerEntry {
  std::string label;
  int sign = 0;          ///< +1 as written, -1 negated, 0 unmatched
  bool trivial = false;  ///< both sides vanish
  double defect = 0.0;   ///< defect of the matched sign (smaller one if unmatched)
};

struct SignLedger {
  std::vector<LedgerEntry> entries;

  bool complete() const;
  double max_defect() const;
  /// Sign recorded for `label`, or 0 if absent.
  int sign(std::string_view label) const;
  /// True when every label carries the same sign in both ledgers.
  bool same_signs(const SignLedger& other) const;
};

/// Any concrete carrier of the algebra: something that can take the bracket
/// of two combinations and measure how far it is from a third.
struct LieModel {
  std::string name;
  std::vector<GeneratorId> generators;
  std::function<double(const Coeffs6& u, const Coeffs6& v, const Coeffs6& rhs)> bracket_defect;
};

LieModel vector_field_model(Realization r, int samples = kBracketSamples, std::uint64_t seed = kBracketSeed);

/// Ledger of all generator pairs of the model against reference_commutator.
/// Never throws on mismatch; unmatched entries carry sign 0.
SignLedger commutator_ledger(const LieModel& model, double tol);

/// commutator_ledger for a vector-field realization; throws
/// Error(unmatched_bracket) if any bracket matches neither sign.
SignLedger structure_table(Realization r, double tol = 1e-10);

/// Ledger the vector-field realizations are documented to follow: +1 for
/// every pair except [q_m, p_n], which is negated.
SignLedger documented_field_ledger();

std::string bracket_label(GeneratorId a, GeneratorId b);

// ---------------------------------------------------------------------------
// so(3,1) packaging.

inline constexpr std::array<std::array<int, 2>, 6> kPackedIndices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// s_{mu nu} as a combination of generators: s01 as is, s_{m2} = (q_m - p_m)/2,
/// s_{m3} = -(q_m + p_m)/2, s23 = b. Antisymmetric in (mu, nu).
Coeffs6 packed_generator(int mu, int nu);

/// The six fields s01, s02, s03, s12, s13, s23 in kPackedIndices order.
std::array<VectorField, 6> so31_pack(Realization r);

using MetricSigns = std::array<double, 4>;
inline constexpr MetricSigns kMinkowskiMetric = {1.0, 1.0, 1.0, -1.0};

/// [s_mn, s_rs] = g_ms s_nr - g_mr s_ns - g_ns s_mr + g_nr s_ms.
Coeffs6 lorentz_commutator(int mu, int nu, int rho, int sigma, const MetricSigns& g);

struct MinkowskiResult {
  SignLedger ledger;
  /// Sign each bracket must carry given the model's commutator ledger;
  /// 0 where the contributing brackets disagree.
  std::vector<int> expected;
  bool passed = false;
};

/// Checks the packaged brackets against lorentz_commutator with metric g.
/// Passes when every bracket matches and carries the sign implied by the
/// model's own commutator ledger.
MinkowskiResult minkowski_check(const LieModel& model, const MetricSigns& g, double tol);
MinkowskiResult minkowski_check(Realization r, const MetricSigns& g = kMinkowskiMetric, double tol = 1e-10);

/// Every diagonal sign pattern (entries +-1) for which minkowski_check passes.
std::vector<MetricSigns> minkowski_metric_scan(const LieModel& model, double tol);

// ---------------------------------------------------------------------------
// Action on the solutions and the v-line.

/// generator(g) applied to v^alpha at p, in the realization of p's chart.
cplx act(GeneratorId g, cplx alpha, const ChartPoint& p);

/// Eigenaction right-hand sides: alpha v^a, i alpha v^a, alpha v^{a-1},
/// i alpha v^{a-1}, alpha v^{a+1}, -i alpha v^{a+1}.
cplx eigen_rhs(GeneratorId g, cplx alpha, const ChartPoint& p);

/// (v + 1/v)/2 and (v - 1/v)/(2i). Throw Error(singular) at v = 0.
cplx cn(cplx v);
cplx sn(cplx v);

/// Antisymmetric 4x4 multiplier matrix of v d_v for the packaged s_{mu nu}.
using MinkTensor = std::array<std::array<cplx, 4>, 4>;
MinkTensor angular_tensor(cplx v);

/// Replaces 1 by tan(theta) d_theta and i by d_phi in re + i im, giving a
/// holographic field with coefficients (re tan(theta), im).
VectorField paravector_substitute(const ScalarField& re_part, const ScalarField& im_part);

/// c(eps) = e^eps v(p) for the alpha = 1 solution at a holographic point.
cplx tangent_curve(double eps, const ChartPoint& p);

/// sin(theta + eps tan(theta)) e^{i phi}, the first-order expansion of the
/// same curve through the angle.
cplx tangent_curve_angle_form(double eps, const ChartPoint& p);

}  // namespace holoconf
