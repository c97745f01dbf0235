// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holoconf/error.hpp"
#include "holoconf/sampling.hpp"

namespace holoconf {

namespace {

constexpr cplx kI{0.0, 1.0};

using Components = VectorField::Components;

Components flat_components(GeneratorId g, const Jet& x0, const Jet& x1) {
  const int n = std::min(x0.order(), x1.order());
  const Jet zero(0.0, n);
  const Jet one(1.0, n);
  switch (g) {
    case GeneratorId::b:
      return {x0, x1};
    case GeneratorId::s01:
      return {-x1, x0};
    case GeneratorId::p0:
      return {one, zero};
    case GeneratorId::p1:
      return {zero, one};
    case GeneratorId::q0:
      return {x0 * x0 - x1 * x1, 2.0 * x0 * x1};
    case GeneratorId::q1:
      return {2.0 * x0 * x1, x1 * x1 - x0 * x0};
  }
  return {zero, zero};
}

Components closed_components(GeneratorId g, Realization r, const Jet& y0, const Jet& y1) {
  const int n = std::min(y0.order(), y1.order());
  const Jet zero(0.0, n);
  const Jet one(1.0, n);
  switch (r) {
    case Realization::cartesian:
      return flat_components(g, y0, y1);
    case Realization::polar: {
      const Jet c = cos(y1), s = sin(y1);
      switch (g) {
        case GeneratorId::b: return {y0, zero};
        case GeneratorId::s01: return {zero, one};
        case GeneratorId::p0: return {c, -s / y0};
        case GeneratorId::p1: return {s, c / y0};
        case GeneratorId::q0: return {y0 * y0 * c, y0 * s};
        case GeneratorId::q1: return {y0 * y0 * s, -(y0 * c)};
      }
      break;
    }
    case Realization::holographic: {
      const Jet c = cos(y1), s = sin(y1);
      const Jet ct = cos(y0), st = sin(y0), tt = tan(y0);
      switch (g) {
        case GeneratorId::b: return {tt, zero};
        case GeneratorId::s01: return {zero, one};
        case GeneratorId::p0: return {c / ct, -s / st};
        case GeneratorId::p1: return {s / ct, c / st};
        case GeneratorId::q0: return {c * st * tt, s * st};
        case GeneratorId::q1: return {s * st * tt, -(c * st)};
      }
      break;
    }
    case Realization::conformal: {
      const Jet c = cos(y1), s = sin(y1);
      const Jet grow = exp(y0), shrink = exp(-y0);
      switch (g) {
        case GeneratorId::b: return {one, zero};
        case GeneratorId::s01: return {zero, one};
        case GeneratorId::p0: return {shrink * c, -(shrink * s)};
        case GeneratorId::p1: return {shrink * s, shrink * c};
        case GeneratorId::q0: return {grow * c, grow * s};
        case GeneratorId::q1: return {grow * s, -(grow * c)};
      }
      break;
    }
    case Realization::upsilon_line: {
      const Jet& v = y0;
      switch (g) {
        case GeneratorId::b: return {v, zero};
        case GeneratorId::s01: return {kI * v, zero};
        case GeneratorId::p0: return {one, zero};
        case GeneratorId::p1: return {Jet(kI, n), zero};
        case GeneratorId::q0: return {v * v, zero};
        case GeneratorId::q1: return {-kI * (v * v), zero};
      }
      break;
    }
  }
  return {zero, zero};
}

}  // namespace

struct VectorField::Node {
  virtual ~Node() = default;
  virtual Components eval(const Point2& p, int order) const = 0;
};

namespace {

struct FormulaNode final : VectorField::Node {
  explicit FormulaNode(VectorField::Formula f) : formula(std::move(f)) {}
  Components eval(const Point2& p, int order) const override {
    return formula(Jet::variable(p[0], 0, order), Jet::variable(p[1], 1, order));
  }
  VectorField::Formula formula;
};

struct SumNode final : VectorField::Node {
  std::vector<std::pair<cplx, std::shared_ptr<const VectorField::Node>>> terms;
  Components eval(const Point2& p, int order) const override {
    Components out{Jet(0.0, order), Jet(0.0, order)};
    for (const auto& [c, node] : terms) {
      const auto v = node->eval(p, order);
      out[0] += c * v[0];
      out[1] += c * v[1];
    }
    return out;
  }
};

struct BracketNode final : VectorField::Node {
  std::shared_ptr<const VectorField::Node> x, y;
  Components eval(const Point2& p, int order) const override {
    if (order + 1 > Jet::kMaxOrder) throw Error(ErrorCode::invalid_argument, "bracket nesting exceeds jet order");
    const auto xs = x->eval(p, order + 1);
    const auto ys = y->eval(p, order + 1);
    Components out{Jet(0.0, order), Jet(0.0, order)};
    for (int j = 0; j < 2; ++j) {
      for (int i = 0; i < 2; ++i) {
        out[j] += xs[i].truncated(order) * ys[j].partial(i);
        out[j] -= ys[i].truncated(order) * xs[j].partial(i);
      }
    }
    return out;
  }
};

// W = J^{-1} V(x(y)), with J = dx/dy from jets one order higher.
struct PushforwardNode final : VectorField::Node {
  ChartId chart;
  GeneratorId generator;
  Components eval(const Point2& p, int order) const override {
    if (order + 1 > Jet::kMaxOrder) throw Error(ErrorCode::invalid_argument, "pushforward exceeds jet order");
    const auto x = embed_as(chart, Jet::variable(p[0], 0, order + 1), Jet::variable(p[1], 1, order + 1));
    const Jet j00 = x[0].partial(0), j01 = x[0].partial(1);
    const Jet j10 = x[1].partial(0), j11 = x[1].partial(1);
    const auto v = flat_components(generator, x[0].truncated(order), x[1].truncated(order));
    const Jet det = j00 * j11 - j01 * j10;
    return {(j11 * v[0] - j01 * v[1]) / det, (j00 * v[1] - j10 * v[0]) / det};
  }
};

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(GeneratorId g) noexcept {
  switch (g) {
    case GeneratorId::b: return "b";
    case GeneratorId::s01: return "s01";
    case GeneratorId::p0: return "p0";
    case GeneratorId::p1: return "p1";
    case GeneratorId::q0: return "q0";
    case GeneratorId::q1: return "q1";
  }
  return "?";
}

std::optional<GeneratorId> parse_generator(std::string_view name) noexcept {
  for (auto g : kAllGenerators)
    if (to_string(g) == name) return g;
  return std::nullopt;
}

std::string_view to_string(Realization r) noexcept {
  switch (r) {
    case Realization::cartesian: return "cartesian";
    case Realization::polar: return "polar";
    case Realization::holographic: return "holographic";
    case Realization::conformal: return "conformal";
    case Realization::upsilon_line: return "upsilon-line";
  }
  return "?";
}

std::optional<Realization> parse_realization(std::string_view name) noexcept {
  for (auto r : kAllRealizations)
    if (to_string(r) == name) return r;
  if (name == "flat") return Realization::cartesian;
  if (name == "upsilon_line" || name == "upsilon") return Realization::upsilon_line;
  return std::nullopt;
}

std::optional<ChartId> chart_of(Realization r) noexcept {
  switch (r) {
    case Realization::cartesian: return ChartId::cartesian;
    case Realization::polar: return ChartId::polar;
    case Realization::holographic: return ChartId::holographic;
    case Realization::conformal: return ChartId::conformal;
    case Realization::upsilon_line: return std::nullopt;
  }
  return std::nullopt;
}

Realization realization_of(ChartId chart) noexcept {
  switch (chart) {
    case ChartId::cartesian: return Realization::cartesian;
    case ChartId::polar: return Realization::polar;
    case ChartId::holographic: return Realization::holographic;
    case ChartId::conformal: return Realization::conformal;
  }
  return Realization::cartesian;
}

Point2 to_point(const ChartPoint& p) { return {cplx(p.y0), cplx(p.y1)}; }

Coeffs6 unit(GeneratorId g) {
  Coeffs6 c{};
  c[index_of(g)] = 1.0;
  return c;
}

Coeffs6 operator+(const Coeffs6& a, const Coeffs6& b) {
  Coeffs6 c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a[k] + b[k];
  return c;
}

Coeffs6 operator-(const Coeffs6& a, const Coeffs6& b) {
  Coeffs6 c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a[k] - b[k];
  return c;
}

Coeffs6 operator*(cplx s, const Coeffs6& a) {
  Coeffs6 c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = s * a[k];
  return c;
}

bool is_zero(const Coeffs6& a) {
  return std::all_of(a.begin(), a.end(), [](cplx v) { return v == 0.0; });
}

// ---------------------------------------------------------------------------

VectorField::VectorField(Realization realization, Formula formula)
    : realization_(realization), node_(std::make_shared<FormulaNode>(std::move(formula))) {}

VectorField::Components VectorField::eval(const Point2& p, int order) const { return node_->eval(p, order); }

std::array<cplx, 2> VectorField::at(const Point2& p) const {
  const auto c = eval(p, 0);
  return {c[0].value(), c[1].value()};
}

cplx VectorField::apply(const ScalarField& f, const Point2& p) const {
  const auto c = at(p);
  const Jet v = f(Jet::variable(p[0], 0, 1), Jet::variable(p[1], 1, 1));
  return c[0] * v.d(0) + c[1] * v.d(1);
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.realization_ != b.realization_) throw Error(ErrorCode::realization_mismatch, "sum across realizations");
  auto node = std::make_shared<SumNode>();
  node->terms = {{1.0, a.node_}, {1.0, b.node_}};
  return VectorField(a.realization_, std::move(node));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  if (a.realization_ != b.realization_) throw Error(ErrorCode::realization_mismatch, "difference across realizations");
  auto node = std::make_shared<SumNode>();
  node->terms = {{1.0, a.node_}, {-1.0, b.node_}};
  return VectorField(a.realization_, std::move(node));
}

VectorField operator*(cplx s, const VectorField& a) {
  auto node = std::make_shared<SumNode>();
  node->terms = {{s, a.node_}};
  return VectorField(a.realization_, std::move(node));
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (x.realization_ != y.realization_) {
    std::ostringstream msg;
    msg << "cannot bracket a " << to_string(x.realization_) << " field with a " << to_string(y.realization_)
        << " field";
    throw Error(ErrorCode::realization_mismatch, msg.str());
  }
  auto node = std::make_shared<BracketNode>();
  node->x = x.node_;
  node->y = y.node_;
  return VectorField(x.realization_, std::move(node));
}

VectorField generator(GeneratorId g, Realization r) {
  return VectorField(r, [g, r](const Jet& y0, const Jet& y1) { return closed_components(g, r, y0, y1); });
}

VectorField pushforward_generator(GeneratorId g, ChartId chart) {
  auto node = std::make_shared<PushforwardNode>();
  node->chart = chart;
  node->generator = g;
  return VectorField(realization_of(chart), std::move(node));
}

VectorField combination(Realization r, const Coeffs6& c) {
  std::optional<VectorField> out;
  for (auto g : kAllGenerators) {
    const cplx k = c[index_of(g)];
    if (k == 0.0) continue;
    VectorField term = k == 1.0 ? generator(g, r) : k * generator(g, r);
    out = out ? *out + term : term;
  }
  if (out) return *out;
  return VectorField(r, [](const Jet& y0, const Jet&) {
    return Components{Jet(0.0, y0.order()), Jet(0.0, y0.order())};
  });
}

double field_defect(const VectorField& a, const VectorField& b, std::span<const Point2> points) {
  double worst = 0.0;
  for (const auto& p : points) {
    const auto u = a.at(p);
    const auto v = b.at(p);
    const double scale = 1.0 + std::max({std::abs(u[0]), std::abs(u[1]), std::abs(v[0]), std::abs(v[1])});
    const double d = std::max(std::abs(u[0] - v[0]), std::abs(u[1] - v[1])) / scale;
    worst = std::max(worst, std::isnan(d) ? std::numeric_limits<double>::infinity() : d);
  }
  return worst;
}

std::vector<Point2> sample_points(Realization r, int count, std::uint64_t seed) {
  SampleStream s(seed);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    if (const auto chart = chart_of(r)) {
      pts.push_back(to_point(sample_chart_point(s, *chart)));
    } else {
      pts.push_back({sample_upsilon(s), 0.0});
    }
  }
  return pts;
}

// ---------------------------------------------------------------------------

namespace {

enum class Kind { b, s, p, q };

Kind kind_of(GeneratorId g) {
  switch (g) {
    case GeneratorId::b: return Kind::b;
    case GeneratorId::s01: return Kind::s;
    case GeneratorId::p0:
    case GeneratorId::p1: return Kind::p;
    case GeneratorId::q0:
    case GeneratorId::q1: return Kind::q;
  }
  return Kind::b;
}

int vector_index(GeneratorId g) { return (g == GeneratorId::p1 || g == GeneratorId::q1) ? 1 : 0; }

GeneratorId p_of(int mu) { return mu == 0 ? GeneratorId::p0 : GeneratorId::p1; }
GeneratorId q_of(int mu) { return mu == 0 ? GeneratorId::q0 : GeneratorId::q1; }

}  // namespace

Coeffs6 reference_commutator(GeneratorId a, GeneratorId b) {
  const Kind ka = kind_of(a), kb = kind_of(b);
  if (a == b) return {};
  if (ka == kb) return {};  // [p0,p1] = [q0,q1] = 0
  if (ka == Kind::s) {
    if (kb == Kind::b) return {};
    const int sigma = vector_index(b);
    auto vec = kb == Kind::p ? p_of : q_of;
    // g_{1 sigma} v_0 - g_{0 sigma} v_1
    return sigma == 1 ? unit(vec(0)) : cplx(-1.0) * unit(vec(1));
  }
  if (ka == Kind::b) {
    if (kb == Kind::s) return {};
    return kb == Kind::p ? cplx(-1.0) * unit(b) : unit(b);
  }
  if (ka == Kind::q && kb == Kind::p) {
    const int mu = vector_index(a), nu = vector_index(b);
    if (mu == nu) return cplx(2.0) * unit(GeneratorId::b);
    return cplx(mu == 0 ? 2.0 : -2.0) * unit(GeneratorId::s01);
  }
  return cplx(-1.0) * reference_commutator(b, a);
}

bool is_translation_pair(GeneratorId a, GeneratorId b) {
  const Kind ka = kind_of(a), kb = kind_of(b);
  return (ka == Kind::p && kb == Kind::q) || (ka == Kind::q && kb == Kind::p);
}

std::string bracket_label(GeneratorId a, GeneratorId b) {
  std::string s = "[";
  s += to_string(a);
  s += ',';
  s += to_string(b);
  s += ']';
  return s;
}

bool SignLedger::complete() const {
  return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.sign != 0; });
}

double SignLedger::max_defect() const {
  double d = 0.0;
  for (const auto& e : entries) d = std::max(d, e.defect);
  return d;
}

int SignLedger::sign(std::string_view label) const {
  for (const auto& e : entries)
    if (e.label == label) return e.sign;
  return 0;
}

bool SignLedger::same_signs(const SignLedger& other) const {
  if (entries.size() != other.entries.size()) return false;
  return std::all_of(entries.begin(), entries.end(),
                     [&](const LedgerEntry& e) { return e.sign != 0 && other.sign(e.label) == e.sign; });
}

namespace {

LedgerEntry match(std::string label, const LieModel& model, const Coeffs6& u, const Coeffs6& v, const Coeffs6& rhs,
                  double tol) {
  LedgerEntry e;
  e.label = std::move(label);
  const double plus = model.bracket_defect(u, v, rhs);
  if (is_zero(rhs)) {
    e.trivial = plus <= tol;
    e.sign = e.trivial ? 1 : 0;
    e.defect = plus;
    return e;
  }
  if (plus <= tol) {
    e.sign = 1;
    e.defect = plus;
    return e;
  }
  const double minus = model.bracket_defect(u, v, cplx(-1.0) * rhs);
  e.sign = minus <= tol ? -1 : 0;
  e.defect = std::min(plus, minus);
  return e;
}

}  // namespace

LieModel vector_field_model(Realization r, int samples, std::uint64_t seed) {
  auto points = std::make_shared<const std::vector<Point2>>(sample_points(r, samples, seed));
  LieModel m;
  m.name = std::string(to_string(r));
  m.generators.assign(kAllGenerators.begin(), kAllGenerators.end());
  m.bracket_defect = [r, points](const Coeffs6& u, const Coeffs6& v, const Coeffs6& rhs) {
    return field_defect(bracket(combination(r, u), combination(r, v)), combination(r, rhs), *points);
  };
  return m;
}

SignLedger commutator_ledger(const LieModel& model, double tol) {
  SignLedger ledger;
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
      const GeneratorId a = model.generators[i], b = model.generators[j];
      ledger.entries.push_back(match(bracket_label(a, b), model, unit(a), unit(b), reference_commutator(a, b), tol));
    }
  }
  return ledger;
}

SignLedger structure_table(Realization r, double tol) {
  SignLedger ledger = commutator_ledger(vector_field_model(r), tol);
  for (const auto& e : ledger.entries) {
    if (e.sign == 0) {
      std::ostringstream msg;
      msg << to_string(r) << " bracket " << e.label << " matches neither sign (defect " << e.defect << ")";
      throw Error(ErrorCode::unmatched_bracket, msg.str());
    }
  }
  return ledger;
}

SignLedger documented_field_ledger() {
  SignLedger ledger;
  for (std::size_t i = 0; i < kAllGenerators.size(); ++i) {
    for (std::size_t j = i + 1; j < kAllGenerators.size(); ++j) {
      const GeneratorId a = kAllGenerators[i], b = kAllGenerators[j];
      LedgerEntry e;
      e.label = bracket_label(a, b);
      e.sign = is_translation_pair(a, b) ? -1 : 1;
      e.trivial = is_zero(reference_commutator(a, b));
      ledger.entries.push_back(std::move(e));
    }
  }
  return ledger;
}

// ---------------------------------------------------------------------------

Coeffs6 packed_generator(int mu, int nu) {
  if (mu == nu) return {};
  if (mu > nu) return cplx(-1.0) * packed_generator(nu, mu);
  const auto p = [](int m) { return unit(p_of(m)); };
  const auto q = [](int m) { return unit(q_of(m)); };
  if (mu == 0 && nu == 1) return unit(GeneratorId::s01);
  if (mu == 2 && nu == 3) return unit(GeneratorId::b);
  if (nu == 2) return cplx(0.5) * (q(mu) - p(mu));
  return cplx(-0.5) * (q(mu) + p(mu));
}

std::array<VectorField, 6> so31_pack(Realization r) {
  const auto field = [r](std::size_t k) { return combination(r, packed_generator(kPackedIndices[k][0], kPackedIndices[k][1])); };
  return {field(0), field(1), field(2), field(3), field(4), field(5)};
}

Coeffs6 lorentz_commutator(int mu, int nu, int rho, int sigma, const MetricSigns& g) {
  const auto gm = [&g](int a, int b) { return a == b ? g[static_cast<std::size_t>(a)] : 0.0; };
  Coeffs6 out{};
  out = out + cplx(gm(mu, sigma)) * packed_generator(nu, rho);
  out = out - cplx(gm(mu, rho)) * packed_generator(nu, sigma);
  out = out - cplx(gm(nu, sigma)) * packed_generator(mu, rho);
  out = out + cplx(gm(nu, rho)) * packed_generator(mu, sigma);
  return out;
}

namespace {

std::string packed_label(std::size_t k) {
  return "s" + std::to_string(kPackedIndices[k][0]) + std::to_string(kPackedIndices[k][1]);
}

int expected_sign(const LieModel& model, const SignLedger& base, const Coeffs6& u, const Coeffs6& v) {
  int expected = 0;
  bool any = false;
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
      const GeneratorId a = model.generators[i], b = model.generators[j];
      const cplx w = u[index_of(a)] * v[index_of(b)] - u[index_of(b)] * v[index_of(a)];
      if (std::abs(w) == 0.0 || is_zero(reference_commutator(a, b))) continue;
      const int s = base.sign(bracket_label(a, b));
      if (s == 0) return 0;
      if (any && s != expected) return 0;
      expected = s;
      any = true;
    }
  }
  return any ? expected : 1;
}

}  // namespace

MinkowskiResult minkowski_check(const LieModel& model, const MetricSigns& g, double tol) {
  const SignLedger base = commutator_ledger(model, tol);
  MinkowskiResult result;
  result.passed = true;
  for (std::size_t a = 0; a < kPackedIndices.size(); ++a) {
    for (std::size_t b = a + 1; b < kPackedIndices.size(); ++b) {
      const auto [mu, nu] = kPackedIndices[a];
      const auto [rho, sigma] = kPackedIndices[b];
      const Coeffs6 u = packed_generator(mu, nu);
      const Coeffs6 v = packed_generator(rho, sigma);
      const Coeffs6 rhs = lorentz_commutator(mu, nu, rho, sigma, g);
      LedgerEntry e = match("[" + packed_label(a) + "," + packed_label(b) + "]", model, u, v, rhs, tol);
      const int want = expected_sign(model, base, u, v);
      if (e.sign == 0 || (!e.trivial && e.sign != want)) result.passed = false;
      result.expected.push_back(want);
      result.ledger.entries.push_back(std::move(e));
    }
  }
  return result;
}

MinkowskiResult minkowski_check(Realization r, const MetricSigns& g, double tol) {
  return minkowski_check(vector_field_model(r), g, tol);
}

std::vector<MetricSigns> minkowski_metric_scan(const LieModel& model, double tol) {
  std::vector<MetricSigns> passing;
  for (int mask = 0; mask < 16; ++mask) {
    MetricSigns g;
    for (std::size_t k = 0; k < 4; ++k) g[k] = (mask >> k) & 1 ? -1.0 : 1.0;
    if (minkowski_check(model, g, tol).passed) passing.push_back(g);
  }
  return passing;
}

// ---------------------------------------------------------------------------

cplx act(GeneratorId g, cplx alpha, const ChartPoint& p) {
  validate(p);
  return generator(g, realization_of(p.chart)).apply(solution_field(alpha, p.chart), to_point(p));
}

cplx eigen_rhs(GeneratorId g, cplx alpha, const ChartPoint& p) {
  switch (g) {
    case GeneratorId::b: return alpha * solve(alpha, p);
    case GeneratorId::s01: return kI * alpha * solve(alpha, p);
    case GeneratorId::p0: return alpha * solve(alpha - 1.0, p);
    case GeneratorId::p1: return kI * alpha * solve(alpha - 1.0, p);
    case GeneratorId::q0: return alpha * solve(alpha + 1.0, p);
    case GeneratorId::q1: return -kI * alpha * solve(alpha + 1.0, p);
  }
  return 0.0;
}

cplx cn(cplx v) {
  if (v == 0.0) throw Error(ErrorCode::singular, "cn is undefined at 0");
  return 0.5 * (v + 1.0 / v);
}

cplx sn(cplx v) {
  if (v == 0.0) throw Error(ErrorCode::singular, "sn is undefined at 0");
  return (v - 1.0 / v) / (2.0 * kI);
}

MinkTensor angular_tensor(cplx v) {
  const cplx c = cn(v), s = sn(v);
  return {{
      {0.0, kI, kI * s, -c},
      {-kI, 0.0, -kI * c, -s},
      {-kI * s, kI * c, 0.0, 1.0},
      {c, s, -1.0, 0.0},
  }};
}

VectorField paravector_substitute(const ScalarField& re_part, const ScalarField& im_part) {
  return VectorField(Realization::holographic, [re_part, im_part](const Jet& theta, const Jet& phi) {
    return Components{re_part(theta, phi) * tan(theta), im_part(theta, phi)};
  });
}

cplx tangent_curve(double eps, const ChartPoint& p) {
  if (p.chart != ChartId::holographic) throw Error(ErrorCode::invalid_argument, "tangent curve needs a holographic point");
  return std::exp(eps) * solve(1.0, p);
}

cplx tangent_curve_angle_form(double eps, const ChartPoint& p) {
  if (p.chart != ChartId::holographic) throw Error(ErrorCode::invalid_argument, "tangent curve needs a holographic point");
  validate(p);
  return std::sin(p.y0 + eps * std::tan(p.y0)) * std::exp(kI * p.y1);
}

}  // namespace holoconf
