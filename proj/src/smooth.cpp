#include "kleinfv/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kleinfv/errors.hpp"

namespace kfv {

double ScatterCoefficients::identity_residual() const {
  if (regime == EnergyRegime::kKlein) return R - T - 1.0;
  return R + T - 1.0;
}

double potential_at(double x, const PhysicalParams& p) {
  if (p.is_step()) return x >= 0.0 ? p.u : 0.0;
  return 0.5 * p.u * (1.0 + std::tanh(x / (2.0 * p.r)));
}

double potential_slope(double x, const PhysicalParams& p) {
  if (p.is_step()) return 0.0;
  const double sech = 1.0 / std::cosh(x / (2.0 * p.r));
  return p.u / (4.0 * p.r) * sech * sech;
}

double map_y(double x, double r) { return UnitArg::from_position(x, r).y; }

FluxTerms flux_terms(const ScatterCoefficients& c) {
  return {2.0 * (std::conj(c.A_s) * c.A_d).real(), 2.0 * (std::conj(c.B_s) * c.B_d).real()};
}

FluxRT flux_rt(const ScatterCoefficients& c, const DerivedParams& d) {
  if (!d.k2_is_real()) throw RegimeError("transmission needs a real k2; total reflection has T = 0 by definition");
  const FluxTerms f = flux_terms(c);
  const double incident = std::abs(f.b_term);
  return {std::abs(f.a_term) / incident, 2.0 * d.k2.real() / d.k1 / incident};
}

ScatterCoefficients asymptotic_coeffs(const PhysicalParams& p, const DerivedParams& d) {
  if (!(p.r > 0.0)) throw DomainError("Gamma-ratio coefficients need r > 0; use step_coeffs for the step");
  const cplx mu = d.mu;
  const cplx nu = d.nu;
  const cplx c = 2.0 * nu + 1.0;
  ScatterCoefficients out;
  out.regime = d.regime;
  out.A_s = gamma_ratio({c, -2.0 * mu}, {nu - mu + 0.5 + d.v1 / 2.0, nu - mu + 0.5 - d.v1 / 2.0});
  out.B_s = gamma_ratio({c, 2.0 * mu}, {mu + nu + 0.5 - d.v1 / 2.0, mu + nu + 0.5 + d.v1 / 2.0});
  out.A_d = gamma_ratio({c, -2.0 * mu}, {nu - mu + 0.5 - d.v2 / 2.0, nu - mu + 0.5 + d.v2 / 2.0});
  out.B_d = gamma_ratio({c, 2.0 * mu}, {mu + nu + 0.5 + d.v2 / 2.0, mu + nu + 0.5 - d.v2 / 2.0});
  if (d.k2_is_real()) {
    const FluxRT rt = flux_rt(out, d);
    out.R = rt.R;
    out.T = rt.T;
  } else {
    out.R = 1.0;
    out.T = 0.0;
  }
  return out;
}

double asymptotic_extent(const PhysicalParams& p, const DerivedParams& d) {
  return 10.0 * std::max(p.r, 2.0 * std::numbers::pi / d.k1);
}

EightSpinor assemble_spinor(const BasisValues& b, double E, double m, double potential) {
  const double w = (E - potential) / m;
  const double plus = 0.25 * (1.0 + w);
  const double minus = 0.25 * (1.0 - w);
  const cplx xi_sum = b.xi_s + b.xi_d;
  const cplx xi_diff = b.xi_s - b.xi_d;
  const cplx eta_sum = b.eta_s + b.eta_d;
  const cplx eta_diff = b.eta_s - b.eta_d;
  EightSpinor psi;
  psi << plus * xi_sum, plus * xi_diff, minus * xi_sum, minus * xi_diff, plus * eta_sum, plus * eta_diff,
      minus * eta_sum, minus * eta_diff;
  return psi;
}

EightSpinor assemble_spinor_dx(const BasisValues& b, const BasisValues& db, double E, double m, double potential,
                               double slope) {
  // d/dx of (1/4)(1 +/- (E - eV)/m) is -/+ eV' / 4m.
  const double dw = -slope / (4.0 * m);
  EightSpinor psi = assemble_spinor(db, E, m, potential);
  const cplx xi_sum = b.xi_s + b.xi_d;
  const cplx xi_diff = b.xi_s - b.xi_d;
  const cplx eta_sum = b.eta_s + b.eta_d;
  const cplx eta_diff = b.eta_s - b.eta_d;
  EightSpinor extra;
  extra << dw * xi_sum, dw * xi_diff, -dw * xi_sum, -dw * xi_diff, dw * eta_sum, dw * eta_diff, -dw * eta_sum,
      -dw * eta_diff;
  return psi + extra;
}

SmoothSolution::SmoothSolution(const PhysicalParams& params, const DeriveOptions& derive_options,
                               const SeriesOptions& series)
    : SmoothSolution(params, derive(params, derive_options), series) {}

SmoothSolution::SmoothSolution(const PhysicalParams& params, const DerivedParams& derived,
                               const SeriesOptions& series)
    : params_(params), derived_(derived), series_(series) {
  if (!(params_.r > 0.0)) throw DomainError("smooth solution needs r > 0");
}

SmoothSolution SmoothSolution::spin0(const PhysicalParams& params, const DeriveOptions& derive_options,
                                     const SeriesOptions& series) {
  return SmoothSolution(params, derive_spin0(params, derive_options), series);
}

std::array<cplx, 3> SmoothSolution::v1_set() const {
  const cplx base = derived_.mu + derived_.nu + 0.5;
  return {base - derived_.v1 / 2.0, base + derived_.v1 / 2.0, 1.0 + 2.0 * derived_.nu};
}

std::array<cplx, 3> SmoothSolution::v2_set() const {
  const cplx base = derived_.mu + derived_.nu + 0.5;
  return {base + derived_.v2 / 2.0, base - derived_.v2 / 2.0, 1.0 + 2.0 * derived_.nu};
}

SmoothSolution::Jets SmoothSolution::jets(double x) const {
  const UnitArg arg = UnitArg::from_position(x, params_.r);
  const auto [a1, b1, c1] = v1_set();
  const auto [a2, b2, c2] = v2_set();
  const WeightedHyp w1 = weighted_hyp2f1(derived_.nu, derived_.mu, a1, b1, c1, arg, series_);
  const WeightedHyp w2 = weighted_hyp2f1(derived_.nu, derived_.mu, a2, b2, c2, arg, series_);
  // dy/dx = -y(1-y)/r
  const double scale = -1.0 / params_.r;
  Jets out;
  out.value = {params_.C1 * w1.value, params_.D1 * w2.value, params_.C2 * w2.value, params_.D2 * w1.value};
  out.dx = {scale * params_.C1 * w1.y_dy, scale * params_.D1 * w2.y_dy, scale * params_.C2 * w2.y_dy,
            scale * params_.D2 * w1.y_dy};
  return out;
}

BasisValues SmoothSolution::basis(const UnitArg& arg) const {
  const auto [a1, b1, c1] = v1_set();
  const auto [a2, b2, c2] = v2_set();
  const cplx f1 = weighted_hyp2f1(derived_.nu, derived_.mu, a1, b1, c1, arg, series_).value;
  const cplx f2 = weighted_hyp2f1(derived_.nu, derived_.mu, a2, b2, c2, arg, series_).value;
  return {params_.C1 * f1, params_.D1 * f2, params_.C2 * f2, params_.D2 * f1};
}

BasisValues SmoothSolution::basis_dx(double x) const { return jets(x).dx; }

EightSpinor SmoothSolution::spinor(double x) const {
  return assemble_spinor(basis_at(x), params_.E, params_.m, potential_at(x, params_));
}

SpinorJet SmoothSolution::spinor_jet(double x) const {
  const Jets j = jets(x);
  const double v = potential_at(x, params_);
  SpinorJet out;
  out.value = assemble_spinor(j.value, params_.E, params_.m, v);
  out.dx = assemble_spinor_dx(j.value, j.dx, params_.E, params_.m, v, potential_slope(x, params_));
  return out;
}

ScatterCoefficients SmoothSolution::coefficients() const { return asymptotic_coeffs(params_, derived_); }

}  // namespace kfv
