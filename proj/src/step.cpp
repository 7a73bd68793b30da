#include "kleinfv/step.hpp"

#include <cmath>

#include "kleinfv/errors.hpp"

namespace kfv {

namespace {

double checked_ratio(double num, double den, const char* what) {
  if (den == 0.0 || !std::isfinite(num / den))
    throw ThresholdError(std::string("step formula denominator vanishes (") + what + ")");
  return num / den;
}

StepRT finish(double R, double T, double k1, double k2) {
  StepRT out{R, T, std::abs(T), false};
  out.resonance = std::abs(k1 + k2) <= 1e-12 * std::abs(k1);
  return out;
}

}  // namespace

StepRT step_rt(double k1, double k2, double u) {
  if (!(k1 > 0.0)) throw DomainError("step_rt needs k1 > 0");
  if (k2 == 0.0) throw ThresholdError("step_rt needs k2 != 0 (E = u +/- m)");
  const double u2 = u * u;
  if (k2 > 0.0) {
    const double den = (k1 + k2) * (k1 + k2) - u2;
    return finish(checked_ratio((k1 - k2) * (k1 - k2) - u2, den, "(k1+k2)^2 - u^2"),
                  checked_ratio(4.0 * k1 * k2, den, "(k1+k2)^2 - u^2"), k1, k2);
  }
  const double den = (k1 - k2) * (k1 - k2) - u2;
  return finish(checked_ratio((k1 + k2) * (k1 + k2) - u2, den, "(k1-k2)^2 - u^2"),
                checked_ratio(4.0 * k1 * k2, den, "(k1-k2)^2 - u^2"), k1, k2);
}

StepRT step_rt_spin0(double k1, double k2) { return step_rt(k1, k2, 0.0); }

ScatterCoefficients step_coeffs(const PhysicalParams& p, const DerivedParams& d) {
  const double k1 = d.k1;
  const cplx k2 = d.k2;
  if (k2 == 0.0) throw ThresholdError("step coefficients need k2 != 0 (E = u +/- m)");
  const double two_k1 = 2.0 * k1;
  ScatterCoefficients out;
  out.regime = d.regime;
  out.A_s = (k1 - k2 - p.u) / two_k1;
  out.B_s = (k1 + k2 + p.u) / two_k1;
  out.A_d = (k1 - k2 + p.u) / two_k1;
  out.B_d = (k1 + k2 - p.u) / two_k1;
  if (d.k2_is_real()) {
    const StepRT rt = step_rt(k1, k2.real(), p.u);
    out.R = rt.R;
    out.T = rt.T;
  } else {
    out.R = 1.0;
    out.T = 0.0;
  }
  return out;
}

StepSolution::StepSolution(const PhysicalParams& params, const DeriveOptions& options) : params_(params) {
  params_.r = 0.0;
  derived_ = derive(params_, options);
  coeffs_ = step_coeffs(params_, derived_);
}

StepSolution::BasisJets StepSolution::basis_jets(double x, Side side) const {
  const PhysicalParams& p = params_;
  BasisJets out;
  if (side == Side::kLeft) {
    const cplx ik1 = kI * derived_.k1;
    const cplx em = std::exp(-ik1 * x);
    const cplx ep = std::exp(ik1 * x);
    auto wave = [&](cplx amp, cplx a, cplx b, cplx& value, cplx& slope) {
      value = amp * (a * em + b * ep);
      slope = amp * ik1 * (-a * em + b * ep);
    };
    const ScatterCoefficients& c = coeffs_;
    wave(p.C1, c.A_s, c.B_s, out.value.xi_s, out.dx.xi_s);
    wave(p.D1, c.A_d, c.B_d, out.value.xi_d, out.dx.xi_d);
    wave(p.C2, c.A_d, c.B_d, out.value.eta_s, out.dx.eta_s);
    wave(p.D2, c.A_s, c.B_s, out.value.eta_d, out.dx.eta_d);
    return out;
  }
  const cplx ik2 = kI * derived_.k2;
  const cplx e2 = std::exp(ik2 * x);
  out.value = {p.C1 * e2, p.D1 * e2, p.C2 * e2, p.D2 * e2};
  out.dx = {ik2 * out.value.xi_s, ik2 * out.value.xi_d, ik2 * out.value.eta_s, ik2 * out.value.eta_d};
  return out;
}

SpinorJet StepSolution::jet(double x, Side side) const {
  const BasisJets b = basis_jets(x, side);
  const double potential = side == Side::kLeft ? 0.0 : params_.u;
  SpinorJet out;
  out.value = assemble_spinor(b.value, params_.E, params_.m, potential);
  out.dx = assemble_spinor_dx(b.value, b.dx, params_.E, params_.m, potential, 0.0);
  return out;
}

BasisValues StepSolution::basis(double x, Side side) const { return basis_jets(x, side).value; }

BasisValues StepSolution::basis_dx(double x, Side side) const { return basis_jets(x, side).dx; }

EightSpinor StepSolution::spinor(double x) const { return spinor_jet(x).value; }

SpinorJet StepSolution::spinor_jet(double x) const { return jet(x, x < 0.0 ? Side::kLeft : Side::kRight); }

EightSpinor StepSolution::spinor_at_origin(Side side) const { return jet(0.0, side).value; }

SpinorJet StepSolution::jet_at_origin(Side side) const { return jet(0.0, side); }

LimitTable limit_convergence(const PhysicalParams& params, const std::vector<double>& r_sequence,
                             const DeriveOptions& options) {
  if (r_sequence.empty()) throw DomainError("limit_convergence needs at least one r");
  for (std::size_t i = 0; i < r_sequence.size(); ++i) {
    if (!(r_sequence[i] > 0.0)) throw DomainError("limit_convergence: every r must be positive");
    if (i > 0 && !(r_sequence[i] < r_sequence[i - 1]))
      throw DomainError("limit_convergence: r sequence must be strictly decreasing");
  }

  PhysicalParams step_params = params;
  step_params.r = 0.0;
  const DerivedParams step_derived = derive(step_params, options);
  const ScatterCoefficients limit = step_coeffs(step_params, step_derived);

  LimitTable table;
  if (step_derived.k2_is_real()) {
    const FluxRT ref = flux_rt(limit, step_derived);
    table.R_step = ref.R;
    table.T_step = ref.T;
  } else {
    table.R_step = 1.0;
    table.T_step = 0.0;
  }

  for (double r : r_sequence) {
    PhysicalParams p = params;
    p.r = r;
    const DerivedParams d = derive(p, options);
    const ScatterCoefficients c = asymptotic_coeffs(p, d);
    LimitRow row;
    row.r = r;
    row.R_smooth = c.R;
    row.T_smooth = c.T;
    row.R_err = std::abs(c.R - table.R_step);
    row.T_err = std::abs(c.T - table.T_step);
    row.coeff_err = {std::abs(c.A_s - limit.A_s), std::abs(c.B_s - limit.B_s), std::abs(c.A_d - limit.A_d),
                     std::abs(c.B_d - limit.B_d)};
    table.rows.push_back(row);
  }
  // Rows already at round-off count as converged.
  constexpr double kFloor = 1e-14;
  table.monotone = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double prev = table.rows[i - 1].R_err;
    const double cur = table.rows[i].R_err;
    if (!(cur < prev) && cur > kFloor) table.monotone = false;
  }
  return table;
}

}  // namespace kfv
