#include "kleinfv/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace kfv {

void VerifyReport::add(std::string name, double residual, double tolerance) {
  checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

const CheckEntry* VerifyReport::find(const std::string& name) const {
  for (const CheckEntry& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

BoundaryReport check_boundary(const StepSolution& step, double tolerance) {
  const PhysicalParams& p = step.params();
  const DerivedParams& d = step.derived();
  BoundaryReport out;
  const SpinorJet left = step.jet_at_origin(Side::kLeft);
  const SpinorJet right = step.jet_at_origin(Side::kRight);
  out.left = left.value;
  out.right = right.value;
  out.charge_ratio = (p.E - p.u) / p.E;

  const double scale = std::max({left.value.cwiseAbs().maxCoeff(), right.value.cwiseAbs().maxCoeff(), 1e-300});
  const Eigen::Matrix2d M = boundary_matrix(p.E, p.u);

  for (int j : {1, 2, 5, 6}) {
    const Eigen::Vector2cd before(out.left(j - 1), out.left(j + 1));
    const Eigen::Vector2cd after(out.right(j - 1), out.right(j + 1));
    const double res = (M.cast<cplx>() * before - after).cwiseAbs().maxCoeff() / scale;
    out.report.add("bound1[j=" + std::to_string(j) + "]", res, tolerance);
  }

  auto sums = [](const EightSpinor& psi) {
    const cplx first = psi(0) + psi(1) + psi(4) + psi(5);
    const cplx second = psi(2) + psi(3) + psi(6) + psi(7);
    return Eigen::Vector2cd(first, second);
  };
  const Eigen::Vector2cd I_left = sums(out.left);
  const Eigen::Vector2cd I_right = sums(out.right);
  out.report.add("ss1", std::abs((I_right(0) + I_right(1)) - (I_left(0) + I_left(1))) / scale, tolerance);
  out.report.add("ss3", std::abs((I_right(0) - I_right(1)) - out.charge_ratio * (I_left(0) - I_left(1))) / scale,
                 tolerance);
  out.report.add("SSI", (M.cast<cplx>() * I_left - I_right).cwiseAbs().maxCoeff() / scale, tolerance);

  out.rho_left = density(out.left);
  out.rho_right = density(out.right);
  out.report.add("charge", std::abs(out.rho_right - out.charge_ratio * out.rho_left) / (scale * scale), tolerance);

  out.j_left = current(left, p.m);
  out.j_right = current(right, p.m);
  const double k_scale = std::max(d.k1, std::abs(d.k2)) / p.m;
  out.report.add("current", std::abs(out.j_right - out.j_left) / (scale * scale * k_scale), tolerance);

  out.pair_creation = out.rho_left * out.rho_right < 0.0;
  return out;
}

}  // namespace kfv
