#pragma once

#include <vector>

#include "kleinfv/fv_algebra.hpp"
#include "kleinfv/params.hpp"
#include "kleinfv/smooth.hpp"

namespace kfv {

/// Signed reflection/transmission pair of the step formulas. At the
/// resonance k2 = -k1 the signed T can come out negative, so |T| is kept
/// alongside and the case is flagged.
struct StepRT {
  double R = 0.0;
  double T = 0.0;
  double T_abs = 0.0;
  bool resonance = false;
};

/// Step-barrier R and T for real k2 != 0, exactly as the closed forms give:
///   k2 > 0: R = [(k1-k2)^2 - u^2] / [(k1+k2)^2 - u^2], T = 4 k1 k2 / [(k1+k2)^2 - u^2]
///   k2 < 0: R = [(k1+k2)^2 - u^2] / [(k1-k2)^2 - u^2], T = 4 k1 k2 / [(k1-k2)^2 - u^2]
/// ThresholdError on a vanishing denominator.
StepRT step_rt(double k1, double k2, double u);

/// The same formulas with the spin term u^2 dropped (spin-0 particle).
StepRT step_rt_spin0(double k1, double k2);

/// r -> 0 limits of the Gamma-ratio amplitudes:
/// A_s = (k1 - k2 - u)/2k1, B_s = (k1 + k2 + u)/2k1,
/// A_d = (k1 - k2 + u)/2k1, B_d = (k1 + k2 - u)/2k1.
/// R, T from step_rt (R1, Klein zone) or R = 1, T = 0 (total reflection).
ScatterCoefficients step_coeffs(const PhysicalParams& params, const DerivedParams& derived);

enum class Side { kLeft, kRight };

/// Piecewise plane-wave solution of the sharp step.
class StepSolution {
 public:
  /// params.r is ignored; k1, k2 come from derive() with r = 0.
  explicit StepSolution(const PhysicalParams& params, const DeriveOptions& options = {});

  const PhysicalParams& params() const { return params_; }
  const DerivedParams& derived() const { return derived_; }
  const ScatterCoefficients& coefficients() const { return coeffs_; }

  /// Basis values / derivatives at x on the requested side of the step; for
  /// x != 0 the side is implied by the sign of x.
  BasisValues basis(double x, Side side) const;
  BasisValues basis_dx(double x, Side side) const;

  /// Spinor at x; x == 0 evaluates the right-hand limit.
  EightSpinor spinor(double x) const;
  SpinorJet spinor_jet(double x) const;

  /// One-sided limits psi(0-) and psi(0+).
  EightSpinor spinor_at_origin(Side side) const;
  SpinorJet jet_at_origin(Side side) const;

 private:
  struct BasisJets {
    BasisValues value;
    BasisValues dx;
  };
  BasisJets basis_jets(double x, Side side) const;
  SpinorJet jet(double x, Side side) const;

  PhysicalParams params_;
  DerivedParams derived_;
  ScatterCoefficients coeffs_;
};

struct LimitRow {
  double r = 0.0;
  double R_smooth = 0.0;
  double T_smooth = 0.0;
  double R_err = 0.0;
  double T_err = 0.0;
  /// |A_s(r) - A_s(0)|, |B_s(r) - B_s(0)|, |A_d(r) - A_d(0)|, |B_d(r) - B_d(0)|
  std::array<double, 4> coeff_err{};
};

struct LimitTable {
  std::vector<LimitRow> rows;
  /// Reference values from the limit amplitudes through the same flux formulas
  /// as the smooth rows (identical to the step_rt values for k2 > 0).
  double R_step = 0.0;
  double T_step = 0.0;
  /// R_err strictly decreasing along the rows (ties allowed below 1e-14).
  bool monotone = false;
};

/// Smooth-barrier coefficients along a decreasing sequence of r compared with
/// their r -> 0 limits. DomainError unless r_sequence is strictly decreasing
/// and positive.
LimitTable limit_convergence(const PhysicalParams& params, const std::vector<double>& r_sequence,
                             const DeriveOptions& options = {});

}  // namespace kfv
