#pragma once

#include "kleinfv/fv_algebra.hpp"
#include "kleinfv/params.hpp"
#include "kleinfv/special.hpp"

namespace kfv {

/// Asymptotic amplitudes on the left of the barrier,
/// psi_xi^s -> A_s e^{-i k1 x} + B_s e^{i k1 x} (and likewise with A_d, B_d),
/// with the reflection and transmission coefficients built from them.
struct ScatterCoefficients {
  cplx A_s;
  cplx B_s;
  cplx A_d;
  cplx B_d;
  double R = 0.0;
  double T = 0.0;
  EnergyRegime regime = EnergyRegime::kSubBarrierInvalid;

  /// R + T - 1 in R1 and R2, R - T - 1 in the Klein zone.
  double identity_residual() const;
};

/// eV(x) = (u/2)(1 + tanh(x / 2r)); the sharp step u*theta(x) when r == 0
/// (with theta(0) = 1).
double potential_at(double x, const PhysicalParams& params);

/// d(eV)/dx = (u / 4r) sech^2(x / 2r). Zero for the step away from x = 0.
double potential_slope(double x, const PhysicalParams& params);

/// y = (1 - tanh(x / 2r)) / 2.
double map_y(double x, double r);

/// The four scalar solutions psi_xi^s, psi_xi^d, psi_eta^s, psi_eta^d.
struct BasisValues {
  cplx xi_s;
  cplx xi_d;
  cplx eta_s;
  cplx eta_d;
};

/// Incident and reflected currents in units of k1/m:
/// b_term = B_s* B_d + B_s B_d*, a_term = A_s* A_d + A_s A_d*.
struct FluxTerms {
  double a_term = 0.0;
  double b_term = 0.0;
};
FluxTerms flux_terms(const ScatterCoefficients& c);

struct FluxRT {
  double R = 0.0;
  double T = 0.0;
};

/// R = |a_term| / |b_term|, T = (2 k2 / k1) / |b_term|. RegimeError when k2 is
/// not real.
FluxRT flux_rt(const ScatterCoefficients& c, const DerivedParams& derived);

/// Exact solution for the tanh barrier (r > 0), regular at y = 0.
class SmoothSolution {
 public:
  explicit SmoothSolution(const PhysicalParams& params, const DeriveOptions& derive_options = {},
                          const SeriesOptions& series = {});
  /// Spin coupling removed from v1, v2; both sectors then obey the spin-0 equation.
  static SmoothSolution spin0(const PhysicalParams& params, const DeriveOptions& derive_options = {},
                              const SeriesOptions& series = {});

  const PhysicalParams& params() const { return params_; }
  const DerivedParams& derived() const { return derived_; }

  /// 2F1 parameters (a, b, c) of the v1 set (psi_xi^s, psi_eta^d) and of the
  /// v2 set (psi_xi^d, psi_eta^s).
  std::array<cplx, 3> v1_set() const;
  std::array<cplx, 3> v2_set() const;

  BasisValues basis(const UnitArg& arg) const;
  BasisValues basis(double y) const { return basis(UnitArg::from_y(y)); }
  BasisValues basis_at(double x) const { return basis(UnitArg::from_position(x, params_.r)); }
  /// d/dx of the four basis functions at x.
  BasisValues basis_dx(double x) const;

  EightSpinor spinor(double x) const;
  SpinorJet spinor_jet(double x) const;
  double current_at(double x) const { return current(spinor_jet(x), params_.m); }

  ScatterCoefficients coefficients() const;

 private:
  SmoothSolution(const PhysicalParams& params, const DerivedParams& derived, const SeriesOptions& series);

  struct Jets {
    BasisValues value;
    BasisValues dx;
  };
  Jets jets(double x) const;

  PhysicalParams params_;
  DerivedParams derived_;
  SeriesOptions series_;
};

/// Gamma-ratio amplitudes A_s, B_s, A_d, B_d for the tanh barrier and the
/// resulting R, T. In the total-reflection window T = 0 and R = 1.
ScatterCoefficients asymptotic_coeffs(const PhysicalParams& params, const DerivedParams& derived);

/// |x| beyond which the solutions are treated as asymptotic: 10 max(r, 2 pi / k1).
double asymptotic_extent(const PhysicalParams& params, const DerivedParams& derived);

/// Spinor components from the sector sums and differences at a point where
/// the potential energy is eV:
/// psi_{1,3} = (1/4)[1 +/- (E - eV)/m](xi_s + xi_d) and so on.
EightSpinor assemble_spinor(const BasisValues& b, double E, double m, double potential);
/// Same for the derivative, given basis values, their x-derivatives and eV'.
EightSpinor assemble_spinor_dx(const BasisValues& b, const BasisValues& db, double E, double m, double potential,
                               double slope);

}  // namespace kfv
