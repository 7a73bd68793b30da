#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kleinfv/boundary.hpp"
#include "kleinfv/fv_algebra.hpp"
#include "kleinfv/params.hpp"

namespace kfv {

using ScalarField = std::function<cplx(double)>;
using SpinorField = std::function<EightSpinor(double)>;

/// f'' + [(E - V)^2 - m^2 + s i V'] f = 0 with s = +1, -1, or the V' term dropped.
/// kPlus governs psi_xi^s and psi_eta^d, kMinus psi_xi^d and psi_eta^s.
enum class SectorEquation { kPlus, kMinus, kSpin0 };

/// Central second-difference stencils of order 2, 4 and 6.
enum class FdScheme { kCentral3, kCentral5, kCentral7 };

struct ResidualOptions {
  FdScheme scheme = FdScheme::kCentral7;
  /// Finite-difference step, independent of the grid spacing; 0 picks
  /// 0.03 min(r, 1 / k_max).
  double fd_step = 0.0;
  /// Second-order Richardson check (h vs h/2) before the main evaluation.
  bool richardson_check = true;
  /// Coarse step for that check; 0 picks min(1e-2, 0.1 / k_max).
  double richardson_step = 0.0;
  std::size_t min_points = 201;
};

struct ResidualReport {
  /// max |residual| / max |field| over the grid.
  double max_residual = 0.0;
  /// res(h) / res(h/2) from the Richardson check, 0 when skipped.
  double richardson_ratio = 0.0;
};

/// Uniform grid of `points` nodes on [x_min, x_max].
std::vector<double> uniform_grid(double x_min, double x_max, std::size_t points);

/// Symmetric grid on [-X, X] with X from asymptotic_extent().
std::vector<double> oracle_grid(const PhysicalParams& params, const DerivedParams& derived,
                                std::size_t points = 401);

/// Finite-difference residual of the second-order sector equation.
/// GridTooCoarse if the Richardson ratio is off from 4 by more than 10x.
ResidualReport ode_residual(const ScalarField& f, SectorEquation equation, const PhysicalParams& params,
                            const std::vector<double>& grid, const ResidualOptions& options = {});

/// Residual of the eight coupled first-order-in-time equations: the xi block
/// (components 1-4) carries -i V', the eta block (5-8) +i V'.
ResidualReport coupled_residual(const SpinorField& psi, const PhysicalParams& params,
                                const std::vector<double>& grid, const ResidualOptions& options = {});

struct IntegrationOptions {
  double tolerance = 1e-10;
  double min_step = 1e-12;
  std::size_t max_steps = 2'000'000;
  SectorEquation equation = SectorEquation::kPlus;
};

struct ScalarSamples {
  std::vector<double> x;
  std::vector<cplx> f;
  std::vector<cplx> df;
};

/// Adaptive Dormand-Prince 5(4) integration of the sector equation from
/// x_start leftwards to x_end, starting from the transmitted wave
/// f = exp(i k2 x_start), f' = i k2 f (a decaying exponential when k2 is
/// imaginary). Samples on n_steps + 1 equally spaced points, x_start first.
/// StepUnderflow when the step size collapses.
ScalarSamples integrate_backward(const PhysicalParams& params, const DerivedParams& derived, double x_start,
                                 double x_end, std::size_t n_steps, const IntegrationOptions& options = {});

struct PlaneWaveFit {
  cplx A;  // exp(-i k x) amplitude
  cplx B;  // exp(+i k x) amplitude
};

/// Two-point fit f = A exp(-i k x) + B exp(i k x) from (f, f') at x.
PlaneWaveFit fit_plane_wave(double x, cplx f, cplx df, double k);

/// max |a - b| / max |b| after scaling a by b/a at index `align`.
double aligned_deviation(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t align = 0);

struct OracleSuiteOptions {
  double residual_tolerance = 1e-6;
  double rk_tolerance = 1e-6;
  double flux_tolerance = 1e-6;
  double identity_tolerance = 1e-8;
  std::size_t grid_points = 401;
  std::size_t rk_steps = 400;
  SeriesOptions series;
};

/// Oracle checks of the smooth solution at params (r > 0):
///   ode[xi_s|xi_d|eta_s|eta_d]  sector equation residuals
///   coupled                     eight-component system residual
///   rk[xi_s]                    backward integration vs the analytic psi_xi^s
///   flux                        spread of j(x) over the grid relative to max|psi|^2 k / m
///   identity                    R + T - 1 or R - T - 1
/// DomainError for r == 0.
VerifyReport oracle_suite(const PhysicalParams& params, const OracleSuiteOptions& options = {});

}  // namespace kfv
