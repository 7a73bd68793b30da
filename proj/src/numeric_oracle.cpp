#include "kleinfv/numeric_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "kleinfv/errors.hpp"
#include "kleinfv/smooth.hpp"

namespace kfv {

namespace {

double sector_sign(SectorEquation eq) {
  switch (eq) {
    case SectorEquation::kPlus:
      return 1.0;
    case SectorEquation::kMinus:
      return -1.0;
    case SectorEquation::kSpin0:
      break;
  }
  return 0.0;
}

cplx potential_term(double x, SectorEquation eq, const PhysicalParams& p) {
  const double w = p.E - potential_at(x, p);
  return w * w - p.m * p.m + sector_sign(eq) * kI * potential_slope(x, p);
}

template <typename T, typename F>
T second_derivative(const F& f, double x, double h, FdScheme scheme) {
  if (scheme == FdScheme::kCentral3) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  if (scheme == FdScheme::kCentral7)
    return (2.0 * (f(x + 3.0 * h) + f(x - 3.0 * h)) - 27.0 * (f(x + 2.0 * h) + f(x - 2.0 * h)) +
            270.0 * (f(x + h) + f(x - h)) - 490.0 * f(x)) /
           (180.0 * h * h);
  return (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h);
}

void check_grid(const std::vector<double>& grid, const ResidualOptions& opts) {
  if (grid.size() < opts.min_points)
    throw DomainError("residual grid needs at least " + std::to_string(opts.min_points) + " points, got " +
                      std::to_string(grid.size()));
  if (opts.fd_step < 0.0) throw DomainError("finite-difference step must be non-negative");
}

double k_max(const PhysicalParams& p) {
  const double a = std::abs(p.E);
  const double b = std::abs(p.E - p.u);
  return std::sqrt(std::max(a * a, b * b) + p.m * p.m) + (p.is_step() ? 0.0 : std::sqrt(std::abs(p.u) / p.r));
}

// max over the grid of residual_at(x, h, scheme), over max |norm_at(x)|.
template <typename R, typename N>
double max_relative(const std::vector<double>& grid, double h, FdScheme scheme, const R& residual_at,
                    const N& norm_at) {
  double worst = 0.0;
  double norm = 0.0;
  for (double x : grid) {
    worst = std::max(worst, residual_at(x, h, scheme));
    norm = std::max(norm, norm_at(x));
  }
  return norm > 0.0 ? worst / norm : worst;
}

template <typename R, typename N>
ResidualReport run_residual(const std::vector<double>& grid, const PhysicalParams& p, const ResidualOptions& opts,
                            const R& residual_at, const N& norm_at) {
  check_grid(grid, opts);
  ResidualReport out;
  if (opts.richardson_check) {
    const double h = opts.richardson_step > 0.0 ? opts.richardson_step : std::min(1e-2, 0.1 / k_max(p));
    const double coarse = max_relative(grid, h, FdScheme::kCentral3, residual_at, norm_at);
    const double fine = max_relative(grid, 0.5 * h, FdScheme::kCentral3, residual_at, norm_at);
    // Skip when both sit at round-off: nothing to resolve.
    if (coarse > 1e-11 && fine > 0.0) {
      out.richardson_ratio = coarse / fine;
      const double disagreement = out.richardson_ratio / 4.0;
      if (disagreement > 10.0 || disagreement < 0.1)
        throw GridTooCoarse("Richardson ratio " + std::to_string(out.richardson_ratio) + " at h = " +
                            std::to_string(h) + " is off from 4 by more than 10x");
    }
  }
  double h = opts.fd_step;
  if (h == 0.0) h = 0.03 * (p.is_step() ? 1.0 / k_max(p) : std::min(p.r, 1.0 / k_max(p)));
  out.max_residual = max_relative(grid, h, opts.scheme, residual_at, norm_at);
  return out;
}

}  // namespace

std::vector<double> uniform_grid(double x_min, double x_max, std::size_t points) {
  if (points < 2) throw DomainError("uniform grid needs at least 2 points");
  if (!(x_max > x_min)) throw DomainError("uniform grid needs x_max > x_min");
  std::vector<double> grid(points);
  const double h = (x_max - x_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = x_min + h * static_cast<double>(i);
  grid.back() = x_max;
  return grid;
}

std::vector<double> oracle_grid(const PhysicalParams& params, const DerivedParams& derived, std::size_t points) {
  const double X = asymptotic_extent(params, derived);
  return uniform_grid(-X, X, points);
}

ResidualReport ode_residual(const ScalarField& f, SectorEquation equation, const PhysicalParams& p,
                            const std::vector<double>& grid, const ResidualOptions& opts) {
  auto residual_at = [&](double x, double h, FdScheme scheme) {
    const cplx d2 = second_derivative<cplx>(f, x, h, scheme);
    return std::abs(d2 + potential_term(x, equation, p) * f(x));
  };
  auto norm_at = [&](double x) { return std::abs(f(x)); };
  return run_residual(grid, p, opts, residual_at, norm_at);
}

ResidualReport coupled_residual(const SpinorField& psi, const PhysicalParams& p, const std::vector<double>& grid,
                                const ResidualOptions& opts) {
  const double m = p.m;
  auto residual_at = [&](double x, double h, FdScheme scheme) {
    const EightSpinor s = psi(x);
    const EightSpinor d2 = second_derivative<EightSpinor>(psi, x, h, scheme);
    const double v = potential_at(x, p);
    const double slope = potential_slope(x, p);
    const double upper = 2.0 * m * m + 2.0 * m * v - 2.0 * m * p.E;
    const double lower = 2.0 * m * m - 2.0 * m * v + 2.0 * m * p.E;
    double worst = 0.0;
    for (int block = 0; block < 2; ++block) {
      const int o = 4 * block;
      const cplx coupling = (block == 0 ? -1.0 : 1.0) * kI * slope;
      const std::array<cplx, 4> eqs = {
          -d2(o) + upper * s(o) - d2(o + 2) + coupling * (s(o + 1) + s(o + 3)),
          -d2(o + 1) + upper * s(o + 1) - d2(o + 3) + coupling * (s(o) + s(o + 2)),
          -d2(o) - d2(o + 2) + lower * s(o + 2) + coupling * (s(o + 1) + s(o + 3)),
          -d2(o + 1) - d2(o + 3) + lower * s(o + 3) + coupling * (s(o) + s(o + 2)),
      };
      for (const cplx& e : eqs) worst = std::max(worst, std::abs(e));
    }
    return worst;
  };
  auto norm_at = [&](double x) { return psi(x).cwiseAbs().maxCoeff(); };
  return run_residual(grid, p, opts, residual_at, norm_at);
}

namespace {

struct State {
  cplx f;
  cplx g;
};

State rhs(double x, const State& s, SectorEquation eq, const PhysicalParams& p) {
  return {s.g, -potential_term(x, eq, p) * s.f};
}

State axpy(const State& s, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = s;
  for (const auto& [c, k] : terms) {
    out.f += h * c * k->f;
    out.g += h * c * k->g;
  }
  return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

}  // namespace

ScalarSamples integrate_backward(const PhysicalParams& p, const DerivedParams& d, double x_start, double x_end,
                                 std::size_t n_steps, const IntegrationOptions& opts) {
  if (!(x_end < x_start)) throw DomainError("backward integration needs x_end < x_start");
  if (n_steps == 0) throw DomainError("backward integration needs n_steps >= 1");

  const cplx ik2 = kI * d.k2;
  State y{std::exp(ik2 * x_start), ik2 * std::exp(ik2 * x_start)};
  const double floor = std::abs(y.f) + std::abs(y.g);

  ScalarSamples out;
  out.x.reserve(n_steps + 1);
  out.x.push_back(x_start);
  out.f.push_back(y.f);
  out.df.push_back(y.g);

  const double span = x_start - x_end;
  double h = -std::min(1e-2, span / static_cast<double>(n_steps));
  double x = x_start;
  std::size_t steps = 0;

  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double target = i == n_steps ? x_end : x_start - span * static_cast<double>(i) / static_cast<double>(n_steps);
    while (x > target) {
      if (++steps > opts.max_steps) throw StepUnderflow("backward integration exceeded the step budget");
      const bool last = x + h <= target;
      const double step = last ? target - x : h;
      if (std::abs(step) < opts.min_step && !last)
        throw StepUnderflow("step size fell below " + std::to_string(opts.min_step) + " at x = " + std::to_string(x));

      const State k1 = rhs(x, y, opts.equation, p);
      const State k2 = rhs(x + c2 * step, axpy(y, step, {{a21, &k1}}), opts.equation, p);
      const State k3 = rhs(x + c3 * step, axpy(y, step, {{a31, &k1}, {a32, &k2}}), opts.equation, p);
      const State k4 = rhs(x + c4 * step, axpy(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}), opts.equation, p);
      const State k5 =
          rhs(x + c5 * step, axpy(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), opts.equation, p);
      const State k6 = rhs(x + step, axpy(y, step, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}),
                           opts.equation, p);
      const State next = axpy(y, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      const State k7 = rhs(x + step, next, opts.equation, p);
      const State err = axpy({0.0, 0.0}, step, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

      const double scale = opts.tolerance * (floor + std::max(std::abs(y.f) + std::abs(y.g),
                                                              std::abs(next.f) + std::abs(next.g)));
      const double ratio = (std::abs(err.f) + std::abs(err.g)) / scale;
      if (ratio <= 1.0) {
        x = last ? target : x + step;
        y = next;
      }
      const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
      if (!last || ratio > 1.0) h = step * factor;
      if (std::abs(h) < opts.min_step)
        throw StepUnderflow("step size fell below " + std::to_string(opts.min_step) + " at x = " + std::to_string(x));
    }
    out.x.push_back(target);
    out.f.push_back(y.f);
    out.df.push_back(y.g);
  }
  return out;
}

PlaneWaveFit fit_plane_wave(double x, cplx f, cplx df, double k) {
  if (!(k > 0.0)) throw DomainError("plane-wave fit needs k > 0");
  const cplx ik = kI * k;
  return {(ik * f - df) / (2.0 * ik) * std::exp(ik * x), (ik * f + df) / (2.0 * ik) * std::exp(-ik * x)};
}

double aligned_deviation(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t align) {
  if (a.size() != b.size() || a.empty()) throw GridMismatch("aligned_deviation needs equal, non-empty samples");
  if (align >= a.size()) throw DomainError("alignment index out of range");
  if (a[align] == 0.0) throw DomainError("cannot align on a zero sample");
  const cplx phase = b[align] / a[align];
  double worst = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(phase * a[i] - b[i]));
    norm = std::max(norm, std::abs(b[i]));
  }
  return worst / norm;
}

VerifyReport oracle_suite(const PhysicalParams& p, const OracleSuiteOptions& opts) {
  if (p.is_step()) throw DomainError("oracle_suite: needs a smooth barrier (r > 0)");
  const SmoothSolution s(p, DeriveOptions{}, opts.series);
  const DerivedParams& d = s.derived();
  const std::vector<double> grid = oracle_grid(p, d, opts.grid_points);
  VerifyReport report;

  const std::pair<cplx BasisValues::*, SectorEquation> sectors[] = {
      {&BasisValues::xi_s, SectorEquation::kPlus},
      {&BasisValues::xi_d, SectorEquation::kMinus},
      {&BasisValues::eta_s, SectorEquation::kMinus},
      {&BasisValues::eta_d, SectorEquation::kPlus},
  };
  const char* names[] = {"ode[xi_s]", "ode[xi_d]", "ode[eta_s]", "ode[eta_d]"};
  for (int i = 0; i < 4; ++i) {
    const auto field = sectors[i].first;
    const ScalarField f = [&s, field](double x) { return s.basis_at(x).*field; };
    report.add(names[i], ode_residual(f, sectors[i].second, p, grid).max_residual, opts.residual_tolerance);
  }
  report.add("coupled", coupled_residual([&s](double x) { return s.spinor(x); }, p, grid).max_residual,
             opts.residual_tolerance);

  const double X = asymptotic_extent(p, d);
  const double x_start = d.k2_is_real() ? X : std::min(X, 10.0 / d.k2.imag());
  if (p.C1 != 0.0) {
    const ScalarSamples rk = integrate_backward(p, d, x_start, -X, opts.rk_steps);
    std::vector<cplx> exact;
    exact.reserve(rk.x.size());
    for (double x : rk.x) exact.push_back(s.basis_at(x).xi_s / p.C1);
    report.add("rk[xi_s]", aligned_deviation(rk.f, exact), opts.rk_tolerance);
  }

  double j_min = 0.0, j_max = 0.0, psi_max = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const SpinorJet jet = s.spinor_jet(grid[i]);
    const double j = current(jet, p.m);
    j_min = i == 0 ? j : std::min(j_min, j);
    j_max = i == 0 ? j : std::max(j_max, j);
    psi_max = std::max(psi_max, jet.value.cwiseAbs().maxCoeff());
  }
  const double k = std::max(d.k1, std::abs(d.k2));
  const double j_scale = psi_max * psi_max * k / p.m;
  report.add("flux", j_scale > 0.0 ? (j_max - j_min) / j_scale : 0.0, opts.flux_tolerance);

  report.add("identity", std::abs(s.coefficients().identity_residual()), opts.identity_tolerance);
  return report;
}

}  // namespace kfv
