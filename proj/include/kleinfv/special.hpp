#pragma once

#include <initializer_list>

#include "kleinfv/params.hpp"

namespace kfv {

/// A point of the unit interval carried together with its complement and the
/// logarithms of both. Far out on either side of the barrier one of y, 1 - y
/// underflows, while the logarithms stay exact; everything downstream works
/// from the logarithms when it raises to complex powers.
struct UnitArg {
  double y = 0.0;
  double y_c = 1.0;       // 1 - y
  double log_y = 0.0;     // may be -inf when y == 0
  double log_y_c = 0.0;

  static UnitArg from_y(double y);
  /// y(x) = (1 - tanh(x / 2r)) / 2 evaluated without cancellation.
  static UnitArg from_position(double x, double r);
};

struct HypParams {
  cplx a;
  cplx b;
  cplx c;
  double y = 0.0;
};

struct SeriesOptions {
  long max_terms = 1'000'000;
  double eps = 1e-16;
  /// Connection formula is refused when c - a - b is this close to an integer.
  double degenerate_tol = 1e-10;
};

/// log Gamma(z), with exp(log_gamma(z)) == Gamma(z). Lanczos approximation
/// (g = 607/128, 15 terms) on Re z >= 1/2 and the reflection formula below.
/// Throws PoleError within 1e-13 of a non-positive integer.
cplx log_gamma(cplx z);

cplx gamma(cplx z);

/// True when z is within tol of 0, -1, -2, ...
bool is_gamma_pole(cplx z, double tol = 1e-13);

/// prod Gamma(num) / prod Gamma(den) through log-Gamma sums. A pole in the
/// denominator makes the ratio exactly zero; a pole in the numerator throws
/// PoleError.
cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den);

/// Gauss hypergeometric 2F1(a, b; c; y) for 0 <= y < 1. Power series for
/// y <= 1/2, two series in 1 - y joined by the connection formula above.
cplx hyp2f1(const HypParams& p, const SeriesOptions& options = {});
cplx hyp2f1(cplx a, cplx b, cplx c, const UnitArg& arg, const SeriesOptions& options = {});

/// d/dy 2F1(a, b; c; y) = (ab/c) 2F1(a+1, b+1; c+1; y).
cplx hyp2f1_dy(cplx a, cplx b, cplx c, const UnitArg& arg, const SeriesOptions& options = {});

/// Raw power series sum_n (a)_n (b)_n / ((c)_n n!) y^n with the three-small-terms
/// stopping rule. Exposed for tests; hyp2f1 is the public evaluator.
cplx hyp2f1_power_series(cplx a, cplx b, cplx c, double y, const SeriesOptions& options = {});

/// w(y) = y^p (1-y)^q 2F1(a, b; c; y) and y(1-y) dw/dy, both assembled in log
/// space; finite at either end of the unit interval.
/// For y > 1/2 the connection formula splits w into two weighted series in 1 - y.
struct WeightedHyp {
  cplx value;
  cplx y_dy;
};

WeightedHyp weighted_hyp2f1(cplx p, cplx q, cplx a, cplx b, cplx c, const UnitArg& arg,
                            const SeriesOptions& options = {});

struct ConnectionCoeffs {
  cplx A;  // Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
  cplx B;  // Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b))
};

/// Prefactors of the y <-> 1 - y connection formula. Every Gamma argument
/// (c, c-a-b, a+b-c, c-a, c-b, a, b) must avoid the poles; PoleError names the
/// first offender.
ConnectionCoeffs connection_coeffs(cplx a, cplx b, cplx c);

}  // namespace kfv
