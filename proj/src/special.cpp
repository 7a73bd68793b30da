#include "kleinfv/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kleinfv/errors.hpp"

namespace kfv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

std::string describe(cplx z) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return out.str();
}

// log sin(pi z); the real part of z is reduced by an exact integer shift first.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const double n = std::nearbyint(z.real());
  const cplx f(z.real() - n, z.imag());
  const cplx sign_shift = (std::fmod(std::abs(n), 2.0) == 1.0) ? cplx(0.0, kPi) : cplx(0.0, 0.0);
  if (f.imag() < 1.0) return std::log(std::sin(kPi * f)) + sign_shift;
  // sin(pi f) = e^{-i pi f} (e^{2 i pi f} - 1) / (2i), |e^{2 i pi f}| < 1
  const cplx e = std::exp(2.0 * kI * kPi * f);
  return -kI * kPi * f + std::log((e - 1.0) / (2.0 * kI)) + sign_shift;
}

cplx log_gamma_lanczos(cplx z) {
  const cplx zm1 = z - 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
  const cplx t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

bool near_integer(cplx z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::nearbyint(z.real())) <= tol;
}

}  // namespace

UnitArg UnitArg::from_y(double y) {
  UnitArg arg;
  arg.y = y;
  arg.y_c = 1.0 - y;
  arg.log_y = std::log(y);
  arg.log_y_c = std::log1p(-y);
  return arg;
}

UnitArg UnitArg::from_position(double x, double r) {
  const double t = x / r;
  UnitArg arg;
  arg.log_y = -softplus(t);
  arg.log_y_c = -softplus(-t);
  arg.y = std::exp(arg.log_y);
  arg.y_c = std::exp(arg.log_y_c);
  return arg;
}

bool is_gamma_pole(cplx z, double tol) { return z.real() < 0.5 && near_integer(z, tol); }

cplx log_gamma(cplx z) {
  if (is_gamma_pole(z)) throw PoleError("Gamma pole at z = " + describe(z));
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  for (const cplx& z : den)
    if (is_gamma_pole(z)) return {0.0, 0.0};
  cplx acc{0.0, 0.0};
  for (const cplx& z : num) acc += log_gamma(z);
  for (const cplx& z : den) acc -= log_gamma(z);
  return std::exp(acc);
}

cplx hyp2f1_power_series(cplx a, cplx b, cplx c, double y, const SeriesOptions& options) {
  cplx sum{1.0, 0.0};
  cplx term{1.0, 0.0};
  int small_run = 0;
  for (long n = 0; n < options.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * y;
    sum += term;
    if (std::abs(term) < options.eps * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  std::ostringstream msg;
  msg << "2F1 series did not converge within " << options.max_terms << " terms (y = " << y << ")";
  throw NonConvergence(msg.str());
}

cplx hyp2f1(cplx a, cplx b, cplx c, const UnitArg& arg, const SeriesOptions& options) {
  if (!(arg.y >= 0.0) || !(arg.y_c > 0.0)) throw DomainError("2F1 argument must satisfy 0 <= y < 1");
  if (is_gamma_pole(c)) throw PoleError("2F1 with c at a Gamma pole, c = " + describe(c));
  if (arg.y <= 0.5) return hyp2f1_power_series(a, b, c, arg.y, options);

  const cplx s = c - a - b;
  if (near_integer(s, options.degenerate_tol))
    throw DegenerateParams("connection formula needs c - a - b off the integers, got " + describe(s));
  const cplx A = gamma_ratio({c, s}, {c - a, c - b});
  const cplx B = gamma_ratio({c, -s}, {a, b});
  cplx value{0.0, 0.0};
  if (A != 0.0) value += A * hyp2f1_power_series(a, b, 1.0 - s, arg.y_c, options);
  if (B != 0.0) value += B * std::exp(s * arg.log_y_c) * hyp2f1_power_series(c - a, c - b, s + 1.0, arg.y_c, options);
  return value;
}

WeightedHyp weighted_hyp2f1(cplx p, cplx q, cplx a, cplx b, cplx c, const UnitArg& arg,
                            const SeriesOptions& options) {
  // y or 1 - y may underflow to zero; the logarithms must not.
  if (!std::isfinite(arg.log_y) || !std::isfinite(arg.log_y_c)) throw DomainError("weighted 2F1 needs 0 < y < 1");
  if (is_gamma_pole(c)) throw PoleError("2F1 with c at a Gamma pole, c = " + describe(c));
  const double log_yyc = arg.log_y + arg.log_y_c;
  WeightedHyp out{{0.0, 0.0}, {0.0, 0.0}};
  if (arg.y <= 0.5) {
    const cplx weight = std::exp(p * arg.log_y + q * arg.log_y_c);
    const cplx f = hyp2f1_power_series(a, b, c, arg.y, options);
    const cplx df = a * b / c * hyp2f1_power_series(a + 1.0, b + 1.0, c + 1.0, arg.y, options);
    out.value = weight * f;
    out.y_dy = out.value * (p * arg.y_c - q * arg.y) + std::exp(p * arg.log_y + q * arg.log_y_c + log_yyc) * df;
    return out;
  }

  const cplx s = c - a - b;
  if (near_integer(s, options.degenerate_tol))
    throw DegenerateParams("connection formula needs c - a - b off the integers, got " + describe(s));
  // Each piece is coef * y^p (1-y)^qj G(1-y); d/dy G(1-y) = -G'(1-y).
  auto add_piece = [&](cplx coef, cplx qj, cplx ga, cplx gb, cplx gc) {
    if (coef == 0.0) return;
    const cplx log_weight = p * arg.log_y + qj * arg.log_y_c;
    const cplx g = hyp2f1_power_series(ga, gb, gc, arg.y_c, options);
    const cplx dg = ga * gb / gc * hyp2f1_power_series(ga + 1.0, gb + 1.0, gc + 1.0, arg.y_c, options);
    const cplx value = coef * std::exp(log_weight) * g;
    out.value += value;
    out.y_dy += value * (p * arg.y_c - qj * arg.y) - coef * std::exp(log_weight + log_yyc) * dg;
  };
  add_piece(gamma_ratio({c, s}, {c - a, c - b}), q, a, b, 1.0 - s);
  add_piece(gamma_ratio({c, -s}, {a, b}), q + s, c - a, c - b, s + 1.0);
  return out;
}

cplx hyp2f1(const HypParams& p, const SeriesOptions& options) {
  return hyp2f1(p.a, p.b, p.c, UnitArg::from_y(p.y), options);
}

cplx hyp2f1_dy(cplx a, cplx b, cplx c, const UnitArg& arg, const SeriesOptions& options) {
  return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, arg, options);
}

ConnectionCoeffs connection_coeffs(cplx a, cplx b, cplx c) {
  const cplx s = c - a - b;
  const std::array<std::pair<const char*, cplx>, 7> args = {{{"c", c},
                                                             {"c-a-b", s},
                                                             {"a+b-c", -s},
                                                             {"c-a", c - a},
                                                             {"c-b", c - b},
                                                             {"a", a},
                                                             {"b", b}}};
  for (const auto& [name, z] : args)
    if (is_gamma_pole(z)) throw PoleError(std::string("connection coefficient: Gamma(") + name + ") at pole " + describe(z));
  ConnectionCoeffs out;
  out.A = std::exp(log_gamma(c) + log_gamma(s) - log_gamma(c - a) - log_gamma(c - b));
  out.B = std::exp(log_gamma(c) + log_gamma(-s) - log_gamma(a) - log_gamma(b));
  return out;
}

}  // namespace kfv
