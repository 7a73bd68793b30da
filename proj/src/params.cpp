#include "kleinfv/params.hpp"

#include <cmath>
#include <sstream>

#include "kleinfv/errors.hpp"

namespace kfv {

std::string_view regime_name(EnergyRegime regime) {
  switch (regime) {
    case EnergyRegime::kTransmission:
      return "R1";
    case EnergyRegime::kTotalReflection:
      return "R2";
    case EnergyRegime::kKlein:
      return "R3";
    case EnergyRegime::kSubBarrierInvalid:
      break;
  }
  return "invalid";
}

void validate(const PhysicalParams& p) {
  if (!std::isfinite(p.m) || !std::isfinite(p.u) || !std::isfinite(p.E) || !std::isfinite(p.r))
    throw DomainError("parameters must be finite");
  if (p.m <= 0.0) throw DomainError("mass must be positive");
  if (p.u < 0.0) throw DomainError("coupling u = eV0 must be non-negative");
  if (p.r < 0.0) throw DomainError("smoothness r must be non-negative");
}

namespace {

void check_threshold(double E, double point, double tol, const char* name) {
  const double scale = std::max({std::abs(E), std::abs(point), 1e-300});
  if (std::abs(E - point) <= tol * scale) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy E = " << E << " is on the threshold " << name << " = " << point;
    throw ThresholdError(msg.str());
  }
}

}  // namespace

EnergyRegime classify(double m, double u, double E, double exclusion_tol) {
  if (!(m > 0.0)) throw DomainError("mass must be positive");
  if (!(u >= 0.0)) throw DomainError("coupling u = eV0 must be non-negative");
  check_threshold(E, m, exclusion_tol, "m");
  check_threshold(E, u - m, exclusion_tol, "u - m");
  check_threshold(E, u + m, exclusion_tol, "u + m");
  if (E <= m) return EnergyRegime::kSubBarrierInvalid;
  if (E > u + m) return EnergyRegime::kTransmission;
  if (E > u - m) return EnergyRegime::kTotalReflection;
  return EnergyRegime::kKlein;
}

DerivedParams derive(const PhysicalParams& p, const DeriveOptions& options) {
  validate(p);
  DerivedParams d;
  d.regime = classify(p.m, p.u, p.E, options.exclusion_tol);
  if (d.regime == EnergyRegime::kSubBarrierInvalid)
    throw DomainError("energy must exceed the mass (E > m)");

  d.k1 = std::sqrt((p.E - p.m) * (p.E + p.m));
  const double w = p.E - p.u;
  const double k2sq = (w - p.m) * (w + p.m);
  switch (d.regime) {
    case EnergyRegime::kTransmission:
      d.k2 = std::sqrt(k2sq);
      break;
    case EnergyRegime::kKlein:
      d.k2 = options.klein_negative_k2 ? -std::sqrt(k2sq) : std::sqrt(k2sq);
      break;
    default:
      // Positive imaginary part: e^{i k2 x} decays to the right.
      d.k2 = cplx(0.0, std::sqrt(-k2sq));
      break;
  }
  d.mu = -kI * p.r * d.k1;
  d.nu = -kI * p.r * d.k2;
  d.v1 = cplx(1.0, 2.0 * p.r * p.u);
  d.v2 = cplx(1.0, -2.0 * p.r * p.u);
  return d;
}

DerivedParams derive_spin0(const PhysicalParams& p, const DeriveOptions& options) {
  DerivedParams d = derive(p, options);
  const double ru = p.r * p.u;
  const cplx v = std::sqrt(cplx(1.0 - 4.0 * ru * ru, 0.0));
  d.v1 = v;
  d.v2 = v;
  return d;
}

}  // namespace kfv
