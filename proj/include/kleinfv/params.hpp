#pragma once

#include <complex>
#include <string_view>

namespace kfv {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Energy window of the scattering problem, with u the barrier height.
enum class EnergyRegime {
  kTransmission,      // E > u + m, k2 real positive
  kTotalReflection,   // u - m < E < u + m, k2 imaginary
  kKlein,             // m < E < u - m, k2 real negative
  kSubBarrierInvalid  // E <= m
};

std::string_view regime_name(EnergyRegime regime);

/// Physical inputs in natural units (hbar = c = 1). The coupling u stands
/// for the product e*V0. r = 0 selects the sharp step.
struct PhysicalParams {
  double m = 1.0;
  double u = 0.0;
  double E = 2.0;
  double r = 0.0;
  // Amplitudes of the xi (C1, D1) and eta (C2, D2) sector solutions.
  cplx C1{1.0, 0.0};
  cplx D1{1.0, 0.0};
  cplx C2{1.0, 0.0};
  cplx D2{1.0, 0.0};

  bool is_step() const { return r == 0.0; }
};

struct DeriveOptions {
  /// Relative distance from {m, u - m, u + m} below which E is rejected.
  double exclusion_tol = 1e-12;
  /// Take k2 < 0 in the Klein zone. Setting this to false uses the positive root.
  bool klein_negative_k2 = true;
};

struct DerivedParams {
  double k1 = 0.0;
  cplx k2;
  cplx mu;
  cplx nu;
  cplx v1;
  cplx v2;
  EnergyRegime regime = EnergyRegime::kSubBarrierInvalid;

  bool k2_is_real() const { return regime != EnergyRegime::kTotalReflection; }
};

/// Regime of (m, u, E). Throws ThresholdError within tolerance of an
/// interval endpoint and DomainError for m <= 0 or u < 0.
EnergyRegime classify(double m, double u, double E, double exclusion_tol = 1e-12);

/// All derived spectral quantities. Throws DomainError for E <= m, r < 0 or
/// m <= 0 and ThresholdError near E in {m, u - m, u + m}.
DerivedParams derive(const PhysicalParams& params, const DeriveOptions& options = {});

/// Same as derive() but with the spin coupling removed from v1, v2:
/// v1 = v2 = sqrt(1 - 4 r^2 u^2), which turns both sector equations into the
/// spin-0 one.
DerivedParams derive_spin0(const PhysicalParams& params, const DeriveOptions& options = {});

/// Validates m > 0, u >= 0, r >= 0 and finite inputs.
void validate(const PhysicalParams& params);

}  // namespace kfv
