#pragma once

#include <string>
#include <vector>

#include "kleinfv/step.hpp"

namespace kfv {

struct CheckEntry {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Named residuals of a verification run; failures are entries, not exceptions.
struct VerifyReport {
  std::vector<CheckEntry> checks;

  void add(std::string name, double residual, double tolerance);
  bool all_pass() const;
  const CheckEntry* find(const std::string& name) const;
};

/// Step matching data at x = 0.
struct BoundaryReport {
  VerifyReport report;
  EightSpinor left = EightSpinor::Zero();   // psi(0-)
  EightSpinor right = EightSpinor::Zero();  // psi(0+)
  double rho_left = 0.0;
  double rho_right = 0.0;
  double j_left = 0.0;
  double j_right = 0.0;
  /// (E - u) / E, the predicted rho(0+) / rho(0-).
  double charge_ratio = 0.0;
  /// rho(0+) and rho(0-) of opposite sign.
  bool pair_creation = false;
};

inline constexpr double kBoundaryTolerance = 1e-10;

/// Checks the FV matching conditions on the analytic one-sided limits of the
/// step spinor:
///   bound1[j]  M(E,u) (psi_j, psi_{j+2})(0-) = (psi_j, psi_{j+2})(0+), j = 1, 2, 5, 6
///   ss1        psi_I + psi_II continuous
///   ss3        psi_I - psi_II jumps by (E - u)/E
///   SSI        the same pair in matrix form
///   charge     rho(0+) = (E - u)/E rho(0-)
///   current    j(0+) = j(0-)
/// Residuals are relative to max|psi(0+-)| (squared for rho, times k/m for j).
BoundaryReport check_boundary(const StepSolution& step, double tolerance = kBoundaryTolerance);

}  // namespace kfv
