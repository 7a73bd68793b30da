#pragma once

#include <Eigen/Core>
#include <array>
#include <span>

#include "kleinfv/params.hpp"

namespace kfv {

/// The eight FV components at one point; psi_k of the physics notation is
/// element k - 1. Elements 0..3 form the xi sector, 4..7 the eta sector.
using EightSpinor = Eigen::Matrix<cplx, 8, 1>;
using FVMatrix = Eigen::Matrix<cplx, 8, 8>;
using Pauli = Eigen::Matrix<cplx, 2, 2>;

/// Value and x-derivative of a spinor field at one point.
struct SpinorJet {
  EightSpinor value = EightSpinor::Zero();
  EightSpinor dx = EightSpinor::Zero();
};

namespace matrices {

Pauli identity2();
Pauli tau1();
Pauli tau2();
Pauli tau3();
/// Weyl-representation gamma^0: off-diagonal 2x2 identity blocks.
Eigen::Matrix4cd gamma0();

/// tau3 (x) gamma0, metric of the indefinite inner product.
const FVMatrix& tau4();
/// tau1 (x) (tau3 (x) 1_2), density matrix.
const FVMatrix& tau5();
/// 1_2 (x) (tau3 + i tau2) (x) 1_2, current operator; nilpotent.
const FVMatrix& ocur();
/// tau1 (x) gamma0, the matrix part of charge conjugation.
const FVMatrix& charge_matrix();

/// Largest deviation over the identities tau4^2 = tau5^2 = C^2 = 1, O^2 = 0
/// and hermiticity of tau4, tau5.
double identity_defect();

}  // namespace matrices

template <typename A, typename B>
auto kron(const A& lhs, const B& rhs) {
  constexpr int rows = int(A::RowsAtCompileTime) * int(B::RowsAtCompileTime);
  constexpr int cols = int(A::ColsAtCompileTime) * int(B::ColsAtCompileTime);
  Eigen::Matrix<cplx, rows, cols> out;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j)
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs.template cast<cplx>();
  return out;
}

/// rho = psi^dagger tau5 psi. Real, either sign.
double density(const EightSpinor& psi);

/// One-dimensional current at A = 0:
/// j = (1/2im) [psibar O psi' - psibar' O psi], psibar = psi^dagger tau5.
double current(const EightSpinor& psi, const EightSpinor& dpsi_dx, double m);
inline double current(const SpinorJet& jet, double m) { return current(jet.value, jet.dx, m); }

enum class ConjugationReading {
  kMatrixOnly,  // psi_c = (tau1 (x) gamma0) psi
  kAntilinear   // psi_c = (tau1 (x) gamma0) conj(psi)
};

/// Charge conjugate. The default reading keeps rho_c = -rho and j_c = j; the
/// antilinear one flips the sign of j as well.
EightSpinor charge_conjugate(const EightSpinor& psi, ConjugationReading reading = ConjugationReading::kMatrixOnly);

/// Trapezoidal quadrature of psi_a^dagger tau4 psi_b over a common grid.
/// GridMismatch on unequal sizes, fewer than two nodes or a non-increasing grid.
cplx inner_product(std::span<const EightSpinor> psi_a, std::span<const EightSpinor> psi_b,
                   std::span<const double> grid);

struct KGSpinor {
  std::array<cplx, 4> phi{};
  /// max_k |(E - V) phi_k - (m / sqrt2)(psi_j - psi_{j+2})| / max|psi|
  double consistency_residual = 0.0;
};

/// (j, k) pairs of the FV transformation, 1-based as in the physics notation.
inline constexpr std::array<std::pair<int, int>, 4> kFvPairs = {{{1, 1}, {2, 2}, {5, 3}, {6, 4}}};

/// phi_k = (psi_j + psi_{j+2}) / sqrt2 plus the stationary consistency check
/// against (E - V) phi_k = (m / sqrt2)(psi_j - psi_{j+2}).
KGSpinor fv_reconstruct(const EightSpinor& psi, double E, double m, double potential);

/// 2x2 step matching matrix [[1 - u/2E, u/2E], [u/2E, 1 - u/2E]].
Eigen::Matrix2d boundary_matrix(double E, double u);

}  // namespace kfv
