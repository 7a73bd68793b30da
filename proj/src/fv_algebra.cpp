#include "kleinfv/fv_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "kleinfv/errors.hpp"

namespace kfv {

namespace matrices {

Pauli identity2() { return Pauli::Identity(); }

Pauli tau1() {
  Pauli t;
  t << 0.0, 1.0, 1.0, 0.0;
  return t;
}

Pauli tau2() {
  Pauli t;
  t << 0.0, -kI, kI, 0.0;
  return t;
}

Pauli tau3() {
  Pauli t;
  t << 1.0, 0.0, 0.0, -1.0;
  return t;
}

Eigen::Matrix4cd gamma0() { return kron(tau1(), identity2()); }

namespace {

struct Table {
  FVMatrix tau4;
  FVMatrix tau5;
  FVMatrix ocur;
  FVMatrix charge;
};

double compute_defect(const Table& t) {
  const FVMatrix one = FVMatrix::Identity();
  double worst = 0.0;
  worst = std::max(worst, (t.tau4 * t.tau4 - one).cwiseAbs().maxCoeff());
  worst = std::max(worst, (t.tau5 * t.tau5 - one).cwiseAbs().maxCoeff());
  worst = std::max(worst, (t.charge * t.charge - one).cwiseAbs().maxCoeff());
  worst = std::max(worst, (t.ocur * t.ocur).cwiseAbs().maxCoeff());
  worst = std::max(worst, (t.tau4 - t.tau4.adjoint()).cwiseAbs().maxCoeff());
  worst = std::max(worst, (t.tau5 - t.tau5.adjoint()).cwiseAbs().maxCoeff());
  return worst;
}

const Table& table() {
  static const Table t = [] {
    Table built;
    built.tau4 = kron(tau3(), gamma0());
    built.tau5 = kron(tau1(), kron(tau3(), identity2()));
    const Pauli nilpotent = tau3() + kI * tau2();
    built.ocur = kron(identity2(), kron(nilpotent, identity2()));
    built.charge = kron(tau1(), gamma0());
    if (compute_defect(built) != 0.0) throw std::logic_error("FV matrix identities violated");
    return built;
  }();
  return t;
}

}  // namespace

const FVMatrix& tau4() { return table().tau4; }
const FVMatrix& tau5() { return table().tau5; }
const FVMatrix& ocur() { return table().ocur; }
const FVMatrix& charge_matrix() { return table().charge; }
double identity_defect() { return compute_defect(table()); }

}  // namespace matrices

double density(const EightSpinor& psi) { return (psi.adjoint() * matrices::tau5() * psi)(0, 0).real(); }

double current(const EightSpinor& psi, const EightSpinor& dpsi_dx, double m) {
  const FVMatrix& metric = matrices::tau5();
  const FVMatrix& o = matrices::ocur();
  const cplx forward = (psi.adjoint() * metric * o * dpsi_dx)(0, 0);
  const cplx backward = (dpsi_dx.adjoint() * metric * o * psi)(0, 0);
  // The bracket is purely imaginary; dividing by 2i leaves a real number.
  return ((forward - backward) / (2.0 * kI * m)).real();
}

EightSpinor charge_conjugate(const EightSpinor& psi, ConjugationReading reading) {
  if (reading == ConjugationReading::kAntilinear) return matrices::charge_matrix() * psi.conjugate();
  return matrices::charge_matrix() * psi;
}

cplx inner_product(std::span<const EightSpinor> psi_a, std::span<const EightSpinor> psi_b,
                   std::span<const double> grid) {
  if (psi_a.size() != grid.size() || psi_b.size() != grid.size())
    throw GridMismatch("inner_product: spinor samples and grid differ in length");
  if (grid.size() < 2) throw GridMismatch("inner_product: need at least two grid nodes");
  const FVMatrix& metric = matrices::tau4();
  cplx total{0.0, 0.0};
  cplx prev = (psi_a[0].adjoint() * metric * psi_b[0])(0, 0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double h = grid[i] - grid[i - 1];
    if (!(h > 0.0)) throw GridMismatch("inner_product: grid must be strictly increasing");
    const cplx next = (psi_a[i].adjoint() * metric * psi_b[i])(0, 0);
    total += 0.5 * h * (prev + next);
    prev = next;
  }
  return total;
}

KGSpinor fv_reconstruct(const EightSpinor& psi, double E, double m, double potential) {
  KGSpinor out;
  const double root2 = std::sqrt(2.0);
  double worst = 0.0;
  for (const auto& [j, k] : kFvPairs) {
    const cplx upper = psi(j - 1);
    const cplx lower = psi(j + 1);
    out.phi[k - 1] = (upper + lower) / root2;
    worst = std::max(worst, std::abs((E - potential) * out.phi[k - 1] - m / root2 * (upper - lower)));
  }
  const double scale = psi.cwiseAbs().maxCoeff();
  out.consistency_residual = scale > 0.0 ? worst / scale : worst;
  return out;
}

Eigen::Matrix2d boundary_matrix(double E, double u) {
  const double off = u / (2.0 * E);
  Eigen::Matrix2d M;
  M << 1.0 - off, off, off, 1.0 - off;
  return M;
}

}  // namespace kfv
