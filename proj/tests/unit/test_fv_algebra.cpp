#include <doctest.h>

#include <cmath>
#include <vector>

#include "generators.hpp"
#include "kleinfv/errors.hpp"
#include "kleinfv/fv_algebra.hpp"
#include "kleinfv/smooth.hpp"
#include "kleinfv/step.hpp"

using namespace kfv;
using kfv::testing::Gen;

namespace {

double max_abs(const FVMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("fv_algebra") {

TEST_CASE("matrix identities") {
  using namespace kfv::matrices;
  const FVMatrix one = FVMatrix::Identity();
  CHECK(max_abs(tau4() * tau4() - one) == 0.0);
  CHECK(max_abs(tau5() * tau5() - one) == 0.0);
  CHECK(max_abs(ocur() * ocur()) == 0.0);
  CHECK(max_abs(charge_matrix() * charge_matrix() - one) == 0.0);
  CHECK(max_abs(tau4() - tau4().adjoint()) == 0.0);
  CHECK(max_abs(tau5() - tau5().adjoint()) == 0.0);
  CHECK(identity_defect() == 0.0);
  CHECK(ocur() != FVMatrix::Zero());
}

TEST_CASE("gamma0 is the Weyl block matrix") {
  const Eigen::Matrix4cd g = matrices::gamma0();
  CHECK(g.block<2, 2>(0, 2) == Pauli::Identity());
  CHECK(g.block<2, 2>(2, 0) == Pauli::Identity());
  CHECK(g.block<2, 2>(0, 0) == Pauli::Zero());
}

TEST_CASE("kron dimensions and entries") {
  const auto k = kron(matrices::tau3(), matrices::tau1());
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == cplx(1.0));
  CHECK(k(2, 3) == cplx(-1.0));
  CHECK(k(0, 0) == cplx(0.0));
}

TEST_CASE("density") {
  CHECK(density(EightSpinor::Zero()) == 0.0);
  Gen gen(0xde75);
  for (int i = 0; i < 100; ++i) {
    const EightSpinor psi = gen.spinor();
    const cplx raw = (psi.adjoint() * matrices::tau5() * psi)(0, 0);
    CHECK(std::abs(raw.imag()) <= 1e-14 * psi.squaredNorm());
  }
}

TEST_CASE("property: charge conjugation on random spinors") {
  Gen gen(0xc0c0);
  for (int i = 0; i < 200; ++i) {
    const EightSpinor psi = gen.spinor();
    const EightSpinor dpsi = gen.spinor();
    const double m = gen.uniform(0.5, 2.0);
    const double scale = psi.squaredNorm() + psi.norm() * dpsi.norm();
    const EightSpinor pc = charge_conjugate(psi);
    const EightSpinor dpc = charge_conjugate(dpsi);
    CHECK((charge_conjugate(pc) - psi).cwiseAbs().maxCoeff() <= 1e-12 * psi.norm());
    CHECK(std::abs(density(pc) + density(psi)) <= 1e-12 * scale);
    CHECK(std::abs(current(pc, dpc, m) - current(psi, dpsi, m)) <= 1e-12 * scale / m);
  }
}

TEST_CASE("the antilinear reading flips the current instead") {
  Gen gen(0xa471);
  const EightSpinor psi = gen.spinor();
  const EightSpinor dpsi = gen.spinor();
  const auto c = ConjugationReading::kAntilinear;
  const EightSpinor pc = charge_conjugate(psi, c);
  CHECK((charge_conjugate(pc, c) - psi).cwiseAbs().maxCoeff() <= 1e-14 * psi.norm());
  CHECK(density(pc) == doctest::Approx(-density(psi)));
  CHECK(current(pc, charge_conjugate(dpsi, c), 1.0) == doctest::Approx(-current(psi, dpsi, 1.0)));
}

TEST_CASE("current preserved on step spinors") {
  Gen gen(0x57e9);
  for (int i = 0; i < 30; ++i) {
    PhysicalParams p = gen.params(gen.regime());
    gen.amplitudes(p);
    const StepSolution step(p);
    for (double x : {-1.3, 0.7}) {
      const SpinorJet jet = step.spinor_jet(x);
      const double j = current(jet, p.m);
      const double jc = current(charge_conjugate(jet.value), charge_conjugate(jet.dx), p.m);
      CHECK(std::abs(jc - j) <= 1e-10 * std::max(1.0, std::abs(j)));
    }
  }
}

TEST_CASE("transmitted plane wave carries 2 k2 / m") {
  const PhysicalParams p{.m = 1.3, .u = 4, .E = 6.5};
  const StepSolution step(p);
  const double k2 = step.derived().k2.real();
  CHECK(current(step.spinor_jet(2.0), p.m) == doctest::Approx(2.0 * k2 / p.m).epsilon(1e-13));

  const PhysicalParams evanescent{.m = 1, .u = 4, .E = 4.5};
  CHECK(std::abs(current(StepSolution(evanescent).spinor_jet(0.5), 1.0)) < 1e-14);
}

TEST_CASE("inner product signs and symmetry") {
  const std::vector<double> grid = [] {
    std::vector<double> g;
    for (int i = 0; i <= 400; ++i) g.push_back(-8.0 + 16.0 * i / 400.0);
    return g;
  }();
  // gamma0 eigenvectors with eigenvalue +1 in the upper and lower halves.
  auto gaussian = [&](int offset, cplx phase) {
    std::vector<EightSpinor> field;
    for (double x : grid) {
      EightSpinor psi = EightSpinor::Zero();
      const cplx g = phase * std::exp(-x * x);
      psi(offset) = g;
      psi(offset + 2) = g;
      psi(offset + 1) = 0.5 * g;
      psi(offset + 3) = 0.5 * g;
      field.push_back(psi);
    }
    return field;
  };
  const auto upper = gaussian(0, 1.0);
  const auto lower = gaussian(4, 1.0);
  const cplx uu = inner_product(upper, upper, grid);
  const cplx ll = inner_product(lower, lower, grid);
  CHECK(uu.real() > 0.0);
  CHECK(ll.real() < 0.0);
  CHECK(std::abs(uu.imag()) < 1e-15);
  // 2 * 1.25 * sqrt(pi / 2)
  CHECK(uu.real() == doctest::Approx(2.5 * std::sqrt(std::acos(-1.0) / 2.0)).epsilon(1e-8));

  Gen gen(0x1a7e);
  std::vector<EightSpinor> a, b;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    a.push_back(gen.spinor());
    b.push_back(gen.spinor());
  }
  CHECK(std::abs(inner_product(a, b, grid) - std::conj(inner_product(b, a, grid))) < 1e-10);

  std::vector<double> short_grid(grid.begin(), grid.end() - 1);
  CHECK_THROWS_AS(inner_product(a, b, short_grid), GridMismatch);
}

TEST_CASE("FV reconstruction") {
  const KGSpinor null = fv_reconstruct(EightSpinor::Zero(), 2.0, 1.0, 0.0);
  for (const cplx& phi : null.phi) CHECK(phi == 0.0);
  CHECK(null.consistency_residual == 0.0);

  Gen gen(0xf7f7);
  for (int i = 0; i < 50; ++i) {
    const BasisValues b{gen.complex(1), gen.complex(1), gen.complex(1), gen.complex(1)};
    const double E = gen.uniform(1.1, 8), m = gen.uniform(0.5, 1.0), v = gen.uniform(0, 6);
    const KGSpinor kg = fv_reconstruct(assemble_spinor(b, E, m, v), E, m, v);
    CHECK(kg.consistency_residual <= 1e-13 * std::max(1.0, E + v));
  }

  // KG wave function continuous across the step.
  for (int i = 0; i < 30; ++i) {
    PhysicalParams p = gen.params(gen.regime());
    gen.amplitudes(p);
    const StepSolution step(p);
    const KGSpinor left = fv_reconstruct(step.spinor_at_origin(Side::kLeft), p.E, p.m, 0.0);
    const KGSpinor right = fv_reconstruct(step.spinor_at_origin(Side::kRight), p.E, p.m, p.u);
    const double scale = step.spinor_at_origin(Side::kLeft).cwiseAbs().maxCoeff();
    for (int k = 0; k < 4; ++k) CHECK(std::abs(left.phi[k] - right.phi[k]) <= 1e-10 * scale);
    CHECK(left.consistency_residual < 1e-12 * p.E);
    CHECK(right.consistency_residual < 1e-12 * (p.E + p.u));
  }
}

TEST_CASE("boundary matrix") {
  const Eigen::Matrix2d M = boundary_matrix(3.0, 4.0);
  CHECK(M.rowwise().sum().isApprox(Eigen::Vector2d::Ones()));
  CHECK(M == M.transpose());
  CHECK(boundary_matrix(3.0, 0.0) == Eigen::Matrix2d::Identity());
  const Eigen::Matrix2d swap = boundary_matrix(2.0, 4.0);
  CHECK(swap(0, 0) == 0.0);
  CHECK(swap(0, 1) == 1.0);
}

}
