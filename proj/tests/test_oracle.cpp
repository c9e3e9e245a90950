#include <doctest.h>

#include <cmath>
#include <random>

#include "gaqc/oracle.hpp"
#include "gaqc/rotors.hpp"
#include "test_util.hpp"

using namespace gaqc;
using gaqc::testing::random_su2;
using gaqc::testing::urand;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("gate matrices") {
  const double alpha = 0.417;
  const ComplexMatrix z = gate_matrix(Gate{GateTag::ZPower, alpha});
  CHECK(std::abs(z(0, 0) - cplx{1, 0}) == 0.0);
  CHECK(std::abs(z(0, 1)) == 0.0);
  CHECK(std::abs(z(1, 1) - std::exp(cplx{0, kPi * alpha})) == 0.0);

  const ComplexMatrix h = gate_matrix(Gate{GateTag::H});
  const ComplexMatrix s1 = pauli_matrix(1);
  const ComplexMatrix s3 = pauli_matrix(3);
  CHECK(max_abs(h - (1.0 / std::sqrt(2.0)) * (s1 + s3)) == 0.0);
  CHECK(max_abs(gate_matrix(Gate{GateTag::Rotation, 0.0}) - ComplexMatrix::identity(2)) == 0.0);

  // operator identities used throughout
  CHECK(max_abs(h * s1 * h - s3) < 1e-15);
  CHECK(max_abs(h * s3 * h - s1) < 1e-15);
  CHECK(max_abs(h * h - ComplexMatrix::identity(2)) < 1e-15);
  const ComplexMatrix t = gate_matrix(Gate{GateTag::T});
  const ComplexMatrix s = gate_matrix(Gate{GateTag::S});
  CHECK(max_abs(t * t - s) < 1e-15);
  CHECK(max_abs(s * s - s3) < 1e-15);
}

TEST_CASE("kronecker lifting is position-correct") {
  const Gate x0{GateTag::X, 0.0, 0};
  const Gate z1{GateTag::Z, 0.0, 1};
  const ComplexMatrix lx = lift_gate(x0, 2);
  const ComplexMatrix lz = lift_gate(z1, 2);
  CHECK(max_abs(lx - kron(pauli_matrix(1), ComplexMatrix::identity(2))) == 0.0);
  CHECK(max_abs(lz - kron(ComplexMatrix::identity(2), pauli_matrix(3))) == 0.0);
  CHECK(max_abs(lx * lz - lz * lx) == 0.0);

  // cnot with swapped roles equals the conjugated canonical form
  const ComplexMatrix sw = gate_matrix(Gate{GateTag::Swap, 0.0, 0, 1});
  const ComplexMatrix cn = gate_matrix(Gate{GateTag::Cnot, 0.0, 0, 1});
  CHECK(max_abs(lift_gate(Gate{GateTag::Cnot, 0.0, 1, 0}, 2) - sw * cn * sw) == 0.0);
}

TEST_CASE("statevector runs") {
  StateVec in = basis_statevec("10");
  const Circuit c{2, {Gate{GateTag::Cnot, 0.0, 0, 1}}};
  const StateVec out = run_statevector(c, in);
  CHECK(std::abs(out.amp[3] - cplx{1, 0}) == 0.0);
  CHECK(std::abs(out.amp[0]) + std::abs(out.amp[1]) + std::abs(out.amp[2]) == 0.0);

  const Circuit bell{2, {Gate{GateTag::H, 0.0, 0}, Gate{GateTag::Cnot, 0.0, 0, 1}}};
  const StateVec b = run_statevector(bell, basis_statevec("00"));
  CHECK(std::abs(b.amp[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(b.amp[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(b.amp[1]) + std::abs(b.amp[2]) == 0.0);

  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    const int n = 1 + (it & 1);
    const Circuit rc = gaqc::testing::random_circuit(n, 15, rng);
    const SpinorVec s = gaqc::testing::random_spinor(n, rng);
    const StateVec res = run_statevector(rc, StateVec{n, s.amp});
    double norm2 = 0.0;
    for (const auto& z : res.amp) norm2 += std::norm(z);
    CHECK(std::abs(norm2 - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(run_statevector(c, basis_statevec("0")), std::invalid_argument);
}

TEST_CASE("deutsch gate") {
  const ComplexMatrix d1 = deutsch_gate(1.0);
  CHECK(std::abs(d1(6, 7) - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(d1(7, 6) - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(d1(6, 6)) < 1e-15);
  CHECK(std::abs(d1(7, 7)) < 1e-15);
  for (int r = 0; r < 6; ++r) CHECK(std::abs(d1(r, r) - cplx{1, 0}) == 0.0);

  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it)
    CHECK(deutsch_gate(urand(rng, -4, 4)).is_unitary(1e-12));
}

TEST_CASE("barenco gate") {
  const ComplexMatrix id = barenco_gate(0.913, 0.0, 0.0);
  CHECK(max_abs(id - ComplexMatrix::identity(4)) == 0.0);

  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it)
    CHECK(barenco_gate(urand(rng, -4, 4), urand(rng, -4, 4), urand(rng, -4, 4))
              .is_unitary(1e-12));
}

TEST_CASE("hermitian eigenvalues via jacobi") {
  for (int k = 1; k <= 3; ++k) {
    auto eig = hermitian_eigenvalues(pauli_matrix(k));
    std::sort(eig.begin(), eig.end());
    CHECK(std::abs(eig[0] + 1.0) < 1e-14);
    CHECK(std::abs(eig[1] - 1.0) < 1e-14);
  }

  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    ComplexMatrix a(2, 2);
    a(0, 0) = urand(rng);
    a(1, 1) = urand(rng);
    a(0, 1) = cplx{urand(rng), urand(rng)};
    a(1, 0) = std::conj(a(0, 1));
    auto eig = hermitian_eigenvalues(a);
    const double tr = (a(0, 0) + a(1, 1)).real();
    const double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    std::sort(eig.begin(), eig.end());
    CHECK(std::abs(eig[0] - (tr / 2.0 - disc)) < 1e-12);
    CHECK(std::abs(eig[1] - (tr / 2.0 + disc)) < 1e-12);
  }
}

TEST_CASE("approximation error") {
  std::mt19937 rng(13);
  const ComplexMatrix u = random_su2(rng);
  CHECK(approx_error(u, u) == 0.0);

  const ComplexMatrix id = ComplexMatrix::identity(2);
  CHECK(std::abs(approx_error(id, cplx{-1, 0} * id) - 2.0) < 1e-12);

  for (int it = 0; it < 20; ++it) {
    const ComplexMatrix a = random_su2(rng);
    const ComplexMatrix b = random_su2(rng);
    CHECK(std::abs(approx_error(a, b) - approx_error(b, a)) < 1e-12);
  }

  CHECK_THROWS_AS(approx_error(id, ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("phase-quotient approximation error") {
  std::mt19937 rng(17);
  for (int it = 0; it < 10; ++it) {
    const ComplexMatrix u = random_su2(rng);
    const double phi = urand(rng, -3, 3);
    CHECK(approx_error_phase_min(u, std::exp(cplx{0, phi}) * u) < 1e-9);
  }
  // matches the sign-quotiented rotor metric on SU(2)
  for (int it = 0; it < 10; ++it) {
    const Rotor a = gaqc::testing::random_rotor(rng);
    const Rotor b = gaqc::testing::random_rotor(rng);
    const double mat = approx_error_phase_min(su2_from_rotor(a), su2_from_rotor(b));
    CHECK(std::abs(mat - rotor_distance(a, b)) < 1e-8);
  }
}
