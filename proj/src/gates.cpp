#include "gaqc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaqc {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_qubit(const MstaState& m, int qubit) {
  if (qubit < 0 || qubit >= m.qubits())
    throw std::invalid_argument("qubit index out of range");
}

void check_pair(const MstaState& m, int a, int b) {
  if (m.qubits() != 2)
    throw std::invalid_argument("two-qubit gate requires a 2-qubit state");
  check_qubit(m, a);
  check_qubit(m, b);
  if (a == b) throw std::invalid_argument("two-qubit gate requires distinct indices");
}

const Multivector& cached_j(int n) {
  static const Multivector j1 = complex_structure(1);
  static const Multivector j2 = complex_structure(2);
  return n == 1 ? j1 : j2;
}

const Multivector& cached_e(int n) {
  static const Multivector e1 = correlator(1);
  static const Multivector e2 = correlator(2);
  return n == 1 ? e1 : e2;
}

Multivector times_j(int n, const Multivector& m) { return gp(m, cached_j(n)); }

// Sigma_k action as a raw multivector map: sigma_k psi sigma3 for one qubit,
// -i sigma_k^a psi J for a qubit of a pair.
Multivector pauli_mv(int axis, int qubit, int n, const Multivector& m) {
  if (n == 1) return gp(gp(sigma(axis), m), sigma(3));
  return gp(-i_sigma(axis, qubit, n), times_j(n, m));
}

// Splits psi against the sigma3 eigenspaces of one qubit and rephases the
// lower half: psi+ + psi- (cos + J sin). Covers Z^alpha, R_theta, S and T.
Multivector diagonal_phase_mv(double c, double s, int qubit, int n, const Multivector& m) {
  const Multivector z = pauli_mv(3, qubit, n, m);
  const Multivector plus = (m + z) * 0.5;
  const Multivector minus = (m - z) * 0.5;
  return plus + minus * c + times_j(n, minus) * s;
}

}  // namespace

MstaState apply_pauli(int axis, int qubit, const MstaState& m) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("pauli axis must be 1, 2 or 3");
  check_qubit(m, qubit);
  return MstaState::from_mv(m.qubits(), pauli_mv(axis, qubit, m.qubits(), m.mv()));
}

MstaState apply_hadamard(int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  const int n = m.qubits();
  Multivector out(m.mv().algebra());
  if (n == 1) {
    out = gp(gp((sigma(1) + sigma(3)) * kInvSqrt2, m.mv()), sigma(3));
  } else {
    const Multivector mj = times_j(n, m.mv());
    out = gp(-(i_sigma(1, qubit, n) + i_sigma(3, qubit, n)) * kInvSqrt2, mj);
  }
  return MstaState::from_mv(n, out);
}

MstaState apply_rotation(double theta, int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  return MstaState::from_mv(
      m.qubits(),
      diagonal_phase_mv(std::cos(theta), std::sin(theta), qubit, m.qubits(), m.mv()));
}

MstaState apply_phase_s(int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  return MstaState::from_mv(m.qubits(),
                            diagonal_phase_mv(0.0, 1.0, qubit, m.qubits(), m.mv()));
}

MstaState apply_t(int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  return MstaState::from_mv(
      m.qubits(), diagonal_phase_mv(kInvSqrt2, kInvSqrt2, qubit, m.qubits(), m.mv()));
}

MstaState apply_z_power(double alpha, int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  const double a = std::numbers::pi * alpha;
  return MstaState::from_mv(
      m.qubits(), diagonal_phase_mv(std::cos(a), std::sin(a), qubit, m.qubits(), m.mv()));
}

MstaState apply_h_power(double beta, int qubit, const MstaState& m) {
  check_qubit(m, qubit);
  const int n = m.qubits();
  const double half = std::numbers::pi * beta / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  // Rotor of the det-normalized H^beta; the e^{i pi beta/2} phase is restored
  // by the trailing J factor so the spinor image is the principal H^beta.
  Multivector rot = Multivector::scalar(pauli_product(n), c);
  rot -= (i_sigma(1, qubit, n) + i_sigma(3, qubit, n)) * (s * kInvSqrt2);
  const Multivector x = gp(rot, m.mv());
  return MstaState::from_mv(n, x * c + times_j(n, x) * s);
}

MstaState apply_cnot(int control, int target, const MstaState& m) {
  check_pair(m, control, target);
  const int n = 2;
  const Multivector& psi = m.mv();
  const Multivector pj = times_j(n, psi);
  Multivector out = psi;
  out -= gp(i_sigma(3, control, n), pj);
  out -= gp(i_sigma(1, target, n), pj);
  out += gp(gp(i_sigma(3, control, n), i_sigma(1, target, n)), gp(psi, cached_e(n)));
  return MstaState::from_mv(n, out * 0.5);
}

MstaState apply_cphase(int q1, int q2, const MstaState& m) {
  check_pair(m, q1, q2);
  const int n = 2;
  const Multivector& psi = m.mv();
  const Multivector pj = times_j(n, psi);
  Multivector out = psi;
  out -= gp(i_sigma(3, q1, n), pj);
  out -= gp(i_sigma(3, q2, n), pj);
  out += gp(gp(i_sigma(3, q1, n), i_sigma(3, q2, n)), gp(psi, cached_e(n)));
  return MstaState::from_mv(n, out * 0.5);
}

MstaState apply_swap(int q1, int q2, const MstaState& m) {
  check_pair(m, q1, q2);
  const int n = 2;
  const Multivector& psi = m.mv();
  const Multivector pe = gp(psi, cached_e(n));
  Multivector out = psi;
  for (int k = 1; k <= 3; ++k)
    out -= gp(gp(i_sigma(k, q1, n), i_sigma(k, q2, n)), pe);
  return MstaState::from_mv(n, out * 0.5);
}

MstaState apply_gate(const Gate& g, const MstaState& m) {
  switch (g.tag) {
    case GateTag::X: return apply_pauli(1, g.q0, m);
    case GateTag::Y: return apply_pauli(2, g.q0, m);
    case GateTag::Z: return apply_pauli(3, g.q0, m);
    case GateTag::H: return apply_hadamard(g.q0, m);
    case GateTag::S: return apply_phase_s(g.q0, m);
    case GateTag::T: return apply_t(g.q0, m);
    case GateTag::Rotation: return apply_rotation(g.param, g.q0, m);
    case GateTag::ZPower: return apply_z_power(g.param, g.q0, m);
    case GateTag::HPower: return apply_h_power(g.param, g.q0, m);
    case GateTag::Cnot: return apply_cnot(g.q0, g.q1, m);
    case GateTag::Cphase: return apply_cphase(g.q0, g.q1, m);
    case GateTag::Swap: return apply_swap(g.q0, g.q1, m);
  }
  throw std::invalid_argument("unknown gate tag");
}

MstaState run_circuit(const Circuit& c, const MstaState& input) {
  if (c.qubits != input.qubits())
    throw std::invalid_argument("circuit and state qubit counts differ");
  MstaState state = input;
  for (const Gate& g : c.ops) state = apply_gate(g, state);
  return state;
}

}  // namespace gaqc
