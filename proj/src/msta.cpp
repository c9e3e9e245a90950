#include "gaqc/msta.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gaqc {

namespace {

constexpr double kStructuralTol = 1e-12;
constexpr double kNormTol = 1e-12;

void check_state_qubits(int n) {
  if (n < 1 || n > 2)
    throw std::invalid_argument("state API supports 1 or 2 qubits");
}

bool per_factor_even(const Multivector& m, double tol) {
  const Algebra& alg = m.algebra();
  const int d = alg.factor_bits();
  const unsigned fm = (1u << d) - 1;
  for (unsigned mask = 0; mask < m.size(); ++mask) {
    if (std::abs(m[mask]) <= tol) continue;
    for (int f = 0; f < alg.factors; ++f)
      if (std::popcount((mask >> (d * f)) & fm) & 1) return false;
  }
  return true;
}

// Reduced basis for n=2: the Eq-style computational blades psi_b and their
// J images. Coefficient-orthogonal with squared norm 1/2 each, so the
// inverse map is a plain projection.
struct TwoQubitBasis {
  std::array<Multivector, 8> b;
  Multivector e;
  Multivector j;
};

const TwoQubitBasis& two_qubit_basis() {
  static const TwoQubitBasis data = [] {
    TwoQubitBasis t{.b = {}, .e = correlator(2), .j = complex_structure(2)};
    const Multivector m2a = -i_sigma(2, 0, 2);
    const Multivector m2b = -i_sigma(2, 1, 2);
    t.b[0] = t.e;
    t.b[1] = gp(m2b, t.e);
    t.b[2] = gp(m2a, t.e);
    t.b[3] = gp(gp(m2a, m2b), t.e);
    for (int k = 0; k < 4; ++k) t.b[4 + k] = gp(t.b[k], t.j);
    return t;
  }();
  return data;
}

double spinor_norm(const SpinorVec& s) {
  double q = 0.0;
  for (const auto& z : s.amp) q += std::norm(z);
  return std::sqrt(q);
}

SpinorVec spinor_from_mv_unchecked(int n, const Multivector& mv, double* residual) {
  SpinorVec out{n, {}};
  if (n == 1) {
    // psi = a0 + a1 is1 + a2 is2 + a3 is3 -> (a0 + i a3, -a2 + i a1)
    const double a0 = mv[0b000];
    const double a1 = mv[0b110];
    const double a2 = -mv[0b101];
    const double a3 = mv[0b011];
    out.amp = {{a0, a3}, {-a2, a1}};
    double r = 0.0;
    for (unsigned mask : {0b001u, 0b010u, 0b100u, 0b111u})
      r = std::max(r, std::abs(mv[mask]));
    if (residual) *residual = r;
    return out;
  }
  const TwoQubitBasis& t = two_qubit_basis();
  std::array<double, 8> c{};
  for (int k = 0; k < 8; ++k) c[k] = 2.0 * coeff_dot(t.b[k], mv);
  if (residual) {
    Multivector recon = t.b[0] * c[0];
    for (int k = 1; k < 8; ++k) recon += t.b[k] * c[k];
    *residual = max_abs_diff(recon, mv);
  }
  out.amp = {{c[0], c[4]}, {c[1], c[5]}, {c[2], c[6]}, {c[3], c[7]}};
  return out;
}

}  // namespace

Multivector correlator(int n) {
  if (n < 1) throw std::invalid_argument("correlator: need n >= 1");
  const Algebra alg = pauli_product(n);
  Multivector e = Multivector::scalar(alg, 1.0);
  for (int b = 1; b < n; ++b) {
    Multivector term = Multivector::scalar(alg, 1.0);
    term -= gp(i_sigma(3, 0, n), i_sigma(3, b, n));
    e = gp(e, term * 0.5);
  }
  return e;
}

Multivector complex_structure(int n) {
  return gp(correlator(n), i_sigma(3, 0, n));
}

MstaState MstaState::from_mv(int n, const Multivector& mv) {
  check_state_qubits(n);
  if (!(mv.algebra() == pauli_product(n)))
    throw std::invalid_argument("state multivector has the wrong algebra");
  const double scale = std::max(1.0, coeff_norm(mv));
  if (!per_factor_even(mv, kStructuralTol * scale))
    throw std::invalid_argument("state multivector has odd-grade factor content");
  if (n > 1) {
    const Multivector ref = gp(mv, i_sigma(3, 0, n));
    for (int a = 1; a < n; ++a)
      if (max_abs_diff(ref, gp(mv, i_sigma(3, a, n))) > kStructuralTol * scale)
        throw std::invalid_argument("state multivector violates the phase constraint");
    if (max_abs_diff(gp(mv, correlator(n)), mv) > kStructuralTol * scale)
      throw std::invalid_argument("state multivector is not E-projected");
  }
  const SpinorVec s = spinor_from_mv_unchecked(n, mv, nullptr);
  const bool normalized = std::abs(spinor_norm(s) - 1.0) <= kNormTol;
  return MstaState(n, mv, normalized);
}

MstaState encode_basis(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  check_state_qubits(n);
  const Algebra alg = pauli_product(n);
  Multivector m = Multivector::scalar(alg, 1.0);
  for (int a = 0; a < n; ++a) {
    if (bits[a] == '1')
      m = gp(m, -i_sigma(2, a, n));
    else if (bits[a] != '0')
      throw std::invalid_argument("encode_basis: bitstring must contain only 0 and 1");
  }
  return MstaState::from_mv(n, gp(m, correlator(n)));
}

MstaState bell_state(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("bell_state: index must be 1..4");
  const int n = 2;
  const Multivector one = Multivector::scalar(pauli_product(n), 1.0);
  const Multivector pp = gp(i_sigma(2, 0, n), i_sigma(2, 1, n));
  Multivector head;
  switch (k) {
    case 1: head = one + pp; break;
    case 2: head = -(i_sigma(2, 0, n) + i_sigma(2, 1, n)); break;
    case 3: head = one - pp; break;
    default: head = i_sigma(2, 0, n) - i_sigma(2, 1, n); break;
  }
  const Multivector tail = one - gp(i_sigma(3, 0, n), i_sigma(3, 1, n));
  return MstaState::from_mv(n, gp(head, tail) * std::pow(2.0, -1.5));
}

MstaState spinor_to_mv(const SpinorVec& s) {
  check_state_qubits(s.n);
  if (static_cast<int>(s.amp.size()) != (1 << s.n))
    throw std::invalid_argument("spinor_to_mv: amplitude count mismatch");
  if (s.n == 1) {
    const Algebra alg = pauli_product(1);
    Multivector m = Multivector::scalar(alg, s.amp[0].real());
    m += i_sigma(1) * s.amp[1].imag();
    m += i_sigma(2) * (-s.amp[1].real());
    m += i_sigma(3) * s.amp[0].imag();
    return MstaState::from_mv(1, m);
  }
  const TwoQubitBasis& t = two_qubit_basis();
  Multivector m(pauli_product(2));
  for (int b = 0; b < 4; ++b) {
    m += t.b[b] * s.amp[b].real();
    m += t.b[4 + b] * s.amp[b].imag();
  }
  return MstaState::from_mv(2, m);
}

SpinorVec mv_to_spinor(const MstaState& m) {
  double residual = 0.0;
  SpinorVec s = spinor_from_mv_unchecked(m.qubits(), m.mv(), &residual);
  const double scale = std::max(1.0, coeff_norm(m.mv()));
  if (residual > 1e-9 * scale)
    throw std::invalid_argument("mv_to_spinor: multivector is not a reduced state");
  return s;
}

MstaState apply_imaginary(const MstaState& m) {
  return MstaState::from_mv(m.qubits(), gp(m.mv(), complex_structure(m.qubits())));
}

}  // namespace gaqc
