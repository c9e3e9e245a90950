#pragma once

#include <complex>
#include <random>

#include "gaqc/gates.hpp"
#include "gaqc/msta.hpp"
#include "gaqc/multivector.hpp"
#include "gaqc/oracle.hpp"
#include "gaqc/rotors.hpp"

namespace gaqc::testing {

inline double urand(std::mt19937& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Multivector random_mv(const Algebra& alg, std::mt19937& rng) {
  Multivector m(alg);
  for (unsigned mask = 0; mask < m.size(); ++mask) m[mask] = urand(rng);
  return m;
}

inline Multivector random_vector(const Algebra& alg, std::mt19937& rng) {
  Multivector m(alg);
  for (int i = 0; i < alg.factor_bits(); ++i) m[1u << i] = urand(rng);
  return m;
}

inline Multivector random_unit_vector(std::mt19937& rng) {
  Multivector v = random_vector(pauli_algebra(), rng);
  while (coeff_norm(v) < 1e-3) v = random_vector(pauli_algebra(), rng);
  return v * (1.0 / coeff_norm(v));
}

inline SpinorVec random_spinor(int n, std::mt19937& rng) {
  SpinorVec s{n, {}};
  s.amp.resize(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& z : s.amp) {
    z = {urand(rng), urand(rng)};
    norm2 += std::norm(z);
  }
  for (auto& z : s.amp) z /= std::sqrt(norm2);
  return s;
}

inline MstaState random_state(int n, std::mt19937& rng) {
  return spinor_to_mv(random_spinor(n, rng));
}

inline Rotor random_rotor(std::mt19937& rng) {
  std::array<double, 4> c{};
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& v : c) {
      v = urand(rng);
      norm2 += v * v;
    }
  } while (norm2 < 1e-6);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : c) v *= inv;
  return Rotor::from_components(c);
}

inline ComplexMatrix random_su2(std::mt19937& rng) {
  return su2_from_rotor(random_rotor(rng));
}

inline Gate random_gate(int n, std::mt19937& rng) {
  const GateTag one_qubit[] = {GateTag::X, GateTag::Y, GateTag::Z,
                               GateTag::H, GateTag::S, GateTag::T,
                               GateTag::Rotation, GateTag::ZPower, GateTag::HPower};
  const GateTag two_qubit[] = {GateTag::Cnot, GateTag::Cphase, GateTag::Swap};
  std::uniform_int_distribution<int> pick(0, n == 2 ? 11 : 8);
  const int sel = pick(rng);
  Gate g{sel < 9 ? one_qubit[sel] : two_qubit[sel - 9]};
  std::uniform_int_distribution<int> qubit(0, n - 1);
  g.q0 = qubit(rng);
  if (g.two_qubit()) {
    g.q1 = 1 - g.q0;
  } else if (g.tag == GateTag::Rotation) {
    g.param = urand(rng, -6.5, 6.5);
  } else if (g.has_param()) {
    g.param = urand(rng, -2.0, 2.0);
  }
  return g;
}

inline Circuit random_circuit(int n, int len, std::mt19937& rng) {
  Circuit c{n, {}};
  for (int i = 0; i < len; ++i) c.ops.push_back(random_gate(n, rng));
  return c;
}

inline double spinor_diff(const SpinorVec& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i) d = std::max(d, std::abs(a.amp[i] - b[i]));
  return d;
}

}  // namespace gaqc::testing
