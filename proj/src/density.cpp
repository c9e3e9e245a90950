#include "gaqc/density.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gaqc {

namespace {

Multivector spin_vector(const Multivector& psi) {
  return gp(gp(psi, sigma(3)), reversion(psi));
}

}  // namespace

DensityGA pure_density(const MstaState& m) {
  if (m.qubits() != 1)
    throw std::invalid_argument("pure_density: one-qubit states only");
  if (!m.normalized())
    throw std::invalid_argument("pure_density: state is not normalized");
  Multivector rho = spin_vector(m.mv());
  rho[0] += 1.0;
  return DensityGA{1, rho * 0.5, DensityKind::pure};
}

DensityGA mixed_density(const std::vector<std::pair<double, Multivector>>& entries) {
  if (entries.empty())
    throw std::invalid_argument("mixed_density: empty ensemble");
  double total = 0.0;
  Multivector pol(pauli_algebra());
  for (const auto& [p, s] : entries) {
    if (p < -1e-15) throw std::invalid_argument("mixed_density: negative probability");
    if (!(s.algebra() == pauli_algebra()))
      throw std::invalid_argument("mixed_density: spin vectors live in Cl(3)");
    for (unsigned mask = 0; mask < s.size(); ++mask)
      if (blade_grade(mask) != 1 && std::abs(s[mask]) > 1e-12)
        throw std::invalid_argument("mixed_density: spin entries must be grade-1 vectors");
    if (std::abs(coeff_norm(s) - 1.0) > 1e-12)
      throw std::invalid_argument("mixed_density: spin vectors must be unit length");
    total += p;
    pol += s * p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixed_density: probabilities must sum to 1");
  Multivector rho = pol;
  rho[0] += 1.0;
  const bool pure = std::abs(coeff_norm(pol) - 1.0) <= 1e-12;
  return DensityGA{1, rho * 0.5, pure ? DensityKind::pure : DensityKind::mixed};
}

DensityGA multiqubit_density(const MstaState& m) {
  const int n = m.qubits();
  if (n > 2) throw std::invalid_argument("multiqubit_density: supports up to 2 qubits");
  if (!m.normalized())
    throw std::invalid_argument("multiqubit_density: state is not normalized");
  const Algebra alg = pauli_product(n);
  Multivector e_plus = Multivector::scalar(alg, 1.0);
  for (int a = 0; a < n; ++a) {
    Multivector half = sigma(3, a, n);
    half[0] += 1.0;
    e_plus = gp(e_plus, half * 0.5);
  }
  const Multivector rho = gp(gp(m.mv(), e_plus), reversion(m.mv()));
  return DensityGA{n, rho, DensityKind::pure};
}

double expectation(const DensityGA& d, int axis) {
  if (d.n != 1) throw std::invalid_argument("expectation: one-qubit densities only");
  if (axis < 1 || axis > 3) throw std::invalid_argument("expectation: axis must be 1..3");
  return 2.0 * scalar_part(gp(d.mv, sigma(axis)));
}

ComplexMatrix density_matrix(const DensityGA& d) {
  const Algebra& alg = d.mv.algebra();
  const int dim = 1 << d.n;
  ComplexMatrix out(dim, dim);
  for (unsigned mask = 0; mask < d.mv.size(); ++mask) {
    const double c = d.mv[mask];
    if (c == 0.0) continue;
    ComplexMatrix blade_img(1, 1);
    blade_img(0, 0) = 1.0;
    for (int f = 0; f < alg.factors; ++f) {
      const unsigned sub = (mask >> (3 * f)) & 7u;
      ComplexMatrix factor = ComplexMatrix::identity(2);
      for (int bit = 0; bit < 3; ++bit)
        if (sub >> bit & 1) factor = factor * pauli_matrix(bit + 1);
      blade_img = kron(blade_img, factor);
    }
    out = out + cplx{c, 0.0} * blade_img;
  }
  return out;
}

}  // namespace gaqc
