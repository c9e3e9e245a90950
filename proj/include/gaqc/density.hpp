#pragma once

#include <utility>
#include <vector>

#include "gaqc/msta.hpp"
#include "gaqc/oracle.hpp"

namespace gaqc {

enum class DensityKind { pure, mixed };

/// GA density operator. For one qubit this is 1/2 (1 + P) with P the
/// polarization vector; for interacting qubits the correlator form
/// (psi E_n) E_+ (psi E_n)^dagger.
struct DensityGA {
  int n = 1;
  Multivector mv;
  DensityKind kind = DensityKind::pure;
};

/// rho = psi (1+sigma3)/2 psi^dagger = (1 + s)/2 with s = psi sigma3 psi^dagger.
DensityGA pure_density(const MstaState& m);

/// Ensemble (p_j, s_j) of unit spin vectors: (1 + sum p_j s_j)/2.
DensityGA mixed_density(const std::vector<std::pair<double, Multivector>>& entries);

/// (psi E_n) E_+ (psi E_n)^dagger with E_+ = prod_a (1 + sigma3^a)/2.
/// Reduces to pure_density for n = 1.
DensityGA multiqubit_density(const MstaState& m);

/// 2 <rho sigma_k>_0, the expectation of Sigma_k (one qubit only).
double expectation(const DensityGA& d, int axis);

/// Matrix image under the blade -> Kronecker-product-of-Paulis map.
ComplexMatrix density_matrix(const DensityGA& d);

}  // namespace gaqc
