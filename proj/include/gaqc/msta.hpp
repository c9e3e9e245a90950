#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "gaqc/multivector.hpp"

namespace gaqc {

/// Conventional complex amplitude vector over the computational basis.
/// Index = basis label read as binary with qubit 0 the most significant bit.
struct SpinorVec {
  int n = 1;
  std::vector<std::complex<double>> amp;
};

/// An n-qubit state as an even multivector of the n-fold Pauli product
/// algebra, right-projected by the correlator E_n. Construction validates
/// the structural invariants: per-factor even grades only, equal right
/// action of every i*sigma3^a, and stability under right multiplication
/// by E_n.
class MstaState {
 public:
  MstaState() : n_(1), mv_(Multivector::scalar(pauli_product(1), 0.0)) {}

  static MstaState from_mv(int n, const Multivector& mv);

  int qubits() const { return n_; }
  const Multivector& mv() const { return mv_; }
  bool normalized() const { return normalized_; }

 private:
  MstaState(int n, Multivector mv, bool normalized)
      : n_(n), mv_(std::move(mv)), normalized_(normalized) {}

  int n_;
  Multivector mv_;
  bool normalized_ = false;
};

/// E_n = prod_{b=2..n} (1 - is3^1 is3^b)/2; idempotent, E_1 = 1.
Multivector correlator(int n);

/// J_n = E_n is3^1, with J_n^2 = -E_n; right multiplication by J_n plays
/// the role of the complex imaginary unit.
Multivector complex_structure(int n);

MstaState encode_basis(std::string_view bits);
MstaState bell_state(int k);  // k in 1..4

MstaState spinor_to_mv(const SpinorVec& s);
SpinorVec mv_to_spinor(const MstaState& m);

/// Right multiplication by J_n: the image of amplitude-wise multiplication
/// by the complex unit.
MstaState apply_imaginary(const MstaState& m);

}  // namespace gaqc
