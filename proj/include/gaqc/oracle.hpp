#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "gaqc/gates.hpp"

namespace gaqc {

using cplx = std::complex<double>;

/// Small dense complex matrix; enough for the reference simulator
/// (dimensions up to 8).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx operator()(int r, int c) const { return a_[r * cols_ + c]; }
  cplx& operator()(int r, int c) { return a_[r * cols_ + c]; }

  ComplexMatrix dagger() const;
  bool is_unitary(double tol) const;
  cplx det2() const;  // 2x2 determinant

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);

struct StateVec {
  int n = 1;
  std::vector<cplx> amp;
};

StateVec basis_statevec(std::string_view bits);

/// Reference unitary of a gate: 2x2 for single-qubit tags, 4x4 for the
/// two-qubit tags with the first listed qubit as the first tensor slot.
ComplexMatrix gate_matrix(const Gate& g);

ComplexMatrix pauli_matrix(int k);           // k in 0..3, 0 = identity
ComplexMatrix deutsch_gate(double gamma);    // 8x8
ComplexMatrix barenco_gate(double phi, double alpha, double theta);  // 4x4

/// Sequential application of the circuit with Kronecker lifting, qubit 0
/// being the leftmost (most significant) tensor factor.
StateVec run_statevector(const Circuit& c, const StateVec& input);

/// Lifted whole-register matrix of one gate.
ComplexMatrix lift_gate(const Gate& g, int n);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
std::vector<double> hermitian_eigenvalues(ComplexMatrix h);
double largest_singular_value(const ComplexMatrix& m);

/// max over unit states of |(U - V) psi|, the operator-norm distance.
double approx_error(const ComplexMatrix& u, const ComplexMatrix& v);

/// min over phases of approx_error(u, e^{i phi} v).
double approx_error_phase_min(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace gaqc
