#include "gaqc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
}

ComplexMatrix hadamard_matrix() {
  ComplexMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h(0, 0) = r; h(0, 1) = r;
  h(1, 0) = r; h(1, 1) = -r;
  return h;
}

ComplexMatrix diag_phase(cplx lower) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(1, 1) = lower;
  return m;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return max_abs(*this * dagger() - identity(rows_)) <= tol;
}

cplx ComplexMatrix::det2() const {
  if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("det2: matrix is not 2x2");
  return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx v = a(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  for (auto& v : a.a_) v *= s;
  return a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra)
    for (int ca = 0; ca < a.cols(); ++ca)
      for (int rb = 0; rb < b.rows(); ++rb)
        for (int cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v = std::max(v, std::abs(m(r, c)));
  return v;
}

StateVec basis_statevec(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1) throw std::invalid_argument("basis_statevec: empty bitstring");
  std::size_t idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("basis_statevec: bitstring must contain only 0 and 1");
    idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
  }
  StateVec s{n, std::vector<cplx>(std::size_t{1} << n)};
  s.amp[idx] = 1.0;
  return s;
}

ComplexMatrix pauli_matrix(int k) {
  ComplexMatrix m(2, 2);
  switch (k) {
    case 0: return ComplexMatrix::identity(2);
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli index must be 0..3");
  }
  return m;
}

ComplexMatrix gate_matrix(const Gate& g) {
  switch (g.tag) {
    case GateTag::X: return pauli_matrix(1);
    case GateTag::Y: return pauli_matrix(2);
    case GateTag::Z: return pauli_matrix(3);
    case GateTag::H: return hadamard_matrix();
    case GateTag::S: return diag_phase(kI);
    case GateTag::T: return diag_phase(std::exp(kI * (kPi / 4.0)));
    case GateTag::Rotation: return diag_phase(std::exp(kI * g.param));
    case GateTag::ZPower: return diag_phase(std::exp(kI * (kPi * g.param)));
    case GateTag::HPower: {
      // H has eigenvalues +-1; the principal power rephases the -1 subspace.
      const ComplexMatrix h = hadamard_matrix();
      const ComplexMatrix id = ComplexMatrix::identity(2);
      const ComplexMatrix plus = 0.5 * (id + h);
      const ComplexMatrix minus = 0.5 * (id - h);
      return plus + std::exp(kI * (kPi * g.param)) * minus;
    }
    case GateTag::Cnot: {
      ComplexMatrix m(4, 4);
      m(0, 0) = 1.0; m(1, 1) = 1.0; m(2, 3) = 1.0; m(3, 2) = 1.0;
      return m;
    }
    case GateTag::Cphase: {
      ComplexMatrix m = ComplexMatrix::identity(4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateTag::Swap: {
      ComplexMatrix m(4, 4);
      m(0, 0) = 1.0; m(1, 2) = 1.0; m(2, 1) = 1.0; m(3, 3) = 1.0;
      return m;
    }
  }
  throw std::invalid_argument("unknown gate tag");
}

ComplexMatrix deutsch_gate(double gamma) {
  ComplexMatrix m = ComplexMatrix::identity(8);
  const double c = std::cos(kPi * gamma / 2.0);
  const double s = std::sin(kPi * gamma / 2.0);
  m(6, 6) = kI * c; m(6, 7) = s;
  m(7, 6) = s;      m(7, 7) = kI * c;
  return m;
}

ComplexMatrix barenco_gate(double phi, double alpha, double theta) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m(2, 2) = std::exp(kI * alpha) * c;
  m(2, 3) = -kI * std::exp(kI * (alpha - phi)) * s;
  m(3, 2) = -kI * std::exp(kI * (alpha + phi)) * s;
  m(3, 3) = std::exp(kI * alpha) * c;
  return m;
}

ComplexMatrix lift_gate(const Gate& g, int n) {
  if (!g.two_qubit()) {
    const ComplexMatrix u = gate_matrix(g);
    ComplexMatrix out(1, 1);
    out(0, 0) = 1.0;
    for (int pos = 0; pos < n; ++pos)
      out = kron(out, pos == g.q0 ? u : ComplexMatrix::identity(2));
    return out;
  }
  if (n != 2)
    throw std::invalid_argument("two-qubit lifting needs a 2-qubit register");
  ComplexMatrix m = gate_matrix(g);
  if (g.q0 == 1) {
    const ComplexMatrix sw = gate_matrix(Gate{GateTag::Swap, 0.0, 0, 1});
    m = sw * m * sw;
  }
  return m;
}

StateVec run_statevector(const Circuit& c, const StateVec& input) {
  if (c.qubits != input.n ||
      input.amp.size() != (std::size_t{1} << input.n))
    throw std::invalid_argument("run_statevector: dimension mismatch");
  StateVec s = input;
  for (const Gate& g : c.ops) {
    const ComplexMatrix m = lift_gate(g, c.qubits);
    std::vector<cplx> next(s.amp.size());
    for (int r = 0; r < m.rows(); ++r) {
      cplx acc = 0.0;
      for (int k = 0; k < m.cols(); ++k) acc += m(r, k) * s.amp[k];
      next[r] = acc;
    }
    s.amp = std::move(next);
  }
  return s;
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix h) {
  const int n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("hermitian_eigenvalues: square matrix expected");
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(h(p, q));
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq < 1e-300) continue;
        const cplx phase = hpq / apq;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double co = 1.0 / std::sqrt(1.0 + t * t);
        const double si = t * co;
        // G has columns (p,q): [co, si*phase; -si*conj(phase), co]; h <- G^dag h G
        for (int r = 0; r < n; ++r) {
          const cplx hrp = h(r, p);
          const cplx hrq = h(r, q);
          h(r, p) = co * hrp - si * std::conj(phase) * hrq;
          h(r, q) = si * phase * hrp + co * hrq;
        }
        for (int cidx = 0; cidx < n; ++cidx) {
          const cplx hpc = h(p, cidx);
          const cplx hqc = h(q, cidx);
          h(p, cidx) = co * hpc - si * phase * hqc;
          h(q, cidx) = si * std::conj(phase) * hpc + co * hqc;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = h(i, i).real();
  return eig;
}

double largest_singular_value(const ComplexMatrix& m) {
  const ComplexMatrix b = m.dagger() * m;
  double top = 0.0;
  for (double e : hermitian_eigenvalues(b)) top = std::max(top, e);
  return std::sqrt(std::max(0.0, top));
}

double approx_error(const ComplexMatrix& u, const ComplexMatrix& v) {
  check_same_shape(u, v);
  return largest_singular_value(u - v);
}

double approx_error_phase_min(const ComplexMatrix& u, const ComplexMatrix& v) {
  check_same_shape(u, v);
  auto err = [&](double phi) {
    return approx_error(u, std::exp(kI * phi) * v);
  };
  // coarse scan, then golden-section refinement around the best sample
  const int steps = 720;
  double best_phi = 0.0;
  double best = err(0.0);
  for (int i = 1; i < steps; ++i) {
    const double phi = 2.0 * kPi * i / steps;
    const double e = err(phi);
    if (e < best) { best = e; best_phi = phi; }
  }
  double lo = best_phi - 2.0 * kPi / steps;
  double hi = best_phi + 2.0 * kPi / steps;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = err(x1);
  double f2 = err(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = err(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = err(x2);
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace gaqc
