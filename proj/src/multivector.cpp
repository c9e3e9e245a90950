#include "gaqc/multivector.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaqc {

namespace {

void check_same_algebra(const Multivector& a, const Multivector& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("multivector signature mismatch");
}

// Sign from sorting the concatenation of two ascending blades: one swap for
// every pair (i in a, j in b) with j < i.
int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

int factor_sign(const Signature& sig, unsigned a, unsigned b) {
  int sign = reorder_sign(a, b);
  unsigned shared = (a & b) >> sig.p;  // repeated vectors that square to -1
  if (std::popcount(shared) & 1) sign = -sign;
  return sign;
}

int reversion_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }
int conjugate_sign(int grade) { return ((grade * (grade + 1) / 2) & 1) ? -1 : 1; }

std::size_t checked_coeff_count(const Algebra& alg) {
  if (alg.factors < 1 || alg.sig.p < 0 || alg.sig.q < 0 || alg.total_bits() > 16)
    throw std::invalid_argument("algebra dimension cap exceeded");
  return alg.coeff_count();
}

template <typename SignPerFactorGrade>
Multivector apply_factorwise_sign(const Multivector& m, SignPerFactorGrade sign_of) {
  const Algebra& alg = m.algebra();
  Multivector out = m;
  const int d = alg.factor_bits();
  const unsigned fm = (1u << d) - 1;
  for (unsigned mask = 0; mask < out.size(); ++mask) {
    int s = 1;
    for (int f = 0; f < alg.factors; ++f)
      s *= sign_of(std::popcount((mask >> (d * f)) & fm));
    if (s < 0) out[mask] = -out[mask];
  }
  return out;
}

}  // namespace

Algebra cl(int p, int q) {
  if (p < 0 || q < 0 || p + q > 16)
    throw std::invalid_argument("cl(p,q): need p,q >= 0 and p+q <= 16");
  return Algebra{Signature{p, q}, 1};
}

Algebra pauli_algebra() { return cl(3, 0); }
Algebra spacetime_algebra() { return cl(1, 3); }

Algebra pauli_product(int n) {
  if (n < 1 || 3 * n > 16)
    throw std::invalid_argument("pauli_product: factor count out of range");
  return Algebra{Signature{3, 0}, n};
}

int blade_grade(unsigned mask) { return std::popcount(mask); }

int blade_sign(const Algebra& alg, unsigned a, unsigned b) {
  const int d = alg.factor_bits();
  const unsigned fm = (1u << d) - 1;
  int sign = 1;
  for (int f = 0; f < alg.factors; ++f)
    sign *= factor_sign(alg.sig, (a >> (d * f)) & fm, (b >> (d * f)) & fm);
  return sign;
}

Blade blade_product(const Blade& a, const Blade& b, const Algebra& alg) {
  const unsigned limit = static_cast<unsigned>(alg.coeff_count());
  if (a.mask >= limit || b.mask >= limit)
    throw std::invalid_argument("blade_product: mask exceeds algebra dimension");
  return Blade{a.mask ^ b.mask, a.sign * b.sign * blade_sign(alg, a.mask, b.mask)};
}

Multivector::Multivector(const Algebra& alg)
    : alg_(alg), c_(checked_coeff_count(alg), 0.0) {}

Multivector Multivector::scalar(const Algebra& alg, double value) {
  Multivector m(alg);
  m[0] = value;
  return m;
}

Multivector Multivector::blade(const Algebra& alg, unsigned mask, double coeff) {
  Multivector m(alg);
  if (mask >= m.size()) throw std::invalid_argument("blade mask out of range");
  m[mask] = coeff;
  return m;
}

Multivector Multivector::basis_vector(const Algebra& alg, int index) {
  if (index < 0 || index >= alg.factor_bits())
    throw std::invalid_argument("basis vector index out of range");
  return blade(alg, 1u << index, 1.0);
}

Multivector Multivector::operator-() const {
  Multivector m = *this;
  for (auto& v : m.c_) v = -v;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_algebra(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_algebra(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }

Multivector gp(const Multivector& x, const Multivector& y) {
  check_same_algebra(x, y);
  const Algebra& alg = x.algebra();
  Multivector out(alg);
  const unsigned n = static_cast<unsigned>(x.size());
  for (unsigned a = 0; a < n; ++a) {
    const double xa = x[a];
    if (xa == 0.0) continue;
    for (unsigned b = 0; b < n; ++b) {
      const double yb = y[b];
      if (yb == 0.0) continue;
      out[a ^ b] += blade_sign(alg, a, b) * xa * yb;
    }
  }
  return out;
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  check_same_algebra(x, y);
  const Algebra& alg = x.algebra();
  Multivector out(alg);
  const unsigned n = static_cast<unsigned>(x.size());
  for (unsigned a = 0; a < n; ++a) {
    const double xa = x[a];
    if (xa == 0.0) continue;
    for (unsigned b = 0; b < n; ++b) {
      if (a & b) continue;  // repeated vector kills the outer product
      const double yb = y[b];
      if (yb == 0.0) continue;
      out[a ^ b] += blade_sign(alg, a, b) * xa * yb;
    }
  }
  return out;
}

Multivector grade_project(const Multivector& m, int k) {
  if (k < 0 || k > m.algebra().total_bits())
    throw std::invalid_argument("grade_project: grade out of range");
  Multivector out(m.algebra());
  for (unsigned mask = 0; mask < m.size(); ++mask)
    if (std::popcount(mask) == k) out[mask] = m[mask];
  return out;
}

Multivector reversion(const Multivector& m) {
  return apply_factorwise_sign(m, reversion_sign);
}

Multivector clifford_conjugate(const Multivector& m) {
  return apply_factorwise_sign(m, conjugate_sign);
}

Multivector grade_involution(const Multivector& m) {
  return apply_factorwise_sign(m, [](int g) { return (g & 1) ? -1 : 1; });
}

Multivector exp_bivector(const Multivector& b) {
  const double scale = std::max(1.0, coeff_norm(b));
  for (unsigned mask = 0; mask < b.size(); ++mask)
    if (std::popcount(mask) != 2 && std::abs(b[mask]) > 1e-12 * scale)
      throw std::invalid_argument("exp_bivector: input is not a pure bivector");

  const Multivector sq = gp(b, b);
  for (unsigned mask = 1; mask < sq.size(); ++mask)
    if (std::abs(sq[mask]) > 1e-12 * scale * scale)
      throw std::invalid_argument("exp_bivector: bivector square is not scalar");
  if (sq[0] > 1e-12 * scale * scale)
    throw std::invalid_argument("exp_bivector: bivector squares to a positive scalar");

  const double phi = std::sqrt(std::max(0.0, -sq[0]));
  const double sinc = phi < 1e-8 ? 1.0 - phi * phi / 6.0 : std::sin(phi) / phi;
  Multivector out = b * sinc;
  out[0] += std::cos(phi);
  return out;
}

Multivector spacetime_split(const Multivector& a, int timelike_index) {
  const Algebra& alg = a.algebra();
  if (!(alg == spacetime_algebra()))
    throw std::invalid_argument("spacetime_split: expects a Cl(1,3) element");
  if (timelike_index < 0 || timelike_index >= alg.sig.p)
    throw std::invalid_argument("spacetime_split: index is not a timelike basis vector");
  const double scale = std::max(1.0, coeff_norm(a));
  for (unsigned mask = 0; mask < a.size(); ++mask)
    if (std::popcount(mask) != 1 && std::abs(a[mask]) > 1e-12 * scale)
      throw std::invalid_argument("spacetime_split: input is not a grade-1 vector");
  return gp(a, Multivector::basis_vector(alg, timelike_index));
}

namespace {

// Blades of i*sigma_k within one Cl(3) factor, signs folded in:
// is1 = e2e3, is2 = -e1e3, is3 = e1e2.
struct SignedMask {
  unsigned mask;
  double sign;
};

SignedMask i_sigma_blade(int k) {
  switch (k) {
    case 1: return {0b110u, 1.0};
    case 2: return {0b101u, -1.0};
    case 3: return {0b011u, 1.0};
    default: throw std::invalid_argument("sigma index must be 1, 2 or 3");
  }
}

void check_factor(const Algebra& alg, int factor) {
  if (factor < 0 || factor >= alg.factors)
    throw std::invalid_argument("factor index out of range");
}

}  // namespace

Multivector sigma(int k) { return sigma(k, 0, 1); }

Multivector sigma(int k, int factor, int factors) {
  if (k < 1 || k > 3) throw std::invalid_argument("sigma index must be 1, 2 or 3");
  const Algebra alg = pauli_product(factors);
  check_factor(alg, factor);
  return Multivector::blade(alg, (1u << (k - 1)) << (3 * factor), 1.0);
}

Multivector i_sigma(int k) { return i_sigma(k, 0, 1); }

Multivector i_sigma(int k, int factor, int factors) {
  const Algebra alg = pauli_product(factors);
  check_factor(alg, factor);
  const SignedMask b = i_sigma_blade(k);
  return Multivector::blade(alg, b.mask << (3 * factor), b.sign);
}

Multivector pseudoscalar(const Algebra& alg) {
  if (alg.factors != 1)
    throw std::invalid_argument("pseudoscalar: product algebras have one per factor");
  return Multivector::blade(alg, (1u << alg.factor_bits()) - 1, 1.0);
}

Multivector factor_pseudoscalar(const Algebra& alg, int factor) {
  check_factor(alg, factor);
  const unsigned fm = (1u << alg.factor_bits()) - 1;
  return Multivector::blade(alg, fm << (alg.factor_bits() * factor), 1.0);
}

Multivector gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("gamma index must be 0..3");
  return Multivector::basis_vector(spacetime_algebra(), mu);
}

double scalar_part(const Multivector& m) { return m[0]; }

double coeff_dot(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b);
  double s = 0.0;
  for (unsigned i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double coeff_norm(const Multivector& m) { return std::sqrt(coeff_dot(m, m)); }

double max_abs_diff(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b);
  double d = 0.0;
  for (unsigned i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

std::string blade_name(const Algebra& alg, unsigned mask) {
  if (mask == 0) return "1";
  const int d = alg.factor_bits();
  const unsigned fm = (1u << d) - 1;
  std::string out;
  for (int f = 0; f < alg.factors; ++f) {
    unsigned sub = (mask >> (d * f)) & fm;
    if (!sub) continue;
    std::string name;
    if (alg.sig == Signature{3, 0}) {
      switch (sub) {
        case 0b001: name = "s1"; break;
        case 0b010: name = "s2"; break;
        case 0b100: name = "s3"; break;
        case 0b011: name = "s1s2"; break;
        case 0b101: name = "s1s3"; break;
        case 0b110: name = "s2s3"; break;
        case 0b111: name = "i"; break;
      }
    } else {
      for (int b = 0; b < d; ++b)
        if (sub >> b & 1) name += "e" + std::to_string(b);
    }
    if (alg.factors > 1) name += "[" + std::to_string(f + 1) + "]";
    out += name;
  }
  return out;
}

std::string to_string(const Multivector& m) {
  std::ostringstream os;
  bool any = false;
  for (unsigned mask = 0; mask < m.size(); ++mask) {
    const double v = m[mask];
    if (v == 0.0) continue;
    if (any) os << " ";
    os << (v < 0 ? "-" : "+") << std::abs(v);
    if (mask) os << "*" << blade_name(m.algebra(), mask);
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace gaqc
