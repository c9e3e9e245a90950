#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gaqc {

/// Metric signature of a real Clifford algebra Cl(p,q): the first p basis
/// vectors square to +1, the remaining q square to -1.
struct Signature {
  int p = 0;
  int q = 0;
  int dim() const { return p + q; }
  bool operator==(const Signature&) const = default;
};

/// A Clifford algebra Cl(p,q), or the direct product of `factors` commuting
/// copies of it. Elements originating from distinct factors commute; within a
/// factor the usual anticommutation rules apply. Blades are indexed by a
/// bitmask laid out factor by factor, `sig.dim()` bits per factor, bit i of a
/// factor set iff basis vector e_i of that factor participates.
struct Algebra {
  Signature sig{};
  int factors = 1;

  int factor_bits() const { return sig.dim(); }
  int total_bits() const { return sig.dim() * factors; }
  std::size_t coeff_count() const { return std::size_t{1} << total_bits(); }
  bool operator==(const Algebra&) const = default;
};

Algebra cl(int p, int q);
Algebra pauli_algebra();          // Cl(3,0)
Algebra spacetime_algebra();      // Cl(1,3), basis index 0 timelike
Algebra pauli_product(int n);     // n commuting copies of Cl(3,0)

/// A signed canonical basis blade.
struct Blade {
  unsigned mask = 0;
  int sign = 1;
};

int blade_grade(unsigned mask);
int blade_sign(const Algebra& alg, unsigned a, unsigned b);
Blade blade_product(const Blade& a, const Blade& b, const Algebra& alg);

/// Dense real multivector: one double per basis blade, blades stored in
/// ascending mask order with all signs folded into the coefficients.
class Multivector {
 public:
  Multivector() : Multivector(pauli_algebra()) {}
  explicit Multivector(const Algebra& alg);

  static Multivector scalar(const Algebra& alg, double value);
  static Multivector blade(const Algebra& alg, unsigned mask, double coeff);
  static Multivector basis_vector(const Algebra& alg, int index);

  const Algebra& algebra() const { return alg_; }
  std::size_t size() const { return c_.size(); }
  double operator[](unsigned mask) const { return c_[mask]; }
  double& operator[](unsigned mask) { return c_[mask]; }
  const std::vector<double>& coeffs() const { return c_; }

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);

 private:
  Algebra alg_;
  std::vector<double> c_;
};

// Core products and involutions. All binary operations require matching
// algebras and throw std::invalid_argument otherwise.
Multivector gp(const Multivector& a, const Multivector& b);
Multivector wedge(const Multivector& a, const Multivector& b);
Multivector grade_project(const Multivector& m, int k);
Multivector reversion(const Multivector& m);
Multivector clifford_conjugate(const Multivector& m);
Multivector grade_involution(const Multivector& m);

/// Closed-form exponential of a pure bivector b with b*b a nonpositive
/// scalar: exp(b) = cos(phi) + b*sin(phi)/phi where phi = |b|.
Multivector exp_bivector(const Multivector& b);

/// Spacetime split a*gamma0 of a grade-1 STA vector against the timelike
/// basis vector: scalar part a.gamma0 plus relative vectors sigma_k.
Multivector spacetime_split(const Multivector& a, int timelike_index);

// Cl(3) basis elements, k in {1,2,3}. The `factor` overloads address one
// copy inside a pauli_product algebra (0-based factor index).
Multivector sigma(int k);
Multivector sigma(int k, int factor, int factors);
Multivector i_sigma(int k);
Multivector i_sigma(int k, int factor, int factors);
Multivector pseudoscalar(const Algebra& alg);
Multivector factor_pseudoscalar(const Algebra& alg, int factor);
Multivector gamma(int mu);        // Cl(1,3) basis vector, mu in 0..3

double scalar_part(const Multivector& m);
double coeff_dot(const Multivector& a, const Multivector& b);
double coeff_norm(const Multivector& m);
double max_abs_diff(const Multivector& a, const Multivector& b);
bool approx_equal(const Multivector& a, const Multivector& b, double tol);

/// Human-readable form such as "+0.5 -0.5 is3[1]is3[2]" (factor tags only
/// printed for product algebras).
std::string to_string(const Multivector& m);
std::string blade_name(const Algebra& alg, unsigned mask);

}  // namespace gaqc
