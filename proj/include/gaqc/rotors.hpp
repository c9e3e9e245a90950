#pragma once

#include <array>
#include <string>
#include <utility>

#include "gaqc/multivector.hpp"
#include "gaqc/oracle.hpp"

namespace gaqc {

/// Element of the rotor group Spin+(3,0): an even Cl(3) multivector R with
/// R R^dagger = 1. Stored as the dense multivector; components() gives the
/// coefficients on {1, is1, is2, is3}.
class Rotor {
 public:
  Rotor() : Rotor(from_components({1.0, 0.0, 0.0, 0.0})) {}
  explicit Rotor(const Multivector& mv);
  static Rotor from_components(const std::array<double, 4>& c);

  const Multivector& mv() const { return mv_; }
  std::array<double, 4> components() const;
  double scalar() const { return mv_[0]; }

  Rotor operator-() const;
  friend Rotor operator*(const Rotor& a, const Rotor& b) { return Rotor(gp(a.mv(), b.mv())); }

 private:
  Multivector mv_;
};

struct AxisAngle {
  Multivector axis;  // unit grade-1 vector
  double angle = 0.0;
  double lambda = 0.0;  // angle / pi
};

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct GateWord {
  std::string letters;  // over {H, T}
  Rotor value;          // left-to-right rotor product of the letters
  double error = 0.0;   // phase-invariant distance to the target
};

/// exp(-i n theta/2) for a unit vector n: the rotor of a rotation by theta
/// in the plane orthogonal to n.
Rotor rotor_from_axis_angle(const Multivector& axis, double theta);

/// Double-sided half-angle law a -> R a R^dagger.
Multivector rotate_vector(const Rotor& r, const Multivector& a);

/// B1 = s2s3, B2 = s3s1, B3 = s1s2.
std::array<Multivector, 3> bivector_basis();

/// Full bracket x y - y x, so that [B_l, B_m] = -2 eps_lmk B_k.
Multivector commutator(const Multivector& x, const Multivector& y);

/// Exact correspondence with SU(2): U = r0 I + i (r1 S1 + r2 S2 + r3 S3).
Rotor rotor_from_su2(const ComplexMatrix& u);
ComplexMatrix su2_from_rotor(const Rotor& r);

/// Rotors R1, R2 of the gate words Z^{-1/4} X^{1/4} and
/// H^{-1/2} Z^{-1/4} X^{1/4} H^{1/2} (X^{1/4} = H Z^{1/4} H), extracted
/// after renormalizing the determinant and fixing the overall sign to a
/// nonnegative scalar part.
std::pair<Rotor, Rotor> universality_rotors();

/// Writes r = cos(lambda pi) + sin(lambda pi) i n with lambda in (0,1).
/// Throws for r = +-1 (axis undefined).
AxisAngle extract_axis_angle(const Rotor& r);

/// Decomposes target = exp(i n1 alpha) exp(i n2 beta) exp(i n1 gamma) for
/// orthogonal unit axes; beta lies in [0, pi/2].
EulerAngles euler_decompose(const Rotor& target, const Multivector& n1,
                            const Multivector& n2);
Rotor euler_compose(const Multivector& n1, const Multivector& n2,
                    const EulerAngles& angles);

/// Phase-quotiented rotor distance min(|r - t|, |r + t|); equals the
/// phase-minimized operator-norm error between the SU(2) images.
double rotor_distance(const Rotor& a, const Rotor& b);

/// Breadth-first search over words in {H, T} up to max_len (<= 20),
/// deduplicated on a rounded sign-normalized grid; ties broken by the
/// shortest then lexicographically smallest word.
GateWord approximate_with_ht(const Rotor& target, int max_len);

}  // namespace gaqc
