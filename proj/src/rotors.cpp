#include "gaqc/rotors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace gaqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

using Quat = std::array<double, 4>;  // coefficients on {1, is1, is2, is3}

// (a0 + a.B)(b0 + b.B) with B_k B_l = -delta_kl - eps_klm B_m.
Quat quat_mul(const Quat& a, const Quat& b) {
  return Quat{
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + b[0] * a[1] - (a[2] * b[3] - a[3] * b[2]),
      a[0] * b[2] + b[0] * a[2] - (a[3] * b[1] - a[1] * b[3]),
      a[0] * b[3] + b[0] * a[3] - (a[1] * b[2] - a[2] * b[1]),
  };
}

Quat quat_neg(const Quat& a) { return Quat{-a[0], -a[1], -a[2], -a[3]}; }

double quat_dist(const Quat& a, const Quat& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double quat_dist_signless(const Quat& a, const Quat& b) {
  return std::min(quat_dist(a, b), quat_dist(a, quat_neg(b)));
}

// Nonnegative scalar part; ties broken by the first nonzero bivector
// coefficient being positive.
Quat canonical_sign(Quat q) {
  for (double v : q) {
    if (std::abs(v) < 1e-14) continue;
    if (v < 0) return quat_neg(q);
    return q;
  }
  return q;
}

void check_unit_vector(const Multivector& n, double tol, const char* what) {
  if (!(n.algebra() == pauli_algebra()))
    throw std::invalid_argument(std::string(what) + ": expects a Cl(3) element");
  for (unsigned mask = 0; mask < n.size(); ++mask)
    if (blade_grade(mask) != 1 && std::abs(n[mask]) > 1e-12)
      throw std::invalid_argument(std::string(what) + ": axis is not a grade-1 vector");
  if (std::abs(coeff_norm(n) - 1.0) > tol)
    throw std::invalid_argument(std::string(what) + ": axis is not unit length");
}

}  // namespace

Rotor::Rotor(const Multivector& mv) : mv_(mv) {
  if (!(mv.algebra() == pauli_algebra()))
    throw std::invalid_argument("rotor must live in Cl(3)");
  for (unsigned mask : {0b001u, 0b010u, 0b100u, 0b111u})
    if (std::abs(mv[mask]) > 1e-12)
      throw std::invalid_argument("rotor must be an even multivector");
  const Multivector unit = gp(mv, reversion(mv));
  if (std::abs(unit[0] - 1.0) > 1e-12)
    throw std::invalid_argument("rotor is not normalized: R R^dagger != 1");
}

Rotor Rotor::from_components(const std::array<double, 4>& c) {
  Multivector m = Multivector::scalar(pauli_algebra(), c[0]);
  for (int k = 1; k <= 3; ++k) m += i_sigma(k) * c[k];
  return Rotor(m);
}

std::array<double, 4> Rotor::components() const {
  return {mv_[0], mv_[0b110], -mv_[0b101], mv_[0b011]};
}

Rotor Rotor::operator-() const { return Rotor(-mv_); }

Rotor rotor_from_axis_angle(const Multivector& axis, double theta) {
  check_unit_vector(axis, 1e-9, "rotor_from_axis_angle");
  const Multivector bivec = gp(pseudoscalar(pauli_algebra()), axis) * (-theta / 2.0);
  return Rotor(exp_bivector(bivec));
}

Multivector rotate_vector(const Rotor& r, const Multivector& a) {
  for (unsigned mask = 0; mask < a.size(); ++mask)
    if (blade_grade(mask) != 1 && std::abs(a[mask]) > 1e-12 * std::max(1.0, coeff_norm(a)))
      throw std::invalid_argument("rotate_vector: input is not a grade-1 vector");
  return gp(gp(r.mv(), a), reversion(r.mv()));
}

std::array<Multivector, 3> bivector_basis() {
  return {gp(sigma(2), sigma(3)), gp(sigma(3), sigma(1)), gp(sigma(1), sigma(2))};
}

Multivector commutator(const Multivector& x, const Multivector& y) {
  return gp(x, y) - gp(y, x);
}

Rotor rotor_from_su2(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw std::invalid_argument("rotor_from_su2: expects a 2x2 matrix");
  if (!u.is_unitary(1e-9) || std::abs(u.det2() - cplx{1.0, 0.0}) > 1e-9)
    throw std::invalid_argument("rotor_from_su2: matrix is not special unitary");
  const double r0 = (u(0, 0) + u(1, 1)).real() / 2.0;
  const double r1 = (u(0, 1) + u(1, 0)).imag() / 2.0;
  const double r2 = (u(0, 1) - u(1, 0)).real() / 2.0;
  const double r3 = (u(0, 0) - u(1, 1)).imag() / 2.0;
  return Rotor::from_components({r0, r1, r2, r3});
}

ComplexMatrix su2_from_rotor(const Rotor& r) {
  const auto c = r.components();
  ComplexMatrix u(2, 2);
  u(0, 0) = cplx{c[0], c[3]};
  u(0, 1) = cplx{c[2], c[1]};
  u(1, 0) = cplx{-c[2], c[1]};
  u(1, 1) = cplx{c[0], -c[3]};
  return u;
}

namespace {

// Rotor of a unitary with arbitrary determinant phase: divide out
// sqrt(det), then fix the sign convention.
Rotor rotor_from_unitary(const ComplexMatrix& u) {
  const cplx d = u.det2();
  const cplx root = std::sqrt(d);
  const ComplexMatrix su = (1.0 / root) * u;
  const Rotor r = rotor_from_su2(su);
  return Rotor::from_components(canonical_sign(r.components()));
}

}  // namespace

std::pair<Rotor, Rotor> universality_rotors() {
  const ComplexMatrix h = gate_matrix(Gate{GateTag::H});
  const ComplexMatrix z_m4 = gate_matrix(Gate{GateTag::ZPower, -0.25});
  const ComplexMatrix z_p4 = gate_matrix(Gate{GateTag::ZPower, 0.25});
  const ComplexMatrix x_p4 = h * z_p4 * h;
  const ComplexMatrix u1 = z_m4 * x_p4;
  const ComplexMatrix h_half = gate_matrix(Gate{GateTag::HPower, 0.5});
  const ComplexMatrix h_mhalf = gate_matrix(Gate{GateTag::HPower, -0.5});
  const ComplexMatrix u2 = h_mhalf * u1 * h_half;
  return {rotor_from_unitary(u1), rotor_from_unitary(u2)};
}

AxisAngle extract_axis_angle(const Rotor& r) {
  const auto c = r.components();
  const double bn = std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
  if (bn <= 1e-12)
    throw std::invalid_argument("extract_axis_angle: degenerate rotor, axis undefined");
  const double lambda = std::acos(std::clamp(c[0], -1.0, 1.0)) / kPi;
  Multivector axis(pauli_algebra());
  for (int k = 1; k <= 3; ++k) axis += sigma(k) * (c[k] / bn);
  return AxisAngle{axis, lambda * kPi, lambda};
}

EulerAngles euler_decompose(const Rotor& target, const Multivector& n1,
                            const Multivector& n2) {
  check_unit_vector(n1, 1e-9, "euler_decompose");
  check_unit_vector(n2, 1e-9, "euler_decompose");
  if (std::abs(scalar_part(gp(n1, n2))) > 1e-9)
    throw std::invalid_argument("euler_decompose: axes are not orthogonal");

  const Multivector i = pseudoscalar(pauli_algebra());
  const Multivector n3 = -gp(i, wedge(n1, n2));  // third frame vector n1 x n2
  const Multivector in1 = gp(i, n1);
  const Multivector in2 = gp(i, n2);
  const Multivector in3 = gp(i, n3);

  const double c0 = target.scalar();
  const Multivector biv = grade_project(target.mv(), 2);
  const double c1 = coeff_dot(biv, in1);
  const double c2 = coeff_dot(biv, in2);
  const double c3 = coeff_dot(biv, in3);
  if (max_abs_diff(biv, in1 * c1 + in2 * c2 + in3 * c3) > 1e-10)
    throw std::invalid_argument("euler_decompose: axes cannot reconstruct the target");

  const double cb = std::hypot(c0, c1);  // cos(beta) >= 0
  const double sb = std::hypot(c2, c3);  // sin(beta) >= 0
  const double beta = std::atan2(sb, cb);
  const double u = cb > 1e-15 ? std::atan2(c1, c0) : 0.0;  // alpha + gamma
  // gamma - alpha; for sin(beta) = 0 fold the whole n1 angle into alpha
  const double v = sb > 1e-15 ? std::atan2(c3, c2) : -u;
  return EulerAngles{(u - v) / 2.0, beta, (u + v) / 2.0};
}

Rotor euler_compose(const Multivector& n1, const Multivector& n2,
                    const EulerAngles& angles) {
  const Multivector i = pseudoscalar(pauli_algebra());
  const Multivector r1 = exp_bivector(gp(i, n1) * angles.alpha);
  const Multivector r2 = exp_bivector(gp(i, n2) * angles.beta);
  const Multivector r3 = exp_bivector(gp(i, n1) * angles.gamma);
  return Rotor(gp(gp(r1, r2), r3));
}

double rotor_distance(const Rotor& a, const Rotor& b) {
  return quat_dist_signless(a.components(), b.components());
}

GateWord approximate_with_ht(const Rotor& target, int max_len) {
  if (max_len < 0 || max_len > 20)
    throw std::invalid_argument("approximate_with_ht: max_len must be in 0..20");

  static const Quat kLetterH{0.0, -kInvSqrt2, 0.0, -kInvSqrt2};  // exp(-i pi/2 (s1+s3)/sqrt2)
  static const Quat kLetterT{std::cos(kPi / 8.0), 0.0, 0.0, -std::sin(kPi / 8.0)};
  const Quat t = target.components();

  struct Entry {
    Quat v;
    std::int32_t parent;
    char letter;
  };
  struct KeyHash {
    std::size_t operator()(const std::array<std::int64_t, 4>& k) const {
      std::size_t h = 14695981039346656037ull;
      for (auto x : k) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  auto key_of = [](const Quat& q) {
    const Quat c = canonical_sign(q);
    std::array<std::int64_t, 4> k{};
    for (int i = 0; i < 4; ++i) k[i] = std::llround(c[i] * 1e6);
    return k;
  };

  std::vector<Entry> arena;
  std::unordered_map<std::array<std::int64_t, 4>, std::int32_t, KeyHash> seen;
  arena.push_back(Entry{Quat{1.0, 0.0, 0.0, 0.0}, -1, 0});
  seen.emplace(key_of(arena[0].v), 0);

  std::int32_t best = 0;
  double best_err = quat_dist_signless(arena[0].v, t);

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (int len = 1; len <= max_len && best_err > 0.0; ++len) {
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (char letter : {'H', 'T'}) {
        const Quat v = quat_mul(arena[idx].v, letter == 'H' ? kLetterH : kLetterT);
        const auto key = key_of(v);
        if (!seen.emplace(key, static_cast<std::int32_t>(arena.size())).second) continue;
        arena.push_back(Entry{v, static_cast<std::int32_t>(idx), letter});
        const double err = quat_dist_signless(v, t);
        if (err < best_err) {
          best_err = err;
          best = static_cast<std::int32_t>(arena.size()) - 1;
        }
      }
    }
    level_begin = level_end;
    level_end = arena.size();
  }

  std::string word;
  for (std::int32_t at = best; at > 0; at = arena[at].parent) word += arena[at].letter;
  std::reverse(word.begin(), word.end());
  return GateWord{word, Rotor::from_components(arena[best].v), best_err};
}

}  // namespace gaqc
