#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gaqc/msta.hpp"
#include "test_util.hpp"

using namespace gaqc;
using gaqc::testing::random_spinor;
using gaqc::testing::random_state;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Multivector is(int k, int factor) { return i_sigma(k, factor, 2); }
}  // namespace

TEST_CASE("correlator") {
  CHECK(approx_equal(correlator(1), Multivector::scalar(pauli_product(1), 1.0), 0.0));

  Multivector e2 = Multivector::scalar(pauli_product(2), 1.0) - gp(is(3, 0), is(3, 1));
  e2 *= 0.5;
  CHECK(approx_equal(correlator(2), e2, 0.0));

  for (int n : {2, 3}) {
    const Multivector e = correlator(n);
    CHECK(max_abs_diff(gp(e, e), e) == 0.0);
  }
}

TEST_CASE("complex structure") {
  CHECK(approx_equal(complex_structure(1), i_sigma(3), 0.0));
  CHECK(approx_equal(complex_structure(2), (is(3, 0) + is(3, 1)) * 0.5, 0.0));

  for (int n : {2, 3}) {
    const Multivector j = complex_structure(n);
    CHECK(max_abs_diff(gp(j, j), -correlator(n)) == 0.0);
    // J does not depend on which particle index is used
    for (int a = 1; a < n; ++a)
      CHECK(max_abs_diff(gp(correlator(n), i_sigma(3, a, n)), j) == 0.0);
  }
}

TEST_CASE("computational basis encoding") {
  const Multivector e = correlator(2);
  CHECK(approx_equal(encode_basis("00").mv(), e, 0.0));
  CHECK(approx_equal(encode_basis("01").mv(), gp(-is(2, 1), e), 0.0));
  CHECK(approx_equal(encode_basis("10").mv(), gp(-is(2, 0), e), 0.0));
  CHECK(approx_equal(encode_basis("11").mv(), gp(gp(is(2, 0), is(2, 1)), e), 0.0));
  CHECK(approx_equal(encode_basis("0").mv(), Multivector::scalar(pauli_product(1), 1.0), 0.0));
  CHECK(approx_equal(encode_basis("1").mv(), -i_sigma(2), 0.0));
  CHECK(encode_basis("11").normalized());
  CHECK_THROWS_AS(encode_basis("012"), std::invalid_argument);
  CHECK_THROWS_AS(encode_basis("02"), std::invalid_argument);
}

TEST_CASE("bell states") {
  const Multivector one = Multivector::scalar(pauli_product(2), 1.0);
  const Multivector tail = one - gp(is(3, 0), is(3, 1));
  const double pref = std::pow(2.0, -1.5);

  CHECK(approx_equal(bell_state(1).mv(),
                     gp(one + gp(is(2, 0), is(2, 1)), tail) * pref, 0.0));
  // Bell_4 is the singlet
  CHECK(approx_equal(bell_state(4).mv(), gp(is(2, 0) - is(2, 1), tail) * pref, 0.0));

  const SpinorVec s3 = mv_to_spinor(bell_state(3));
  CHECK(std::abs(s3.amp[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s3.amp[1]) < 1e-15);
  CHECK(std::abs(s3.amp[2]) < 1e-15);
  CHECK(std::abs(s3.amp[3] + kInvSqrt2) < 1e-15);

  const SpinorVec s4 = mv_to_spinor(bell_state(4));
  CHECK(std::abs(s4.amp[1] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s4.amp[2] + kInvSqrt2) < 1e-15);

  for (int k = 1; k <= 4; ++k) CHECK(bell_state(k).normalized());
  CHECK_THROWS_AS(bell_state(0), std::invalid_argument);
  CHECK_THROWS_AS(bell_state(5), std::invalid_argument);
}

TEST_CASE("spinor translation, one qubit") {
  CHECK(approx_equal(spinor_to_mv({1, {{1, 0}, {0, 0}}}).mv(),
                     Multivector::scalar(pauli_product(1), 1.0), 0.0));
  CHECK(approx_equal(spinor_to_mv({1, {{0, 0}, {1, 0}}}).mv(), -i_sigma(2), 0.0));
  CHECK(approx_equal(spinor_to_mv({1, {{kInvSqrt2, 0}, {kInvSqrt2, 0}}}).mv(),
                     (Multivector::scalar(pauli_product(1), 1.0) - i_sigma(2)) * kInvSqrt2,
                     1e-16));

  // a0 + a2 is2 -> (a0, -a2)
  const Multivector m = Multivector::scalar(pauli_product(1), 0.6) + i_sigma(2) * 0.8;
  const SpinorVec s = mv_to_spinor(MstaState::from_mv(1, m));
  CHECK(std::abs(s.amp[0] - cplx{0.6, 0.0}) == 0.0);
  CHECK(std::abs(s.amp[1] - cplx{-0.8, 0.0}) == 0.0);
}

TEST_CASE("spinor translation round trips") {
  std::mt19937 rng(41);
  for (int n : {1, 2}) {
    for (int it = 0; it < 50; ++it) {
      const SpinorVec s = random_spinor(n, rng);
      const SpinorVec back = mv_to_spinor(spinor_to_mv(s));
      CHECK(gaqc::testing::spinor_diff(back, s.amp) < 1e-14);
    }
  }
}

TEST_CASE("translation is real-linear") {
  std::mt19937 rng(43);
  for (int n : {1, 2}) {
    SpinorVec s = random_spinor(n, rng);
    SpinorVec t = random_spinor(n, rng);
    const double a = 0.37, b = -1.21;
    SpinorVec mix{n, s.amp};
    for (std::size_t i = 0; i < mix.amp.size(); ++i)
      mix.amp[i] = a * s.amp[i] + b * t.amp[i];
    const Multivector lhs = spinor_to_mv(mix).mv();
    const Multivector rhs = spinor_to_mv(s).mv() * a + spinor_to_mv(t).mv() * b;
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("reduced basis spans eight independent spinors") {
  const Multivector e = correlator(2);
  const Multivector basis[8] = {
      Multivector::scalar(pauli_product(2), 1.0),
      is(1, 1), is(2, 1), is(3, 1),
      is(1, 0),
      gp(is(1, 0), is(1, 1)), gp(is(1, 0), is(2, 1)), gp(is(1, 0), is(3, 1))};

  double mat[8][8];
  for (int col = 0; col < 8; ++col) {
    const SpinorVec s = mv_to_spinor(MstaState::from_mv(2, gp(basis[col], e)));
    for (int b = 0; b < 4; ++b) {
      mat[2 * b][col] = s.amp[b].real();
      mat[2 * b + 1][col] = s.amp[b].imag();
    }
  }
  // Gaussian elimination with partial pivoting; all pivots must be sound
  double min_pivot = 1e9;
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    for (int r = col + 1; r < 8; ++r)
      if (std::abs(mat[r][col]) > std::abs(mat[piv][col])) piv = r;
    for (int c = 0; c < 8; ++c) std::swap(mat[col][c], mat[piv][c]);
    min_pivot = std::min(min_pivot, std::abs(mat[col][col]));
    if (mat[col][col] == 0.0) break;
    for (int r = col + 1; r < 8; ++r) {
      const double f = mat[r][col] / mat[col][col];
      for (int c = col; c < 8; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  CHECK(min_pivot > 1e-9);
}

TEST_CASE("structural invariants of states") {
  std::mt19937 rng(47);
  const Multivector e = correlator(2);
  for (int it = 0; it < 25; ++it) {
    const MstaState m = random_state(2, rng);
    CHECK(max_abs_diff(gp(m.mv(), is(3, 0)), gp(m.mv(), is(3, 1))) < 1e-12);
    CHECK(max_abs_diff(gp(m.mv(), e), m.mv()) < 1e-15);
  }
}

TEST_CASE("reduced-basis identities") {
  const Multivector e = correlator(2);
  auto lhs_rhs = [&](const Multivector& a, const Multivector& b) {
    CHECK(max_abs_diff(gp(a, e), gp(b, e)) == 0.0);
  };
  lhs_rhs(Multivector::scalar(pauli_product(2), 1.0), -gp(is(3, 0), is(3, 1)));
  lhs_rhs(is(1, 1), -gp(is(3, 0), is(2, 1)));
  lhs_rhs(is(2, 1), gp(is(3, 0), is(1, 1)));
  lhs_rhs(is(3, 1), is(3, 0));
  lhs_rhs(is(1, 0), -gp(is(2, 0), is(3, 1)));
  lhs_rhs(gp(is(1, 0), is(1, 1)), -gp(is(2, 0), is(2, 1)));
  lhs_rhs(gp(is(1, 0), is(2, 1)), gp(is(2, 0), is(1, 1)));
  lhs_rhs(gp(is(1, 0), is(3, 1)), is(2, 0));
}

TEST_CASE("imaginary unit as right multiplication by J") {
  CHECK(approx_equal(apply_imaginary(encode_basis("0")).mv(), i_sigma(3), 0.0));
  CHECK(approx_equal(apply_imaginary(encode_basis("00")).mv(), complex_structure(2), 0.0));

  std::mt19937 rng(53);
  for (int n : {1, 2}) {
    for (int it = 0; it < 20; ++it) {
      const MstaState m = random_state(n, rng);
      const SpinorVec before = mv_to_spinor(m);
      const SpinorVec after = mv_to_spinor(apply_imaginary(m));
      for (std::size_t i = 0; i < before.amp.size(); ++i)
        CHECK(std::abs(after.amp[i] - cplx{0, 1} * before.amp[i]) < 1e-14);
    }
    const MstaState m = random_state(n, rng);
    const MstaState four =
        apply_imaginary(apply_imaginary(apply_imaginary(apply_imaginary(m))));
    CHECK(max_abs_diff(four.mv(), m.mv()) < 1e-14);
  }
}

TEST_CASE("state validation rejects malformed multivectors") {
  CHECK_THROWS_AS(MstaState::from_mv(1, sigma(1)), std::invalid_argument);
  // even but not phase-correlated
  CHECK_THROWS_AS(MstaState::from_mv(2, is(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(MstaState::from_mv(3, Multivector(pauli_product(3))), std::invalid_argument);
  CHECK_THROWS_AS(spinor_to_mv(SpinorVec{1, {{1, 0}}}), std::invalid_argument);
  // a valid but unnormalized state keeps the flag off
  CHECK_FALSE(spinor_to_mv(SpinorVec{1, {{2, 0}, {0, 0}}}).normalized());
}
