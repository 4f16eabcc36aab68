#include <doctest.h>

#include "cspin/error.hpp"
#include "cspin/linalg.hpp"
#include "cspin/random.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace cspin;
using testutil::I;
using testutil::mat2;

namespace {

Mat2 random_matrix(Rng& rng, double radius = 1.0) {
  Mat2 m;
  for (auto& x : m.data) x = rng.disk(radius);
  return m;
}

Mat2 random_unit_det(Rng& rng) {
  for (;;) {
    const Mat2 m = random_matrix(rng);
    const Complex d = det2(m);
    if (std::abs(d) > 0.1) return m / principal_sqrt(d);
  }
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("det2 examples") {
    CHECK(det2(Mat2::identity()) == Complex{1.0});
    CHECK(det2(Mat2::diagonal({2.0, 0.5})) == Complex{1.0});
    CHECK(det2(mat2(0, 1, 1, 0)) == Complex{-1.0});
  }

  TEST_CASE("inv2 examples") {
    CHECK(inv2(Mat2::identity()) == Mat2::identity());
    CHECK(distance(inv2(Mat2::diagonal({2.0, 0.5})), Mat2::diagonal({0.5, 2.0})) == 0.0);
    try {
      inv2(Mat2{});
      FAIL("zero matrix inverted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularMatrix);
    }
  }

  TEST_CASE("inv2 reconstructs identity on random matrices") {
    Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
      const Mat2 m = random_unit_det(rng);
      CHECK(distance(m * inv2(m), Mat2::identity()) <= 1e-12 * std::max(1.0, frobenius_norm(m) * frobenius_norm(m)));
    }
  }

  TEST_CASE("principal_sqrt examples") {
    CHECK(principal_sqrt(4.0) == Complex{2.0});
    CHECK(principal_sqrt(-1.0) == I);
    CHECK(std::abs(principal_sqrt(2.0 * I) - Complex{1.0, 1.0}) <= 1e-15);
    CHECK(principal_sqrt(Complex{-4.0, -0.0}) == Complex{0.0, 2.0});
    CHECK(principal_sqrt(0.0) == Complex{});
  }

  TEST_CASE("principal_sqrt squares back with non-negative real part") {
    Rng rng(1);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const Complex z = rng.disk(10.0);
      const Complex r = principal_sqrt(z);
      CHECK(r.real() >= 0.0);
      worst = std::max(worst, std::abs(r * r - z));
    }
    CHECK(worst <= 1e-14 * 10.0);
  }

  TEST_CASE("principal_sqrt agrees with std::sqrt off the cut") {
    Rng rng(2);
    for (int k = 0; k < 1000; ++k) {
      const Complex z = rng.disk(5.0);
      CHECK(std::abs(principal_sqrt(z) - std::sqrt(z)) <= 1e-14);
    }
  }

  TEST_CASE("sqrt_posdef2 examples") {
    CHECK(distance(sqrt_posdef2(Mat2::identity()), Mat2::identity()) <= 1e-15);
    CHECK(distance(sqrt_posdef2(Mat2::diagonal({4.0, 0.25})), Mat2::diagonal({2.0, 0.5})) <= 1e-15);
    try {
      sqrt_posdef2(Mat2::diagonal({1.0, -1.0}));
      FAIL("indefinite input accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPositiveDefinite);
    }
    try {
      sqrt_posdef2(mat2(1, I, 0, 1));
      FAIL("non-Hermitian input accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPositiveDefinite);
    }
  }

  TEST_CASE("sqrt_posdef2 squares back and matches the eigendecomposition") {
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
      const Mat2 a = random_unit_det(rng);
      const Mat2 p = a * adjoint(a);
      const Mat2 s = sqrt_posdef2(p);
      CHECK(distance(s * s, p) <= 1e-10);
      CHECK(distance(s, oracle::sqrt_posdef(p)) <= 1e-10);
      CHECK(distance(s, adjoint(s)) <= 1e-12);
    }
  }

  TEST_CASE("polar2 examples") {
    const Mat2 p0 = sqrt_posdef2(mat2(2, I, -I, 1));
    const Polar a = polar2(p0);
    CHECK(distance(a.positive, p0) <= 1e-14);
    CHECK(distance(a.unitary, Mat2::identity()) <= 1e-14);

    const double t = 0.7;
    const Mat2 u0 = mat2(std::cos(t), I * std::sin(t), I * std::sin(t), std::cos(t));
    const Polar b = polar2(u0);
    CHECK(distance(b.positive, Mat2::identity()) <= 1e-14);
    CHECK(distance(b.unitary, u0) <= 1e-14);
  }

  TEST_CASE("polar2 on random SL2 matches the eigendecomposition oracle") {
    Rng rng(4);
    for (int k = 0; k < 1000; ++k) {
      const Mat2 m = random_unit_det(rng);
      const Polar p = polar2(m);
      const oracle::Polar o = oracle::polar(m);
      CHECK(distance(p.positive * p.unitary, m) <= 1e-12);
      CHECK(distance(p.positive, adjoint(p.positive)) <= 1e-12);
      CHECK(distance(p.unitary * adjoint(p.unitary), Mat2::identity()) <= 1e-12);
      CHECK(std::abs(det2(p.positive) - 1.0) <= 1e-12);
      CHECK(std::abs(det2(p.unitary) - 1.0) <= 1e-12);
      CHECK(distance(p.positive, o.positive) <= 1e-10);
      CHECK(distance(p.unitary, o.unitary) <= 1e-10);
    }
  }

  TEST_CASE("expm examples") {
    CHECK(distance(expm(Mat2{}), Mat2::identity()) == 0.0);
    CHECK(distance(expm(Mat4{}), Mat4::identity()) == 0.0);
    const Mat4 d = expm(Mat4::diagonal({1.0, -2.0, I, 0.5}));
    const Mat4 expected = Mat4::diagonal({std::exp(1.0), std::exp(-2.0), std::exp(I), std::exp(0.5)});
    CHECK(distance(d, expected) <= 1e-14 * frobenius_norm(expected));
    CHECK(distance(expm(mat2(0, 1, 0, 0)), mat2(1, 1, 0, 1)) <= 1e-15);
  }

  TEST_CASE("expm matches the Eigen oracle and inverts") {
    Rng rng(5);
    for (int k = 0; k < 300; ++k) {
      Mat4 m;
      for (auto& x : m.data) x = rng.disk(1.0);
      m *= 10.0 * rng.uniform() / std::max(1.0, frobenius_norm(m));
      const Mat4 e = expm(m);
      const Mat4 o = oracle::expm(m);
      CHECK(distance(e, o) <= 1e-12 * frobenius_norm(o));
      if (frobenius_norm(m) <= 5.0) {
        const Mat4 prod = e * expm(-m);
        CHECK(distance(prod, Mat4::identity()) <= 1e-10);
      }
    }
    for (int k = 0; k < 300; ++k) {
      Mat2 m = random_matrix(rng, 3.0);
      CHECK(distance(expm(m), oracle::expm(m)) <= 1e-12 * frobenius_norm(oracle::expm(m)));
    }
  }

  TEST_CASE("det4 matches the Eigen oracle") {
    Rng rng(6);
    for (int k = 0; k < 200; ++k) {
      Mat4 m;
      for (auto& x : m.data) x = rng.disk(1.0);
      CHECK(std::abs(det4(m) - oracle::det(m)) <= 1e-13);
    }
    CHECK(det4(Mat4{}) == Complex{});
  }

  TEST_CASE("block helpers round-trip") {
    Rng rng(7);
    const Mat2 a = random_matrix(rng), b = random_matrix(rng), c = random_matrix(rng), d = random_matrix(rng);
    const Mat4 m = from_blocks(a, b, c, d);
    CHECK(block(m, 0, 0) == a);
    CHECK(block(m, 0, 1) == b);
    CHECK(block(m, 1, 0) == c);
    CHECK(block(m, 1, 1) == d);
  }
}
