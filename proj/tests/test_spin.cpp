#include <doctest.h>

#include "cspin/error.hpp"
#include "cspin/orbits.hpp"
#include "cspin/sampling.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace cspin;
using testutil::dist;
using testutil::I;
using testutil::mat2;
using testutil::vec;

namespace {

const Mat4 kEta = Mat4::diagonal({1.0, -1.0, -1.0, -1.0});

}  // namespace

TEST_SUITE("spin") {
  TEST_CASE("sigma_map examples") {
    CHECK(sigma_map(ComplexFourVector::basis(0)) == Mat2::identity());
    const Complex z_m{0.3, -1.2};
    CHECK(sigma_map(vec(z_m, 0, 0, 0)) == z_m * Mat2::identity());
    const auto v = vec(3, 0, 0, 1);
    CHECK(det2(sigma_map(v)) == Complex{8.0});
    CHECK(eta(v, v) == Complex{8.0});
  }

  TEST_CASE("sigma_unmap examples and round trip") {
    CHECK(sigma_unmap(Mat2::identity()) == ComplexFourVector::basis(0));
    CHECK(sigma_unmap(pauli(3)) == ComplexFourVector::basis(3));
    Rng rng(1);
    for (int k = 0; k < 10000; ++k) {
      Mat2 m;
      for (auto& x : m.data) x = rng.disk(1.0);
      CHECK(distance(sigma_map(sigma_unmap(m)), m) <= 1e-15);
      const auto v = random_vector(rng);
      CHECK(dist(sigma_unmap(sigma_map(v)), v) <= 1e-15);
      CHECK(std::abs(det2(sigma_map(v)) - eta(v, v)) <= 1e-12);
    }
  }

  TEST_CASE("SpinElement construction checks determinants") {
    CHECK_NOTHROW(SpinElement::make(Mat2::identity(), Mat2::diagonal({2.0, 0.5})));
    try {
      SpinElement::make(Mat2::diagonal({2.0, 1.0}), Mat2::identity());
      FAIL("det 2 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidSpin);
    }
  }

  TEST_CASE("act_vector examples") {
    Rng rng(2);
    const auto v = random_vector(rng);
    CHECK(dist(act_vector(SpinElement::identity(), v), v) <= 1e-15 * std::max(1.0, norm(v)));

    const Complex z_m{2.0, 1.0};
    const auto base = vec(z_m, 0, 0, 0);
    const SpinElement flip = SpinElement::make(-Mat2::identity(), Mat2::identity());
    CHECK(dist(act_vector(flip, base), -base) == 0.0);

    Mat2 m = mat2(1.5, 0.2 + 0.1 * I, -0.7, 0.4);
    m = m * (z_m / principal_sqrt(det2(m)));
    const SpinElement s = SpinElement::make(z_m * inv2(m), Mat2::identity());
    CHECK(dist(act_vector(s, sigma_unmap(m)), base) <= 1e-14);
  }

  TEST_CASE("group laws") {
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
      const SpinElement s = random_spin(rng, 1.0), t = random_spin(rng, 1.0);
      const auto v = random_vector(rng);
      CHECK(dist(s * spin_inv(s), SpinElement::identity()) <= 1e-12 * frobenius_norm(s.a()) * frobenius_norm(s.b()));
      CHECK(dist(s * SpinElement::identity(), s) == 0.0);
      const auto two_step = act_vector(s, act_vector(t, v));
      CHECK(dist(act_vector(s * t, v), two_step) <= 1e-12 * std::max(1.0, norm(two_step)));
    }
  }

  TEST_CASE("to_weyl examples") {
    CHECK(to_weyl(SpinElement::identity()) == Mat4::identity());
    Rng rng(4);
    for (int k = 0; k < 500; ++k) {
      const SpinElement s = random_spin(rng, 0.7);
      const Mat4 w = to_weyl(s);
      CHECK(std::abs(oracle::det(w) - 1.0) <= 1e-10);
      const auto v = random_vector(rng);
      const Mat4 lhs = w * minkowski_embed(v).matrix * to_weyl(spin_inv(s));
      const Mat4 rhs = minkowski_embed(act_vector(s, v)).matrix;
      CHECK(distance(lhs, rhs) <= 1e-12 * std::max(1.0, frobenius_norm(rhs)));
      CHECK(dist(from_weyl(w), s) == 0.0);
    }
  }

  TEST_CASE("from_weyl rejects off-diagonal blocks") {
    try {
      from_weyl(gamma_weyl(0).matrix);
      FAIL("off-diagonal Weyl matrix accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidSpin);
    }
  }

  TEST_CASE("covering_so4") {
    CHECK(covering_so4(SpinElement::identity()) == Mat4::identity());
    const SpinElement minus = SpinElement::make(-Mat2::identity(), -Mat2::identity());
    CHECK(covering_so4(minus) == Mat4::identity());
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
      const SpinElement s = random_spin(rng, 0.5), t = random_spin(rng, 0.5);
      const Mat4 l = covering_so4(s);
      CHECK(distance(transpose(l) * kEta * l, kEta) <= 1e-9);
      CHECK(std::abs(oracle::det(l) - 1.0) <= 1e-9);
      const Mat4 lt = covering_so4(t);
      CHECK(distance(covering_so4(s * t), l * lt) <= 1e-9 * frobenius_norm(l) * frobenius_norm(lt));
      const auto v = random_vector(rng);
      const auto w = act_vector(s, v);
      CHECK(std::abs(eta(w, w) - eta(v, v)) <= 1e-10 * std::max(1.0, norm(w) * norm(w)));
    }
  }

  TEST_CASE("generator examples") {
    const Mat4 g12 = generator(1, 2);
    CHECK(distance(g12, 0.5 * (gamma_weyl(1) * gamma_weyl(2)).matrix) == 0.0);
    CHECK(frobenius_norm(block(g12, 0, 1)) == 0.0);
    CHECK(frobenius_norm(block(g12, 1, 0)) == 0.0);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu) CHECK(generator(mu, nu) == -generator(nu, mu));
    CHECK(expm(0.0 * g12) == Mat4::identity());
    try {
      generator(1, 1);
      FAIL("diagonal index pair accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
    try {
      generator(0, 4);
      FAIL("index 4 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }

  TEST_CASE("random_spin") {
    CHECK(dist(random_spin(7, 0.0), SpinElement::identity()) == 0.0);
    const SpinElement a = random_spin(42, 1.0), b = random_spin(42, 1.0);
    CHECK(a == b);
    Rng rng(6);
    for (int k = 0; k < 1000; ++k) {
      const SpinElement s = random_spin(rng, 1.5);
      CHECK(std::abs(det2(s.a()) - 1.0) <= 1e-10);
      CHECK(std::abs(det2(s.b()) - 1.0) <= 1e-10);
    }
    try {
      random_spin(1, -1.0);
      FAIL("negative scale accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }

  TEST_CASE("ispin examples") {
    Rng rng(7);
    const auto z = random_vector(rng), w = random_vector(rng);
    const IspinElement a{z, SpinElement::identity()}, b{w, SpinElement::identity()};
    const IspinElement ab = ispin_mul(a, b);
    CHECK(dist(ab.z, z + w) <= 1e-15 * std::max(1.0, norm(z + w)));
    CHECK(ab.s == SpinElement::identity());

    const SpinElement s = random_spin(rng, 1.0);
    const IspinElement conj =
        ispin_mul(ispin_mul(IspinElement{{}, s}, b), IspinElement{{}, spin_inv(s)});
    CHECK(dist(conj.z, act_vector(s, w)) <= 1e-13 * std::max(1.0, norm(conj.z)));
    CHECK(dist(conj.s, SpinElement::identity()) <= 1e-12 * frobenius_norm(s.a()) * frobenius_norm(s.b()));

    const IspinElement g = random_ispin(rng, 0.5);
    const IspinElement e = ispin_mul(g, ispin_inv(g));
    CHECK(norm(e.z) <= 1e-13);
    CHECK(dist(e.s, SpinElement::identity()) <= 1e-13);
  }

  TEST_CASE("ispin associativity") {
    Rng rng(8);
    for (int k = 0; k < 1000; ++k) {
      const auto g = random_ispin(rng, 0.5), h = random_ispin(rng, 0.5), l = random_ispin(rng, 0.5);
      const auto lhs = ispin_mul(ispin_mul(g, h), l), rhs = ispin_mul(g, ispin_mul(h, l));
      CHECK(dist(lhs.z, rhs.z) + dist(lhs.s, rhs.s) <= 1e-12 * std::max(1.0, norm(lhs.z) + frobenius_norm(lhs.s.a())));
    }
  }
}
