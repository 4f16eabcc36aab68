#include <doctest.h>

#include <cmath>
#include <limits>

#include "cspin/error.hpp"
#include "cspin/json_io.hpp"
#include "cspin/sampling.hpp"
#include "util.hpp"

using namespace cspin;
using cspin::io::json;
using testutil::I;

namespace {

template <class F>
void expect_parse_error(F&& f) {
  try {
    f();
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

template <class T>
T reparse(const T& x) {
  return io::from_json<T>(io::parse(io::to_json(x).dump()));
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("bit-exact round trips") {
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
      const Complex z = rng.disk(1e3) * std::pow(10.0, rng.uniform(-300.0, 300.0));
      CHECK(reparse(z) == z);
      const auto v = random_vector(rng);
      CHECK(reparse(v) == v);
      const SpinElement s = random_spin(rng, 1.0);
      CHECK(reparse(s) == s);
      const IspinElement g = random_ispin(rng, 1.0);
      const IspinElement back = reparse(g);
      CHECK(back.z == g.z);
      CHECK(back.s == g.s);
      const Mat4 w = to_weyl(s);
      CHECK(reparse(w) == w);
      const OrbitChartPoint p{rng.disk(1.0), rng.disk(1.0), rng.disk(1.0) + 2.0, random_mass(rng)};
      const OrbitChartPoint q = reparse(p);
      CHECK(q.real_coords() == p.real_coords());
      CHECK(q.z_m == p.z_m);
    }
  }

  TEST_CASE("complex accepts a bare number") {
    CHECK(io::from_json<Complex>(json(2.5)) == Complex{2.5});
    CHECK(io::from_json<Complex>(io::parse("[0, -1]")) == -I);
  }

  TEST_CASE("orbit class tags") {
    CHECK(io::to_json(OrbitClass::zero())["tag"] == "zero");
    CHECK(io::to_json(OrbitClass::null())["tag"] == "null");
    const OrbitClass m = OrbitClass::mass(Complex{0.5, 3.0});
    CHECK(io::to_json(m)["tag"] == "mass");
    CHECK(reparse(m) == m);
    CHECK(reparse(OrbitClass::null()) == OrbitClass::null());
    expect_parse_error([] { io::from_json<OrbitClass>(io::parse(R"({"tag": "tachyon"})")); });
  }

  TEST_CASE("box domain") {
    const BoxDomain b = default_box();
    const BoxDomain c = reparse(b);
    CHECK(c.lo == b.lo);
    CHECK(c.hi == b.hi);
  }

  TEST_CASE("non-finite reals become null") {
    CHECK(io::real_to_json(std::numeric_limits<double>::quiet_NaN()).is_null());
    CHECK(io::real_to_json(-std::numeric_limits<double>::infinity()).is_null());
    CHECK(io::real_to_json(0.25) == json(0.25));
  }

  TEST_CASE("rn_record") {
    const OrbitChartPoint p{0, 0, 1.0, 1.0};
    const json r = io::rn_record(SpinElement::identity(), p, 1.0);
    CHECK(r.contains("s"));
    CHECK(r.contains("p"));
    CHECK(r["value"] == json(1.0));
    CHECK(io::from_json<SpinElement>(r["s"]) == SpinElement::identity());
  }

  TEST_CASE("malformed input") {
    expect_parse_error([] { io::parse("[1, 2"); });
    expect_parse_error([] { io::from_json<Complex>(io::parse("[1, 2, 3]")); });
    expect_parse_error([] { io::from_json<Complex>(io::parse("\"one\"")); });
    expect_parse_error([] { io::from_json<ComplexFourVector>(io::parse("[[1,0],[0,0],[0,0]]")); });
    expect_parse_error([] { io::from_json<Mat2>(io::parse("[[[1,0],[0,0]]]")); });
    expect_parse_error([] { io::from_json<SpinElement>(io::parse(R"({"a": [[[1,0],[0,0]],[[0,0],[1,0]]]})")); });
    // det A = 2
    expect_parse_error([] {
      io::from_json<SpinElement>(io::parse(R"({"a": [[[2,0],[0,0]],[[0,0],[1,0]]], "b": [[[1,0],[0,0]],[[0,0],[1,0]]]})"));
    });
  }
}
