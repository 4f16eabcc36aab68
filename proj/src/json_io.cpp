#include "cspin/json_io.hpp"

#include <cmath>
#include <string>

#include "cspin/error.hpp"

namespace cspin::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + ": expected a number");
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

template <std::size_t N>
json mat_to_json(const Mat<N>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < N; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <std::size_t N>
Mat<N> mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != N) fail("matrix: expected " + std::to_string(N) + " rows");
  Mat<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N) fail("matrix: expected " + std::to_string(N) + " columns");
    for (std::size_t c = 0; c < N; ++c) m(r, c) = from_json<Complex>(j[r][c]);
  }
  return m;
}

template <std::size_t N>
json reals(const std::array<double, N>& x) {
  json out = json::array();
  for (double v : x) out.push_back(real_to_json(v));
  return out;
}

std::array<double, 6> reals6(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 6) fail(std::string(what) + ": expected 6 reals");
  std::array<double, 6> out{};
  for (std::size_t k = 0; k < 6; ++k) out[k] = number(j[k], what);
  return out;
}

}  // namespace

json real_to_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json to_json(Complex z) { return json::array({real_to_json(z.real()), real_to_json(z.imag())}); }
json to_json(const Mat2& m) { return mat_to_json(m); }
json to_json(const Mat4& m) { return mat_to_json(m); }

json to_json(const ComplexFourVector& v) {
  json out = json::array();
  for (std::size_t mu = 0; mu < 4; ++mu) out.push_back(to_json(v[mu]));
  return out;
}

json to_json(const SpinElement& s) { return {{"a", to_json(s.a())}, {"b", to_json(s.b())}}; }
json to_json(const IspinElement& g) { return {{"z", to_json(g.z)}, {"s", to_json(g.s)}}; }

json to_json(const OrbitClass& c) {
  switch (c.kind) {
    case OrbitKind::ZeroPoint: return {{"tag", "zero"}};
    case OrbitKind::NullCone: return {{"tag", "null"}};
    case OrbitKind::Mass: return {{"tag", "mass"}, {"z2", to_json(c.z_squared)}};
  }
  return {};
}

json to_json(const BoxDomain& b) { return {{"lo", reals(b.lo)}, {"hi", reals(b.hi)}}; }

json to_json(const OrbitChartPoint& p) {
  return {{"v12", to_json(p.v12)}, {"v21", to_json(p.v21)}, {"v22", to_json(p.v22)}, {"z_m", to_json(p.z_m)}};
}

json to_json(const WitnessEntry& e) {
  return {{"v", to_json(e.v)},
          {"lhs", real_to_json(e.lhs)},
          {"rhs", real_to_json(e.rhs)},
          {"abs_err", real_to_json(e.abs_err)}};
}

json to_json(const UnitarityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  json rn = json::array();
  for (double x : r.rn_values) rn.push_back(real_to_json(x));
  return {{"rep", r.rep_name},
          {"rep_unitary", r.rep_unitary},
          {"entries", std::move(entries)},
          {"rn_values", std::move(rn)},
          {"max_abs_err", real_to_json(r.max_abs_err)},
          {"max_rn_deviation", real_to_json(r.max_rn_deviation)},
          {"certified", r.certified}};
}

json rn_record(const SpinElement& s, const OrbitChartPoint& p, double value) {
  return {{"s", to_json(s)}, {"p", to_json(p)}, {"value", real_to_json(value)}};
}

template <>
Complex from_json<Complex>(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail("complex: expected [re, im]");
  return {number(j[0], "complex real part"), number(j[1], "complex imaginary part")};
}

template <>
Mat2 from_json<Mat2>(const json& j) {
  return mat_from_json<2>(j);
}

template <>
Mat4 from_json<Mat4>(const json& j) {
  return mat_from_json<4>(j);
}

template <>
ComplexFourVector from_json<ComplexFourVector>(const json& j) {
  if (!j.is_array() || j.size() != 4) fail("four-vector: expected 4 complex entries");
  ComplexFourVector v;
  for (std::size_t mu = 0; mu < 4; ++mu) v[mu] = from_json<Complex>(j[mu]);
  return v;
}

template <>
SpinElement from_json<SpinElement>(const json& j) {
  const Mat2 a = from_json<Mat2>(field(j, "a"));
  const Mat2 b = from_json<Mat2>(field(j, "b"));
  try {
    return SpinElement::make(a, b);
  } catch (const Error& e) {
    fail(std::string("spin element: ") + e.what());
  }
}

template <>
IspinElement from_json<IspinElement>(const json& j) {
  return {from_json<ComplexFourVector>(field(j, "z")), from_json<SpinElement>(field(j, "s"))};
}

template <>
OrbitClass from_json<OrbitClass>(const json& j) {
  const json& tag = field(j, "tag");
  if (!tag.is_string()) fail("orbit class: tag must be a string");
  const auto t = tag.get<std::string>();
  if (t == "zero") return OrbitClass::zero();
  if (t == "null") return OrbitClass::null();
  if (t == "mass") return OrbitClass::mass(from_json<Complex>(field(j, "z2")));
  fail("orbit class: unknown tag '" + t + "'");
}

template <>
BoxDomain from_json<BoxDomain>(const json& j) {
  return {reals6(field(j, "lo"), "box lo"), reals6(field(j, "hi"), "box hi")};
}

template <>
OrbitChartPoint from_json<OrbitChartPoint>(const json& j) {
  OrbitChartPoint p;
  p.v12 = from_json<Complex>(field(j, "v12"));
  p.v21 = from_json<Complex>(field(j, "v21"));
  p.v22 = from_json<Complex>(field(j, "v22"));
  p.z_m = j.contains("z_m") ? from_json<Complex>(j["z_m"]) : Complex{1.0};
  return p;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

}  // namespace cspin::io
