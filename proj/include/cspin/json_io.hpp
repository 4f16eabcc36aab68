#pragma once

#include <json.hpp>

#include "cspin/induced.hpp"
#include "cspin/orbits.hpp"

namespace cspin::io {

using nlohmann::json;

json to_json(Complex z);
json to_json(const Mat2& m);
json to_json(const Mat4& m);
json to_json(const ComplexFourVector& v);
json to_json(const SpinElement& s);
json to_json(const IspinElement& g);
json to_json(const OrbitClass& c);
json to_json(const BoxDomain& b);
json to_json(const OrbitChartPoint& p);
json to_json(const WitnessEntry& e);
json to_json(const UnitarityReport& r);

/// Finite doubles are stored with shortest round-trip digits; NaN and infinities become null.
json real_to_json(double x);

/// Radon-Nikodym record {s, p, value}.
json rn_record(const SpinElement& s, const OrbitChartPoint& p, double value);

/// Throws ParseError on malformed input.
template <class T>
T from_json(const json& j);

template <> Complex from_json<Complex>(const json& j);
template <> Mat2 from_json<Mat2>(const json& j);
template <> Mat4 from_json<Mat4>(const json& j);
template <> ComplexFourVector from_json<ComplexFourVector>(const json& j);
template <> SpinElement from_json<SpinElement>(const json& j);
template <> IspinElement from_json<IspinElement>(const json& j);
template <> OrbitClass from_json<OrbitClass>(const json& j);
template <> BoxDomain from_json<BoxDomain>(const json& j);
template <> OrbitChartPoint from_json<OrbitChartPoint>(const json& j);

/// Parses text, mapping syntax errors to ParseError.
json parse(std::string_view text);

}  // namespace cspin::io
