#include "cspin/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cspin/error.hpp"

namespace cspin {

std::array<double, 6> OrbitChartPoint::real_coords() const {
  return {v12.real(), v12.imag(), v21.real(), v21.imag(), v22.real(), v22.imag()};
}

OrbitChartPoint OrbitChartPoint::from_real_coords(const std::array<double, 6>& x, Complex z_m) {
  return {{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}, z_m};
}

double BoxDomain::min_abs_v22() const {
  const double re = std::clamp(0.0, lo[4], hi[4]);
  const double im = std::clamp(0.0, lo[5], hi[5]);
  return std::hypot(re, im);
}

void BoxDomain::validate() const {
  for (std::size_t k = 0; k < 6; ++k)
    if (!(lo[k] < hi[k]) || !std::isfinite(lo[k]) || !std::isfinite(hi[k]))
      throw Error(ErrorCode::InvalidArgument, "box bounds must satisfy lo < hi in coordinate " + std::to_string(k));
  if (!(min_abs_v22() > kChartFloor)) throw Error(ErrorCode::InvalidArgument, "box reaches the excluded set v22 = 0");
}

Mat2 chart_to_matrix(const OrbitChartPoint& p) {
  if (!(std::abs(p.v22) > kChartFloor)) throw Error(ErrorCode::ChartSingular, "|v22| below chart floor");
  Mat2 v;
  v(0, 0) = (p.z_m * p.z_m + p.v12 * p.v21) / p.v22;
  v(0, 1) = p.v12;
  v(1, 0) = p.v21;
  v(1, 1) = p.v22;
  return v;
}

OrbitChartPoint matrix_to_chart(const Mat2& v, Complex z_m, double tol) {
  if (!(std::abs(v(1, 1)) > kChartFloor)) throw Error(ErrorCode::ChartSingular, "|V22| below chart floor");
  const double nv = frobenius_norm(v);
  if (!(std::abs(det2(v) - z_m * z_m) <= tol * std::max(1.0, nv * nv)))
    throw Error(ErrorCode::OffOrbit, "det V differs from z_m^2");
  return {v(0, 1), v(1, 0), v(1, 1), z_m};
}

double density(const OrbitChartPoint& p) {
  if (!(std::abs(p.v22) > kChartFloor)) throw Error(ErrorCode::ChartSingular, "|v22| below chart floor");
  return 1.0 / std::norm(p.v22);
}

OrbitChartPoint pushforward_chart(const SpinElement& s, const OrbitChartPoint& p) {
  return matrix_to_chart(act_matrix(s, chart_to_matrix(p)), p.z_m);
}

double det6(std::array<std::array<double, 6>, 6> m) {
  double det = 1.0;
  for (std::size_t col = 0; col < 6; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 6; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < 6; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 6; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

double radon_nikodym_numeric(const SpinElement& s, const OrbitChartPoint& p, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  if (!(std::abs(p.v22) > kChartFloor + 6.0 * h))
    throw Error(ErrorCode::ChartSingular, "stencil reaches the excluded set");
  const OrbitChartPoint image = pushforward_chart(s, p);
  if (!(std::abs(image.v22) > kChartFloor + 6.0 * h))
    throw Error(ErrorCode::ChartSingular, "image stencil reaches the excluded set");

  const std::array<double, 6> x = p.real_coords();
  std::array<std::array<double, 6>, 6> jac{};
  for (std::size_t k = 0; k < 6; ++k) {
    auto plus = x, minus = x;
    plus[k] += h;
    minus[k] -= h;
    const auto fp = pushforward_chart(s, OrbitChartPoint::from_real_coords(plus, p.z_m)).real_coords();
    const auto fm = pushforward_chart(s, OrbitChartPoint::from_real_coords(minus, p.z_m)).real_coords();
    const double step = plus[k] - minus[k];
    for (std::size_t r = 0; r < 6; ++r) jac[r][k] = (fp[r] - fm[r]) / step;
  }
  return density(image) * std::abs(det6(jac)) / density(p);
}

std::vector<OrbitChartPoint> sample_chart(const BoxDomain& domain, std::size_t n, std::uint64_t seed, Complex z_m) {
  domain.validate();
  Rng rng(seed);
  std::vector<OrbitChartPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, 6> x{};
    for (std::size_t k = 0; k < 6; ++k) x[k] = rng.uniform(domain.lo[k], domain.hi[k]);
    out.push_back(OrbitChartPoint::from_real_coords(x, z_m));
  }
  return out;
}

BoxDomain default_box() { return {{-2.0, -2.0, -2.0, -2.0, 0.1, -2.0}, {2.0, 2.0, 2.0, 2.0, 2.0, 2.0}}; }

}  // namespace cspin
