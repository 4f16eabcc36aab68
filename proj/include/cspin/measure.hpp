#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cspin/spin.hpp"

namespace cspin {

/// Chart excludes |v22| <= kChartFloor.
inline constexpr double kChartFloor = 1e-6;
/// Default finite-difference step for the Radon-Nikodym check.
inline constexpr double kRadonNikodymStep = 1e-5;

/*!
 * Chart coordinates (v12, v21, v22) of the mass orbit det V = z_m^2, where
 * V = [[(z_m^2 + v12 v21) / v22, v12], [v21, v22]].
 */
struct OrbitChartPoint {
  Complex v12{};
  Complex v21{};
  Complex v22{1.0};
  Complex z_m{1.0};

  /// Real coordinates (Re v12, Im v12, Re v21, Im v21, Re v22, Im v22).
  std::array<double, 6> real_coords() const;
  static OrbitChartPoint from_real_coords(const std::array<double, 6>& x, Complex z_m);
};

/// Axis-aligned box in the six real chart coordinates, ordered as in real_coords().
struct BoxDomain {
  std::array<double, 6> lo{};
  std::array<double, 6> hi{};

  /// Throws InvalidArgument unless lo < hi everywhere and the box keeps
  /// |v22| > kChartFloor.
  void validate() const;
  /// Smallest |v22| attained on the box.
  double min_abs_v22() const;
};

/// Throws ChartSingular if |v22| <= kChartFloor.
Mat2 chart_to_matrix(const OrbitChartPoint& p);

/// Throws ChartSingular if |V22| <= kChartFloor, OffOrbit if |det V - z_m^2| > tol max(1, ||V||_F^2).
OrbitChartPoint matrix_to_chart(const Mat2& v, Complex z_m, double tol = kDefaultTol);

/// 1 / |v22|^2 against Lebesgue measure on C^3 = R^6.
double density(const OrbitChartPoint& p);

/// Chart coordinates of A V B^-1.
OrbitChartPoint pushforward_chart(const SpinElement& s, const OrbitChartPoint& p);

/*!
 * density(p') |det J| / density(p) for p' = pushforward_chart(s, p), where J
 * is the 6x6 real Jacobian of the pushforward from central differences with
 * step h. Invariance of the measure means the value is 1.
 *
 * Throws ChartSingular if p or its image is within 6h of the excluded set.
 */
double radon_nikodym_numeric(const SpinElement& s, const OrbitChartPoint& p, double h = kRadonNikodymStep);

/// n independent uniform points of the box, deterministic in (domain, n, seed, z_m).
std::vector<OrbitChartPoint> sample_chart(const BoxDomain& domain, std::size_t n, std::uint64_t seed,
                                          Complex z_m = 1.0);

/// Box [-2, 2]^4 x ([0.1, 2] x [-2, 2]) used by the test and verify suites.
BoxDomain default_box();

/// Determinant of a 6x6 real matrix by partial-pivot elimination.
double det6(std::array<std::array<double, 6>, 6> m);

}  // namespace cspin
