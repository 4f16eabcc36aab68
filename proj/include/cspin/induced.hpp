#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cspin/boosts.hpp"
#include "cspin/measure.hpp"

namespace cspin {

using CVector = std::vector<Complex>;

/// Square complex matrix of runtime dimension, row-major.
struct DynMatrix {
  std::size_t dim = 0;
  std::vector<Complex> data;

  static DynMatrix identity(std::size_t n);
  Complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  CVector apply(const CVector& x) const;
};

DynMatrix operator*(const DynMatrix& a, const DynMatrix& b);
double distance(const DynMatrix& a, const DynMatrix& b);

/*!
 * Matrix representation of the little group SL(2,C) of v̊.
 *
 * The unitary irreducible representations of SL(2,C) are infinite
 * dimensional; these finite stand-ins exercise every group-law statement,
 * and `unitary` records whether the values are unitary.
 */
struct LittleGroupRep {
  std::string name;
  std::size_t dim = 1;
  bool unitary = false;
  std::function<DynMatrix(const Mat2&)> apply;
};

/// dim 1, h -> 1. Unitary.
LittleGroupRep trivial_rep();
/// dim 2, h -> h. A homomorphism, not unitary.
LittleGroupRep defining_rep();

/*!
 * Pointwise-evaluable function on the orbit with values in C^dim.
 * `evaluate` must be free of side effects.
 */
struct OrbitFunction {
  std::size_t dim = 1;
  std::function<CVector(const ComplexFourVector&)> evaluate;
  std::optional<BoxDomain> support_hint;
};

struct CocycleResult {
  Mat2 h;
  double diagonality_residual = 0.0;  ///< ||h_A - h_B||_F / max(1, ||h_A||_F)
  double fixes_residual = 0.0;        ///< ||h . v̊ - v̊|| / max(1, |z_m|)
};

/*!
 * Wigner cocycle beta(v)^-1 s beta(s^-1 . v). The result fixes v̊, so both
 * factors of the pair agree and h is their common value.
 *
 * Throws CocycleNotDiagonal if the factors differ by more than tol (relative).
 */
CocycleResult wigner_cocycle_checked(BoostMethod method, const SpinElement& s, const MassOrbitPoint& p,
                                     double tol = kDefaultTol);
Mat2 wigner_cocycle(BoostMethod method, const SpinElement& s, const MassOrbitPoint& p, double tol = kDefaultTol);

/// Square of the factor sqrt(theta_g(v)); unset means the invariant measure (theta = 1).
using RadonNikodymHook = std::function<double(const IspinElement&, const MassOrbitPoint&)>;

/// exp{i Re eta(v, z)}, the translation factor at the orbit point v.
Complex orbit_character(const ComplexFourVector& v, const ComplexFourVector& z);

/*!
 * (U(z, s) F)(v) = exp{i Re eta(v, z)} rho(beta(v)^-1 s beta(s^-1 v)) F(s^-1 v).
 *
 * The translation factor is the character of the orbit point v, which equals
 * chi_v̊(z) at v = v̊; with it U is a homomorphism.
 */
CVector induced_apply(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g, const OrbitFunction& f,
                      const MassOrbitPoint& p, const RadonNikodymHook& theta = {});

/// The orbit function v -> (U(g) F)(v) on the orbit of mass z_m.
OrbitFunction induced_function(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g,
                               const OrbitFunction& f, Complex z_m);

struct WitnessEntry {
  ComplexFourVector v;
  double lhs = 0.0;  ///< ||(U(g) F)(v)||
  double rhs = 0.0;  ///< ||F(s^-1 v)||
  double abs_err = 0.0;
};

struct UnitarityReport {
  std::string rep_name;
  bool rep_unitary = false;
  std::vector<WitnessEntry> entries;
  std::vector<double> rn_values;  ///< NaN where the RN stencil left the chart
  double max_abs_err = 0.0;
  double max_rn_deviation = 0.0;
  bool certified = false;
};

inline constexpr double kModulusTol = 1e-15;
inline constexpr double kRadonNikodymTol = 2e-4;

/*!
 * Pointwise modulus identity |(U(g)F)(v)| = |F(s^-1 v)| at each chart sample,
 * plus the Radon-Nikodym certificate at the same samples. The report is
 * certified only for a unitary rho, with every modulus error within
 * 1e-15 max(1, rhs) and every RN value within 2e-4 of 1.
 */
UnitarityReport unitarity_witness(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g,
                                  const OrbitFunction& f, const std::vector<OrbitChartPoint>& points,
                                  double h = kRadonNikodymStep);

}  // namespace cspin
