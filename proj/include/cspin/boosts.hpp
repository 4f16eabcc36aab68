#pragma once

#include <array>
#include <string_view>

#include "cspin/spin.hpp"

namespace cspin {

/*!
 * Point v of the complex-mass orbit eta(v, v) = z_m^2, together with the
 * chosen square root z_m (either root is accepted; v̊ = (z_m, 0, 0, 0)).
 */
class MassOrbitPoint {
 public:
  /// Throws ZeroMass if z_m == 0 and OffOrbit if |eta(v,v) - z_m^2| > tol max(1, ||v||^2).
  static MassOrbitPoint make(const ComplexFourVector& v, Complex z_m, double tol = kDefaultTol);

  /// v̊ = (z_m, 0, 0, 0)
  static MassOrbitPoint standard(Complex z_m);

  const ComplexFourVector& v() const { return v_; }
  Complex z_m() const { return z_m_; }
  ComplexFourVector standard_vector() const { return {{z_m_, 0.0, 0.0, 0.0}}; }

 private:
  MassOrbitPoint(const ComplexFourVector& v, Complex z_m) : v_(v), z_m_(z_m) {}

  ComplexFourVector v_;
  Complex z_m_;
};

enum class BoostMethod { Beta1, Beta2, Beta3, Beta3Prime, Wigner };

/// CLI names: "beta1", "beta2", "beta3", "beta3p", "wigner".
std::string_view to_string(BoostMethod method);
/// Throws UsageError on an unknown name.
BoostMethod parse_boost_method(std::string_view name);

/// (I, (sigma(v)/z_m)^-1)
SpinElement beta1(const MassOrbitPoint& p);

/// With sigma(v)/z_m = P U (left polar form): (sqrt(P), U^-1 sqrt(P)^-1).
SpinElement beta2(const MassOrbitPoint& p);

/*!
 * j+(v) = (z_m I + sigma(v)) / sqrt(2 z_m (z_m + v_0)), a square root of
 * sigma(v)/z_m with unit determinant. The root is taken as
 * z_m sqrt(2 (1 + v_0/z_m)), principal branch, so j+(v̊) = I for every z_m.
 *
 * Throws AntipodalPoint where the denominator vanishes, |z_m + v_0| <= 1e-9 |z_m|.
 * Besides -v̊ this includes the points with v_0 = -z_m and isotropic spatial part.
 */
Mat2 j_plus(const MassOrbitPoint& p);

/// The 4x4 Weyl matrix (z_m I + gamma(v) gamma_0) / sqrt(2 z_m (z_m + v_0)).
Mat4 beta_plus_weyl(const MassOrbitPoint& p);

/// The volume form as a spin element, read off its Weyl blocks.
SpinElement volume_form_spin();

/*!
 * beta+(v) away from the antipodal set, Omega at v = -v̊, and
 * Omega beta+(-v) on the rest of the set where z_m + v_0 = 0.
 */
SpinElement beta3(const MassOrbitPoint& p);

/// beta+(v) for Re(v_0/z_m) >= 0, Omega beta+(-v) otherwise.
SpinElement beta3_prime(const MassOrbitPoint& p);

/*!
 * Standard boost on the real forward mass shell: (S, S^-1) with S the
 * positive definite square root of sigma(p)/m.
 *
 * Throws NonPositiveEnergy if p_0 <= 0 or m <= 0, OffShell if
 * |eta(p,p) - m^2| > tol max(1, ||p||^2).
 */
SpinElement beta_wigner(const std::array<double, 4>& p, double m, double tol = kDefaultTol);

/// Dispatch by method. Wigner requires a real point and real positive z_m
/// (NotRealMassShell otherwise).
SpinElement boost(BoostMethod method, const MassOrbitPoint& p);

/// ||act_vector(beta, v̊) - v|| / max(1, ||v||)
double embedding_residual(const SpinElement& beta, const MassOrbitPoint& p);

/*!
 * Representative of {s, (-A, -B)} whose first factor has a trace with positive
 * real part (ties broken by the imaginary part). Both elements act identically,
 * so boosts are compared elementwise only after this alignment.
 */
SpinElement sign_aligned(const SpinElement& s);

/// ||B - (A*)^-1||_F, zero exactly on the real form {(A, A*^-1)}.
double real_form_defect(const SpinElement& s);

/// Point u(theta) with sigma(u) = (cos theta I + sin theta i u_hat.sigma) z_m.
MassOrbitPoint antipodal_curve(const std::array<double, 3>& u_hat, double theta, Complex z_m);

/// j+(u(theta)); tends to i u_hat.sigma as theta -> pi.
Mat2 directional_limit(const std::array<double, 3>& u_hat, Complex z_m, double theta_eval);

}  // namespace cspin
