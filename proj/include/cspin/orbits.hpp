#pragma once

#include "cspin/spin.hpp"

namespace cspin {

enum class OrbitKind { ZeroPoint, NullCone, Mass };

/// Orbit label of a point of C^4 ~ M(2,C): the zero point, the null cone, or
/// the complex-mass shell det M = z^2 (z_squared is meaningful only for Mass).
struct OrbitClass {
  OrbitKind kind = OrbitKind::ZeroPoint;
  Complex z_squared{};

  static OrbitClass zero() { return {OrbitKind::ZeroPoint, {}}; }
  static OrbitClass null() { return {OrbitKind::NullCone, {}}; }
  static OrbitClass mass(Complex z2) { return {OrbitKind::Mass, z2}; }

  bool operator==(const OrbitClass&) const = default;
};

/// Character z -> exp{i Re eta(w, z)} of the translation group C^4.
struct Character {
  ComplexFourVector w{};
};

Complex char_eval(const Character& chi, const ComplexFourVector& z);
/// Same value via exp{i Re(1/4 tr[gamma(w) gamma(z)])}.
Complex char_eval_trace(const Character& chi, const ComplexFourVector& z);
/// s . chi, whose parameter is act_vector(s, w).
Character char_pullback(const SpinElement& s, const Character& chi);

inline constexpr double kClassifyEps = 1e-9;

/*!
 * ZeroPoint if ||M||_F <= eps, else NullCone if |det M| <= eps max(1, ||M||_F^2),
 * else Mass(det M).
 */
OrbitClass classify(const Mat2& m, double eps = kClassifyEps);

/// z_m I with z_m = principal_sqrt(z_squared); throws ZeroMass for z_squared == 0.
Mat2 mass_representative(Complex z_squared);
/// e_1 (x) e_1 = diag(1, 0).
Mat2 null_representative();
/// Representative of the orbit of m (the zero matrix for ZeroPoint).
Mat2 representative(const OrbitClass& cls);

/*!
 * Group element g with act_matrix(g, representative(classify(M))) = M.
 *
 * Massive orbit: g = (M / z_m, I). Null cone: M is factored as n1 n2^T from
 * its dominant column, each n_j is completed to G_j in SL(2,C) with
 * G_j e_1 = n_j, and g = (G_1, G_2^{-T}).
 *
 * Throws ZeroPointOrbit if M is in the zero orbit.
 */
SpinElement transporter(const Mat2& m, double eps = kClassifyEps);

/// ||act_vector(s, v) - v|| <= tol max(1, ||v||)
bool is_little_group_member(const SpinElement& s, const ComplexFourVector& v, double tol = kDefaultTol);

struct NullLittleParams {
  Complex z1{};
  Complex z2{};
  Complex z{};
};

/// Rotation part R_0(z) = exp(z/2 gamma_1 gamma_2) = (diag(e^{iz/2}, e^{-iz/2}), same).
SpinElement null_rotation(Complex z);
/// Translation part T_0(z1, z2) = ([[1, z1], [0, 1]], [[1, 0], [z2, 1]]).
SpinElement null_translation(Complex z1, Complex z2);

/*!
 * s_0(z1, z2, z) = R_0(z) T_0(z1, z2), an element of the little group of
 * e_1 (x) e_1. With this ordering the parameters compose as
 * s_0(z1,z2,z) s_0(z1',z2',z') = s_0(z1' + e^{-iz'} z1, z2' + e^{iz'} z2, z + z').
 */
SpinElement null_little_element(const NullLittleParams& p);

}  // namespace cspin
