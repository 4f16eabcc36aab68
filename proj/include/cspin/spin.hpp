#pragma once

#include <cstdint>

#include "cspin/clifford.hpp"
#include "cspin/random.hpp"

namespace cspin {

/*!
 * Element of Spin(4,C) stored as the pair (A, B) in SL(2,C) x SL(2,C).
 *
 * The Weyl matrix diag(A, B) is derived on demand (to_weyl). Construction
 * through make() checks |det - 1| <= 1e-9 for both factors; nothing is ever
 * renormalized afterwards.
 */
class SpinElement {
 public:
  static constexpr double kDetTol = 1e-9;

  SpinElement() : a_(Mat2::identity()), b_(Mat2::identity()) {}

  /// Throws InvalidSpin if either factor is not unimodular within kDetTol.
  static SpinElement make(const Mat2& a, const Mat2& b);

  /// No determinant check. For constructions whose SL(2) membership is structural.
  static SpinElement unchecked(const Mat2& a, const Mat2& b) { return SpinElement(a, b); }

  static SpinElement identity() { return {}; }

  const Mat2& a() const { return a_; }
  const Mat2& b() const { return b_; }

  /// max(|det A - 1|, |det B - 1|)
  double det_defect() const;

  bool operator==(const SpinElement&) const = default;

 private:
  SpinElement(const Mat2& a, const Mat2& b) : a_(a), b_(b) {}

  Mat2 a_;
  Mat2 b_;
};

/// (z, s) in ISpin(4,C) = C^4 x| Spin(4,C).
struct IspinElement {
  ComplexFourVector z{};
  SpinElement s{};

  static IspinElement identity() { return {}; }
};

/// sigma(v) = v_0 I + sum_j v_j sigma_j; det sigma(v) = eta(v, v).
Mat2 sigma_map(const ComplexFourVector& v);
/// Inverse of sigma_map: v_0 = tr(M)/2, v_j = tr(sigma_j M)/2.
ComplexFourVector sigma_unmap(const Mat2& m);

/// (A, B) . M = A M B^-1
Mat2 act_matrix(const SpinElement& s, const Mat2& m);
ComplexFourVector act_vector(const SpinElement& s, const ComplexFourVector& v);

SpinElement spin_mul(const SpinElement& s, const SpinElement& t);
SpinElement spin_inv(const SpinElement& s);
SpinElement operator*(const SpinElement& s, const SpinElement& t);

/// Block-diagonal Weyl matrix diag(A, B).
Mat4 to_weyl(const SpinElement& s);

/// Reads (A, B) off a block-diagonal Weyl matrix; throws InvalidSpin if the
/// off-diagonal blocks exceed tol * max(1, ||W||_F).
SpinElement from_weyl(const Mat4& w, double tol = kDefaultTol);

/// Matrix of lambda(s) on C^4: column mu is act_vector(s, e_mu).
Mat4 covering_so4(const SpinElement& s);

/// 1/2 gamma_mu gamma_nu for mu != nu (antisymmetric in the indices).
Mat4 generator(int mu, int nu);

/// expm(sum_{mu<nu} w_mu_nu generator(mu,nu)) with w uniform in the disk of radius scale.
SpinElement random_spin(Rng& rng, double scale);
SpinElement random_spin(std::uint64_t seed, double scale);

/// Random SL(2,C) matrix, the A block of random_spin.
Mat2 random_sl2(Rng& rng, double scale);

/// (z, s)(z', s') = (z + lambda(s) z', s s')
IspinElement ispin_mul(const IspinElement& g, const IspinElement& h);
/// (z, s)^-1 = (-lambda(s^-1) z, s^-1)
IspinElement ispin_inv(const IspinElement& g);

}  // namespace cspin
