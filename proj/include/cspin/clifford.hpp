#pragma once

#include <array>

#include "cspin/linalg.hpp"

namespace cspin {

/// Element of C^4 in the standard basis e_0..e_3.
struct ComplexFourVector {
  std::array<Complex, 4> c{};

  constexpr Complex& operator[](std::size_t mu) { return c[mu]; }
  constexpr const Complex& operator[](std::size_t mu) const { return c[mu]; }

  static constexpr ComplexFourVector basis(std::size_t mu) {
    ComplexFourVector v;
    v.c[mu] = 1.0;
    return v;
  }

  bool operator==(const ComplexFourVector&) const = default;
};

ComplexFourVector operator+(const ComplexFourVector& a, const ComplexFourVector& b);
ComplexFourVector operator-(const ComplexFourVector& a, const ComplexFourVector& b);
ComplexFourVector operator-(const ComplexFourVector& a);
ComplexFourVector operator*(Complex s, const ComplexFourVector& a);

/// Hermitian 2-norm on C^4.
double norm(const ComplexFourVector& v);

enum class MetricKind { Minkowski, Euclidean };

/// Complex-bilinear (not sesquilinear) form with g = diag(1,-1,-1,-1) or diag(1,1,1,1).
Complex bilinear(MetricKind kind, const ComplexFourVector& v, const ComplexFourVector& w);

inline Complex eta(const ComplexFourVector& v, const ComplexFourVector& w) {
  return bilinear(MetricKind::Minkowski, v, w);
}

/// Image of a Clifford algebra element under the Weyl representation.
struct CliffordElement {
  Mat4 matrix{};

  static CliffordElement identity() { return {Mat4::identity()}; }

  bool operator==(const CliffordElement&) const = default;
};

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
CliffordElement operator-(const CliffordElement& x, const CliffordElement& y);
CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
CliffordElement operator*(Complex s, const CliffordElement& x);

/*!
 * Weyl gamma matrix gamma_mu: gamma_0 = [[0, I], [I, 0]] and
 * gamma_j = [[0, sigma_j], [-sigma_j, 0]] in 2x2 blocks.
 *
 * The Pauli ordering is sigma_1 = [[0,-i],[i,0]], sigma_2 = [[0,1],[1,0]],
 * sigma_3 = diag(1,-1); see pauli().
 */
CliffordElement gamma_weyl(int mu);

/// Pauli matrix sigma_j for j in {1,2,3} in the ordering above; j = 0 gives I.
const Mat2& pauli(int j);

/// gamma(v) = sum_mu v_mu gamma_mu, so {gamma(v), gamma(w)} = 2 eta(v,w) I.
CliffordElement minkowski_embed(const ComplexFourVector& v);

/// Natural Euclidean embedding, expressed through the Minkowski one.
CliffordElement embed_natural(const ComplexFourVector& v);

CliffordElement anticommutator(const CliffordElement& x, const CliffordElement& y);

/// Omega = -i gamma_0 gamma_1 gamma_2 gamma_3.
CliffordElement volume_form();

/// Matrix trace, normalized so that tr(I) = 4.
Complex clifford_trace(const CliffordElement& x);

}  // namespace cspin
