#include "cspin/spin.hpp"

#include <algorithm>
#include <string>

#include "cspin/error.hpp"

namespace cspin {

SpinElement SpinElement::make(const Mat2& a, const Mat2& b) {
  SpinElement s(a, b);
  if (!all_finite(a) || !all_finite(b)) throw Error(ErrorCode::InvalidSpin, "non-finite entries");
  if (!(s.det_defect() <= kDetTol))
    throw Error(ErrorCode::InvalidSpin, "factor determinant differs from 1 by " + std::to_string(s.det_defect()));
  return s;
}

double SpinElement::det_defect() const {
  return std::max(std::abs(det2(a_) - 1.0), std::abs(det2(b_) - 1.0));
}

Mat2 sigma_map(const ComplexFourVector& v) {
  Mat2 m = v[0] * pauli(0);
  for (int j = 1; j <= 3; ++j) m += v[j] * pauli(j);
  return m;
}

ComplexFourVector sigma_unmap(const Mat2& m) {
  ComplexFourVector v;
  for (int mu = 0; mu < 4; ++mu) v[mu] = 0.5 * trace(pauli(mu) * m);
  return v;
}

Mat2 act_matrix(const SpinElement& s, const Mat2& m) { return s.a() * m * inv2(s.b()); }

ComplexFourVector act_vector(const SpinElement& s, const ComplexFourVector& v) {
  return sigma_unmap(act_matrix(s, sigma_map(v)));
}

SpinElement spin_mul(const SpinElement& s, const SpinElement& t) {
  return SpinElement::unchecked(s.a() * t.a(), s.b() * t.b());
}

SpinElement spin_inv(const SpinElement& s) { return SpinElement::unchecked(inv2(s.a()), inv2(s.b())); }

SpinElement operator*(const SpinElement& s, const SpinElement& t) { return spin_mul(s, t); }

Mat4 to_weyl(const SpinElement& s) { return block_diag(s.a(), s.b()); }

SpinElement from_weyl(const Mat4& w, double tol) {
  const double off = std::hypot(frobenius_norm(block(w, 0, 1)), frobenius_norm(block(w, 1, 0)));
  if (off > tol * std::max(1.0, frobenius_norm(w)))
    throw Error(ErrorCode::InvalidSpin, "Weyl matrix is not block diagonal");
  return SpinElement::unchecked(block(w, 0, 0), block(w, 1, 1));
}

Mat4 covering_so4(const SpinElement& s) {
  Mat4 lambda;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const ComplexFourVector col = act_vector(s, ComplexFourVector::basis(mu));
    for (std::size_t row = 0; row < 4; ++row) lambda(row, mu) = col[row];
  }
  return lambda;
}

Mat4 generator(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || mu == nu)
    throw Error(ErrorCode::IndexOutOfRange,
                "generator indices (" + std::to_string(mu) + "," + std::to_string(nu) + ")");
  return 0.5 * (gamma_weyl(mu) * gamma_weyl(nu)).matrix;
}

SpinElement random_spin(Rng& rng, double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) throw Error(ErrorCode::InvalidArgument, "scale must be >= 0");
  Mat4 x;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) x += rng.disk(scale) * generator(mu, nu);
  const Mat4 w = expm(x);
  return SpinElement::unchecked(block(w, 0, 0), block(w, 1, 1));
}

SpinElement random_spin(std::uint64_t seed, double scale) {
  Rng rng(seed);
  return random_spin(rng, scale);
}

Mat2 random_sl2(Rng& rng, double scale) { return random_spin(rng, scale).a(); }

IspinElement ispin_mul(const IspinElement& g, const IspinElement& h) {
  return {g.z + act_vector(g.s, h.z), spin_mul(g.s, h.s)};
}

IspinElement ispin_inv(const IspinElement& g) {
  const SpinElement inv = spin_inv(g.s);
  return {-act_vector(inv, g.z), inv};
}

}  // namespace cspin
