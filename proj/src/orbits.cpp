#include "cspin/orbits.hpp"

#include <algorithm>

#include "cspin/error.hpp"

namespace cspin {

Complex char_eval(const Character& chi, const ComplexFourVector& z) {
  return std::polar(1.0, eta(chi.w, z).real());
}

Complex char_eval_trace(const Character& chi, const ComplexFourVector& z) {
  const Complex pairing = 0.25 * clifford_trace(minkowski_embed(chi.w) * minkowski_embed(z));
  return std::polar(1.0, pairing.real());
}

Character char_pullback(const SpinElement& s, const Character& chi) { return {act_vector(s, chi.w)}; }

OrbitClass classify(const Mat2& m, double eps) {
  const double nrm = frobenius_norm(m);
  if (nrm <= eps) return OrbitClass::zero();
  const Complex d = det2(m);
  if (std::abs(d) <= eps * std::max(1.0, nrm * nrm)) return OrbitClass::null();
  return OrbitClass::mass(d);
}

Mat2 mass_representative(Complex z_squared) {
  if (z_squared == Complex{}) throw Error(ErrorCode::ZeroMass, "mass representative needs z^2 != 0");
  return principal_sqrt(z_squared) * Mat2::identity();
}

Mat2 null_representative() { return Mat2::diagonal({1.0, 0.0}); }

Mat2 representative(const OrbitClass& cls) {
  switch (cls.kind) {
    case OrbitKind::ZeroPoint: return Mat2{};
    case OrbitKind::NullCone: return null_representative();
    case OrbitKind::Mass: return mass_representative(cls.z_squared);
  }
  return Mat2{};
}

namespace {

// SL(2,C) matrix whose first column is n.
Mat2 complete_to_sl2(Complex n0, Complex n1) {
  const double q = std::norm(n0) + std::norm(n1);
  Mat2 g;
  g(0, 0) = n0;
  g(1, 0) = n1;
  g(0, 1) = -std::conj(n1) / q;
  g(1, 1) = std::conj(n0) / q;
  return g;
}

SpinElement null_transporter(const Mat2& m, double eps) {
  const double col0 = std::norm(m(0, 0)) + std::norm(m(1, 0));
  const double col1 = std::norm(m(0, 1)) + std::norm(m(1, 1));
  const std::size_t c = col1 > col0 ? 1 : 0;
  if (std::sqrt(std::max(col0, col1)) <= eps)
    throw Error(ErrorCode::DegenerateFactorization, "no column above tolerance");
  const std::size_t r = std::abs(m(1, c)) > std::abs(m(0, c)) ? 1 : 0;

  // m = n1 n2^T with n1 the dominant column and n2[c] = 1.
  const Complex n1_0 = m(0, c), n1_1 = m(1, c);
  const Complex n2_0 = m(r, 0) / m(r, c), n2_1 = m(r, 1) / m(r, c);

  const Mat2 g1 = complete_to_sl2(n1_0, n1_1);
  const Mat2 g2 = complete_to_sl2(n2_0, n2_1);
  return SpinElement::unchecked(g1, transpose(inv2(g2)));
}

}  // namespace

SpinElement transporter(const Mat2& m, double eps) {
  const OrbitClass cls = classify(m, eps);
  switch (cls.kind) {
    case OrbitKind::ZeroPoint:
      throw Error(ErrorCode::ZeroPointOrbit, "the zero orbit has no transporter");
    case OrbitKind::NullCone:
      return null_transporter(m, eps);
    case OrbitKind::Mass: {
      const Complex z_m = principal_sqrt(cls.z_squared);
      return SpinElement::unchecked(m / z_m, Mat2::identity());
    }
  }
  throw Error(ErrorCode::ZeroPointOrbit, "unreachable");
}

bool is_little_group_member(const SpinElement& s, const ComplexFourVector& v, double tol) {
  return norm(act_vector(s, v) - v) <= tol * std::max(1.0, norm(v));
}

SpinElement null_rotation(Complex z) {
  const Complex i{0.0, 1.0};
  const Mat2 r = Mat2::diagonal({std::exp(0.5 * i * z), std::exp(-0.5 * i * z)});
  return SpinElement::unchecked(r, r);
}

SpinElement null_translation(Complex z1, Complex z2) {
  Mat2 a = Mat2::identity();
  Mat2 b = Mat2::identity();
  a(0, 1) = z1;
  b(1, 0) = z2;
  return SpinElement::unchecked(a, b);
}

SpinElement null_little_element(const NullLittleParams& p) {
  return spin_mul(null_rotation(p.z), null_translation(p.z1, p.z2));
}

}  // namespace cspin
