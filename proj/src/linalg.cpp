#include "cspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cspin/error.hpp"

namespace cspin {

Mat2 block(const Mat4& m, std::size_t block_row, std::size_t block_col) {
  Mat2 b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(2 * block_row + i, 2 * block_col + j);
  return b;
}

Mat4 from_blocks(const Mat2& tl, const Mat2& tr, const Mat2& bl, const Mat2& br) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = tl(i, j);
      m(i, j + 2) = tr(i, j);
      m(i + 2, j) = bl(i, j);
      m(i + 2, j + 2) = br(i, j);
    }
  return m;
}

Complex det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Complex det4(const Mat4& m) {
  Mat4 a = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < 4; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < 4; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Mat2 inv2(const Mat2& m) {
  const Complex d = det2(m);
  const double singular_tol = kSingularRel * std::max(1.0, frobenius_norm(m));
  if (!(std::abs(d) > singular_tol)) throw Error(ErrorCode::SingularMatrix, "2x2 determinant below threshold");
  Mat2 r;
  r(0, 0) = m(1, 1) / d;
  r(0, 1) = -m(0, 1) / d;
  r(1, 0) = -m(1, 0) / d;
  r(1, 1) = m(0, 0) / d;
  return r;
}

Complex principal_sqrt(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (x == 0.0 && y == 0.0) return {0.0, 0.0};
  const double r = std::hypot(x, y);
  if (x >= 0.0) {
    const double t = std::sqrt(0.5 * (r + x));
    return {t, y / (2.0 * t)};
  }
  // Left half plane: imaginary part first.
  // y == 0 (either sign of zero) takes the value from above.
  const double t = std::sqrt(0.5 * (r - x));
  const double im = (y < 0.0) ? -t : t;
  return {std::abs(y) / (2.0 * t), im};
}

Mat2 sqrt_posdef2(const Mat2& p) {
  const double scale = std::max(1.0, frobenius_norm(p));
  if (distance(p, adjoint(p)) > kDefaultTol * scale)
    throw Error(ErrorCode::NotPositiveDefinite, "matrix is not Hermitian");
  const Complex d = det2(p);
  const Complex t = trace(p);
  if (!(d.real() > 0.0) || !(t.real() > 0.0))
    throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite");
  // Hermitian input: trace and determinant are real up to rounding.
  const double sd = std::sqrt(d.real());
  const double denom = std::sqrt(t.real() + 2.0 * sd);
  Mat2 s = p + Mat2::identity() * sd;
  return s / denom;
}

Polar polar2(const Mat2& m) {
  const Mat2 mm = m * adjoint(m);
  Mat2 herm = 0.5 * (mm + adjoint(mm));
  const Mat2 pos = sqrt_posdef2(herm);
  return {pos, inv2(pos) * m};
}

namespace {

template <std::size_t N>
Mat<N> expm_impl(const Mat<N>& m) {
  constexpr int kTaylorDegree = 18;
  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat<N> x = m / std::ldexp(1.0, squarings);

  // Horner form of sum_k x^k / k!.
  Mat<N> e = Mat<N>::identity();
  for (int k = kTaylorDegree; k >= 1; --k) e = Mat<N>::identity() + (x * e) / static_cast<double>(k);
  for (int i = 0; i < squarings; ++i) e = e * e;
  return e;
}

}  // namespace

Mat2 expm(const Mat2& m) { return expm_impl(m); }
Mat4 expm(const Mat4& m) { return expm_impl(m); }

}  // namespace cspin
