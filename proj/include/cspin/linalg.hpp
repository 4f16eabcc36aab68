#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace cspin {

using Complex = std::complex<double>;

/// Library-wide default tolerance.
inline constexpr double kDefaultTol = 1e-9;
/// Relative factor of the scale-aware singularity threshold.
inline constexpr double kSingularRel = 1e-12;

/*!
 * Dense fixed-size complex matrix, row-major.
 *
 * Only N = 2 and N = 4 are used by the library; everything is header-inline
 * so the compiler can unroll the tiny loops.
 */
template <std::size_t N>
struct Mat {
  std::array<Complex, N * N> data{};

  static constexpr std::size_t size = N;

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  static constexpr Mat zero() { return Mat{}; }

  static constexpr Mat identity() {
    Mat m{};
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Mat diagonal(const std::array<Complex, N>& d) {
    Mat m{};
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  Mat& operator*=(Complex s) {
    for (auto& x : data) x *= s;
    return *this;
  }
  Mat& operator/=(Complex s) {
    for (auto& x : data) x /= s;
    return *this;
  }

  bool operator==(const Mat&) const = default;
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

template <std::size_t N>
Mat<N> operator+(Mat<N> a, const Mat<N>& b) { return a += b; }
template <std::size_t N>
Mat<N> operator-(Mat<N> a, const Mat<N>& b) { return a -= b; }
template <std::size_t N>
Mat<N> operator-(Mat<N> a) { return a *= -1.0; }
template <std::size_t N>
Mat<N> operator*(Mat<N> a, Complex s) { return a *= s; }
template <std::size_t N>
Mat<N> operator*(Complex s, Mat<N> a) { return a *= s; }
template <std::size_t N>
Mat<N> operator/(Mat<N> a, Complex s) { return a /= s; }

template <std::size_t N>
Mat<N> operator*(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <std::size_t N>
Mat<N> adjoint(const Mat<N>& a) {
  Mat<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& a) {
  Mat<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a(j, i);
  return r;
}

template <std::size_t N>
Complex trace(const Mat<N>& a) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

template <std::size_t N>
double frobenius_norm(const Mat<N>& a) {
  double s = 0.0;
  for (const auto& x : a.data) s += std::norm(x);
  return std::sqrt(s);
}

/// Induced 1-norm (max column sum).
template <std::size_t N>
double one_norm(const Mat<N>& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < N; ++i) col += std::abs(a(i, j));
    best = col > best ? col : best;
  }
  return best;
}

template <std::size_t N>
bool all_finite(const Mat<N>& a) {
  for (const auto& x : a.data)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

/// Frobenius distance, the comparison metric used throughout the tests.
template <std::size_t N>
double distance(const Mat<N>& a, const Mat<N>& b) { return frobenius_norm(a - b); }

// Block helpers for the 2x2 block structure of Weyl matrices.
Mat2 block(const Mat4& m, std::size_t block_row, std::size_t block_col);
Mat4 from_blocks(const Mat2& tl, const Mat2& tr, const Mat2& bl, const Mat2& br);
inline Mat4 block_diag(const Mat2& a, const Mat2& b) { return from_blocks(a, Mat2{}, Mat2{}, b); }

Complex det2(const Mat2& m);

/// Determinant by partial-pivot elimination.
Complex det4(const Mat4& m);

/// Throws SingularMatrix when |det| <= 1e-12 * max(1, ||M||_F).
Mat2 inv2(const Mat2& m);

/// Square root with the cut on the negative real axis, continuous from above:
/// the result has non-negative real part and sqrt(-x) = i*sqrt(x) for x > 0.
Complex principal_sqrt(Complex z);

struct Polar {
  Mat2 positive;  ///< Hermitian positive definite factor
  Mat2 unitary;
};

/// Left polar decomposition M = P U with P = sqrt(M M*).
Polar polar2(const Mat2& m);

/*!
 * Hermitian positive definite square root of a 2x2 Hermitian PD matrix,
 * from the closed form S = (P + sqrt(det P) I) / sqrt(tr P + 2 sqrt(det P)).
 *
 * Throws NotPositiveDefinite if P fails the Hermitian or positivity check.
 */
Mat2 sqrt_posdef2(const Mat2& p);

/// Scaling and squaring with a Taylor core; the scaled 1-norm is at most 1/2.
Mat2 expm(const Mat2& m);
Mat4 expm(const Mat4& m);

}  // namespace cspin
