#include "cspin/clifford.hpp"

#include <string>

#include "cspin/error.hpp"

namespace cspin {

ComplexFourVector operator+(const ComplexFourVector& a, const ComplexFourVector& b) {
  ComplexFourVector r;
  for (std::size_t mu = 0; mu < 4; ++mu) r[mu] = a[mu] + b[mu];
  return r;
}

ComplexFourVector operator-(const ComplexFourVector& a, const ComplexFourVector& b) {
  ComplexFourVector r;
  for (std::size_t mu = 0; mu < 4; ++mu) r[mu] = a[mu] - b[mu];
  return r;
}

ComplexFourVector operator-(const ComplexFourVector& a) {
  ComplexFourVector r;
  for (std::size_t mu = 0; mu < 4; ++mu) r[mu] = -a[mu];
  return r;
}

ComplexFourVector operator*(Complex s, const ComplexFourVector& a) {
  ComplexFourVector r;
  for (std::size_t mu = 0; mu < 4; ++mu) r[mu] = s * a[mu];
  return r;
}

double norm(const ComplexFourVector& v) {
  double s = 0.0;
  for (const auto& x : v.c) s += std::norm(x);
  return std::sqrt(s);
}

Complex bilinear(MetricKind kind, const ComplexFourVector& v, const ComplexFourVector& w) {
  const double spatial = kind == MetricKind::Minkowski ? -1.0 : 1.0;
  return v[0] * w[0] + spatial * (v[1] * w[1] + v[2] * w[2] + v[3] * w[3]);
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) { return {x.matrix + y.matrix}; }
CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) { return {x.matrix - y.matrix}; }
CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) { return {x.matrix * y.matrix}; }
CliffordElement operator*(Complex s, const CliffordElement& x) { return {s * x.matrix}; }

namespace {

const std::array<Mat2, 4> kPauli = [] {
  const Complex i{0.0, 1.0};
  std::array<Mat2, 4> p{};
  p[0] = Mat2::identity();
  p[1](0, 1) = -i;
  p[1](1, 0) = i;
  p[2](0, 1) = 1.0;
  p[2](1, 0) = 1.0;
  p[3](0, 0) = 1.0;
  p[3](1, 1) = -1.0;
  return p;
}();

const std::array<CliffordElement, 4> kGamma = [] {
  std::array<CliffordElement, 4> g{};
  g[0] = {from_blocks(Mat2{}, Mat2::identity(), Mat2::identity(), Mat2{})};
  for (int j = 1; j <= 3; ++j) g[j] = {from_blocks(Mat2{}, kPauli[j], -kPauli[j], Mat2{})};
  return g;
}();

}  // namespace

const Mat2& pauli(int j) {
  if (j < 0 || j > 3) throw Error(ErrorCode::IndexOutOfRange, "Pauli index " + std::to_string(j));
  return kPauli[j];
}

CliffordElement gamma_weyl(int mu) {
  if (mu < 0 || mu > 3) throw Error(ErrorCode::IndexOutOfRange, "gamma index " + std::to_string(mu));
  return kGamma[mu];
}

CliffordElement minkowski_embed(const ComplexFourVector& v) {
  CliffordElement r;
  for (int mu = 0; mu < 4; ++mu) r.matrix += v[mu] * kGamma[mu].matrix;
  return r;
}

CliffordElement embed_natural(const ComplexFourVector& v) {
  const Complex mi{0.0, -1.0};
  return minkowski_embed({{v[0], mi * v[1], mi * v[2], mi * v[3]}});
}

CliffordElement anticommutator(const CliffordElement& x, const CliffordElement& y) { return x * y + y * x; }

CliffordElement volume_form() {
  return Complex{0.0, -1.0} * (kGamma[0] * kGamma[1] * kGamma[2] * kGamma[3]);
}

Complex clifford_trace(const CliffordElement& x) { return trace(x.matrix); }

}  // namespace cspin
