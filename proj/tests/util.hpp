#pragma once

#include <doctest.h>

#include "cspin/spin.hpp"

namespace testutil {

inline constexpr cspin::Complex I{0.0, 1.0};

inline double dist(const cspin::SpinElement& x, const cspin::SpinElement& y) {
  return cspin::distance(x.a(), y.a()) + cspin::distance(x.b(), y.b());
}

inline double dist(cspin::Complex a, cspin::Complex b) { return std::abs(a - b); }

inline double dist(const cspin::ComplexFourVector& a, const cspin::ComplexFourVector& b) { return cspin::norm(a - b); }

inline cspin::ComplexFourVector vec(cspin::Complex a, cspin::Complex b, cspin::Complex c, cspin::Complex d) {
  return {{a, b, c, d}};
}

inline cspin::Mat2 mat2(cspin::Complex a, cspin::Complex b, cspin::Complex c, cspin::Complex d) {
  cspin::Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace testutil
