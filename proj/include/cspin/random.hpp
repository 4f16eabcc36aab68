#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "cspin/linalg.hpp"

namespace cspin {

/*!
 * Seeded generator for test points and sampled group elements.
 *
 * The engine's output sequence is fixed by the standard; the conversions to
 * doubles below are explicit so results are bit-identical across standard
 * libraries (std::uniform_real_distribution is not).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in the closed disk of the given radius.
  Complex disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, phi);
  }

  /// Uniform point on the unit 2-sphere.
  std::array<double, 3> unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = 2.0 * std::numbers::pi * uniform();
    const double rho = std::sqrt(1.0 - z * z);
    return {rho * std::cos(phi), rho * std::sin(phi), z};
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cspin
