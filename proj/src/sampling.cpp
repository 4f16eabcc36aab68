#include "cspin/sampling.hpp"

#include <cmath>
#include <numbers>

namespace cspin {

ComplexFourVector random_vector(Rng& rng, double radius) {
  ComplexFourVector v;
  for (std::size_t mu = 0; mu < 4; ++mu) v[mu] = rng.disk(radius);
  return v;
}

Complex random_mass(Rng& rng) {
  switch (rng.next() % 3) {
    case 0: return 1.0;
    case 1: return {0.0, 1.0};
    default: return std::polar(2.0, std::numbers::pi / 3.0);
  }
}

MassOrbitPoint random_orbit_point(Rng& rng, Complex z_m, double scale) {
  const SpinElement s = random_spin(rng, scale);
  return MassOrbitPoint::make(act_vector(s, MassOrbitPoint::standard(z_m).v()), z_m);
}

Mat2 random_null_matrix(Rng& rng) {
  const Complex a0 = rng.disk(1.0), a1 = rng.disk(1.0), b0 = rng.disk(1.0), b1 = rng.disk(1.0);
  Mat2 m;
  m(0, 0) = a0 * b0;
  m(0, 1) = a0 * b1;
  m(1, 0) = a1 * b0;
  m(1, 1) = a1 * b1;
  return m;
}

MassShellPoint random_mass_shell(Rng& rng, double k_max) {
  const double m = rng.uniform(0.5, 2.0);
  const auto dir = rng.unit_vector();
  const double k = k_max * std::cbrt(rng.uniform());
  const double p0 = std::sqrt(m * m + k * k);
  return {{p0, k * dir[0], k * dir[1], k * dir[2]}, m};
}

IspinElement random_ispin(Rng& rng, double scale, double radius) {
  IspinElement g;
  g.z = random_vector(rng, radius);
  g.s = random_spin(rng, scale);
  return g;
}

NullLittleParams random_null_params(Rng& rng, double radius) {
  NullLittleParams p;
  p.z1 = rng.disk(radius);
  p.z2 = rng.disk(radius);
  p.z = rng.disk(radius);
  return p;
}

}  // namespace cspin
