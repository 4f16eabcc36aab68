#pragma once

#include <array>

#include "cspin/boosts.hpp"
#include "cspin/orbits.hpp"
#include "cspin/random.hpp"

namespace cspin {

/// Four-vector with entries uniform in the disk of the given radius.
ComplexFourVector random_vector(Rng& rng, double radius = 1.0);

/// Uniform choice among z_m in {1, i, 2 e^{i pi/3}}.
Complex random_mass(Rng& rng);

/// act(s, v̊) for a random spin element of the given scale.
MassOrbitPoint random_orbit_point(Rng& rng, Complex z_m, double scale = 1.0);

/// Rank-one 2x2 matrix n1 n2^T with entries of n1, n2 in the unit disk.
Mat2 random_null_matrix(Rng& rng);

struct MassShellPoint {
  std::array<double, 4> p;
  double m;
};

/// Real forward mass-shell point with m in [0.5, 2] and spatial momentum in the ball of radius k_max.
MassShellPoint random_mass_shell(Rng& rng, double k_max = 3.0);

IspinElement random_ispin(Rng& rng, double scale = 1.0, double radius = 1.0);

NullLittleParams random_null_params(Rng& rng, double radius = 1.0);

}  // namespace cspin
