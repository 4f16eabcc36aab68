#include "cspin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "cspin/error.hpp"
#include "cspin/induced.hpp"
#include "cspin/json_io.hpp"
#include "cspin/measure.hpp"
#include "cspin/orbits.hpp"
#include "cspin/sampling.hpp"

namespace cspin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t property_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

/// Running maximum where NaN counts as +inf.
struct MaxAcc {
  double value = 0.0;
  void add(double x) {
    if (std::isnan(x)) x = kInf;
    value = std::max(value, x);
  }
};

struct MinAcc {
  double value = kInf;
  void add(double x) {
    if (std::isnan(x)) x = -kInf;
    value = std::min(value, x);
  }
};

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, const VerifyConfig& cfg) : cfg_(cfg) { report_.name = std::move(name); }

  const VerifyConfig& cfg() const { return cfg_; }
  std::size_t n() const { return cfg_.samples; }
  std::size_t n_tenth() const { return std::max<std::size_t>(1, cfg_.samples / 10); }

  /// Runs body(rng) and records its value; library errors record a failing value.
  void check(const std::string& name, Comparison cmp, double threshold, std::size_t samples,
             const std::function<double(Rng&)>& body) {
    Rng rng(property_seed(cfg_.seed, report_.name + "/" + name));
    double value;
    try {
      value = body(rng);
    } catch (const Error&) {
      value = cmp == Comparison::AtMost ? kInf : -kInf;
    }
    bool pass = false;
    switch (cmp) {
      case Comparison::AtMost: pass = value <= threshold; break;
      case Comparison::GreaterThan: pass = value > threshold; break;
      case Comparison::AtLeast: pass = value >= threshold; break;
    }
    report_.properties.push_back({name, value, threshold, cmp, samples, pass});
  }

  void at_most(const std::string& name, double threshold, std::size_t samples,
               const std::function<double(Rng&)>& body) {
    check(name, Comparison::AtMost, threshold, samples, body);
  }

  SuiteReport take() { return std::move(report_); }

 private:
  const VerifyConfig& cfg_;
  SuiteReport report_;
};

double rel(double err, double scale) { return err / std::max(1.0, scale); }

const std::vector<BoostMethod>& orbit_methods() {
  static const std::vector<BoostMethod> m{BoostMethod::Beta1, BoostMethod::Beta2, BoostMethod::Beta3,
                                          BoostMethod::Beta3Prime};
  return m;
}

double ispin_size(const IspinElement& g) { return norm(g.z) + frobenius_norm(g.s.a()) + frobenius_norm(g.s.b()); }

double ispin_distance(const IspinElement& g, const IspinElement& h) {
  return norm(g.z - h.z) + distance(g.s.a(), h.s.a()) + distance(g.s.b(), h.s.b());
}

Mat4 eta_matrix() { return Mat4::diagonal({1.0, -1.0, -1.0, -1.0}); }

// clifford

SuiteReport clifford_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("clifford", cfg);
  s.at_most("basis_anticommutator", 0.0, 16, [](Rng&) {
    MaxAcc acc;
    const Mat4 eta = eta_matrix();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        acc.add(distance(anticommutator(gamma_weyl(mu), gamma_weyl(nu)).matrix,
                         2.0 * (mu == nu ? eta(mu, mu) : Complex{}) * Mat4::identity()));
    return acc.value;
  });
  s.at_most("random_anticommutator", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto v = random_vector(rng), w = random_vector(rng);
      acc.add(distance(anticommutator(minkowski_embed(v), minkowski_embed(w)).matrix,
                       2.0 * eta(v, w) * Mat4::identity()));
    }
    return acc.value;
  });
  s.at_most("trace_pairing", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto v = random_vector(rng), w = random_vector(rng);
      acc.add(std::abs(0.25 * clifford_trace(minkowski_embed(w) * minkowski_embed(v)) - eta(w, v)));
    }
    return acc.value;
  });
  const Mat4 omega = volume_form().matrix;
  s.at_most("omega_squared", 1e-14, 1, [&](Rng&) { return distance(omega * omega, Mat4::identity()); });
  s.at_most("omega_anticommutes", 1e-14, 4, [&](Rng&) {
    MaxAcc acc;
    for (int mu = 0; mu < 4; ++mu) acc.add(frobenius_norm(anticommutator(volume_form(), gamma_weyl(mu)).matrix));
    return acc.value;
  });
  s.at_most("omega_hermitian", 1e-14, 1, [&](Rng&) { return distance(omega, adjoint(omega)); });
  return s.take();
}

// spin

SuiteReport spin_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("spin", cfg);
  s.at_most("metric_invariance", 1e-10, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const SpinElement g = random_spin(rng, 1.0);
      const auto v = random_vector(rng);
      const auto w = act_vector(g, v);
      acc.add(rel(std::abs(eta(w, w) - eta(v, v)), norm(w) * norm(w)));
    }
    return acc.value;
  });
  s.at_most("sigma_determinant", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto v = random_vector(rng);
      acc.add(std::abs(det2(sigma_map(v)) - eta(v, v)));
    }
    return acc.value;
  });
  s.at_most("covering_homomorphism", cfg.tol, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const SpinElement a = random_spin(rng, 1.0), b = random_spin(rng, 1.0);
      const Mat4 la = covering_so4(a), lb = covering_so4(b);
      acc.add(rel(distance(covering_so4(a * b), la * lb), frobenius_norm(la) * frobenius_norm(lb)));
    }
    return acc.value;
  });
  s.at_most("covering_preserves_eta", cfg.tol, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    const Mat4 eta = eta_matrix();
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      const Mat4 l = covering_so4(random_spin(rng, 0.5));
      acc.add(distance(transpose(l) * eta * l, eta));
    }
    return acc.value;
  });
  s.at_most("covering_determinant", cfg.tol, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) acc.add(std::abs(det4(covering_so4(random_spin(rng, 0.5))) - 1.0));
    return acc.value;
  });
  s.at_most("covering_kernel", 0.0, 1, [](Rng&) {
    const SpinElement minus = SpinElement::make(-Mat2::identity(), -Mat2::identity());
    return distance(covering_so4(minus), Mat4::identity());
  });
  s.at_most("ispin_associativity", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto g = random_ispin(rng, 0.5), h = random_ispin(rng, 0.5), k = random_ispin(rng, 0.5);
      const auto lhs = ispin_mul(ispin_mul(g, h), k);
      const auto rhs = ispin_mul(g, ispin_mul(h, k));
      acc.add(rel(ispin_distance(lhs, rhs), ispin_size(g) * ispin_size(h) * ispin_size(k)));
    }
    return acc.value;
  });
  s.at_most("ispin_inverse", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto g = random_ispin(rng, 0.5);
      const auto gi = ispin_inv(g);
      const double scale = ispin_size(g) * ispin_size(gi);
      acc.add(rel(ispin_distance(ispin_mul(g, gi), IspinElement::identity()), scale));
      acc.add(rel(ispin_distance(ispin_mul(gi, g), IspinElement::identity()), scale));
    }
    return acc.value;
  });
  return s.take();
}

// orbit

Mat2 random_mass_matrix(Rng& rng) {
  for (;;) {
    Mat2 m;
    for (auto& x : m.data) x = rng.disk(1.0);
    if (std::abs(det2(m)) >= 1e-3) return m;
  }
}

SuiteReport orbit_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("orbit", cfg);
  s.at_most("classification_invariance", 0.0, s.n(), [&](Rng& rng) {
    double mismatches = 0.0;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const Mat2 m = (i % 2 == 0) ? random_mass_matrix(rng) : random_null_matrix(rng);
      const SpinElement g = random_spin(rng, 0.5);
      const OrbitClass before = classify(m), after = classify(act_matrix(g, m));
      bool same = before.kind == after.kind;
      if (same && before.kind == OrbitKind::Mass)
        same = std::abs(before.z_squared - after.z_squared) <= cfg.tol * std::max(1.0, std::abs(before.z_squared));
      if (!same) mismatches += 1.0;
    }
    return mismatches;
  });
  const auto transporter_check = [&](bool null_family) {
    return [&, null_family](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n(); ++i) {
        Mat2 m = null_family ? random_null_matrix(rng) : random_mass_matrix(rng);
        if (null_family)
          while (frobenius_norm(m) < 1e-3) m = random_null_matrix(rng);
        const Mat2 moved = act_matrix(transporter(m), representative(classify(m)));
        acc.add(rel(distance(moved, m), frobenius_norm(m)));
      }
      return acc.value;
    };
  };
  s.at_most("transporter_mass", cfg.tol, s.n(), transporter_check(false));
  s.at_most("transporter_null", cfg.tol, s.n(), transporter_check(true));
  s.at_most("massive_little_group_fixes", cfg.tol, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      const Mat2 a = random_sl2(rng, 1.0);
      const auto base = MassOrbitPoint::standard(random_mass(rng)).v();
      acc.add(rel(norm(act_vector(SpinElement::make(a, a), base) - base), norm(base)));
    }
    return acc.value;
  });
  s.at_most("massive_fixer_is_diagonal", 1e-8, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      const Mat2 a = random_sl2(rng, 1.0);
      const Mat2 base = sigma_map(MassOrbitPoint::standard(random_mass(rng)).v());
      // (A, B) fixes v̊ exactly when B = σ(v̊)^-1 A σ(v̊).
      const Mat2 b = inv2(base) * a * base;
      acc.add(distance(a, b));
    }
    return acc.value;
  });
  s.at_most("null_little_law", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    const Complex i{0.0, 1.0};
    for (std::size_t k = 0; k < s.n(); ++k) {
      const auto a = random_null_params(rng), b = random_null_params(rng);
      const SpinElement lhs = null_little_element(a) * null_little_element(b);
      const SpinElement rhs =
          null_little_element({b.z1 + std::exp(-i * b.z) * a.z1, b.z2 + std::exp(i * b.z) * a.z2, a.z + b.z});
      acc.add(rel(distance(lhs.a(), rhs.a()) + distance(lhs.b(), rhs.b()), frobenius_norm(lhs.a())));
    }
    return acc.value;
  });
  s.at_most("null_rotation_conjugation", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    const Complex i{0.0, 1.0};
    for (std::size_t k = 0; k < s.n(); ++k) {
      const auto p = random_null_params(rng);
      const SpinElement r = null_rotation(p.z);
      const SpinElement lhs = r * null_translation(p.z1, p.z2) * spin_inv(r);
      const SpinElement rhs = null_translation(std::exp(i * p.z) * p.z1, std::exp(-i * p.z) * p.z2);
      acc.add(distance(lhs.a(), rhs.a()) + distance(lhs.b(), rhs.b()));
    }
    return acc.value;
  });
  s.at_most("null_little_fixes", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    const Mat2 base = null_representative();
    for (std::size_t k = 0; k < s.n(); ++k)
      acc.add(distance(act_matrix(null_little_element(random_null_params(rng)), base), base));
    return acc.value;
  });
  s.at_most("character_equivariance", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t k = 0; k < s.n(); ++k) {
      const Character chi{random_vector(rng)};
      const auto z = random_vector(rng);
      const SpinElement g = random_spin(rng, 0.5);
      acc.add(std::abs(char_eval(char_pullback(g, chi), z) - char_eval(chi, act_vector(spin_inv(g), z))));
    }
    return acc.value;
  });
  s.at_most("character_trace_form", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t k = 0; k < s.n(); ++k) {
      const Character chi{random_vector(rng)};
      const auto z = random_vector(rng);
      acc.add(std::abs(char_eval(chi, z) - char_eval_trace(chi, z)));
    }
    return acc.value;
  });
  return s.take();
}

// boost

double spin_distance(const SpinElement& x, const SpinElement& y) {
  return distance(x.a(), y.a()) + distance(x.b(), y.b());
}

MassOrbitPoint hemisphere_point(Rng& rng, Complex z_m, double re_ratio) {
  const Complex r{re_ratio, rng.uniform(-2.0, 2.0)};
  const auto u = rng.unit_vector();
  const Complex spatial = z_m * principal_sqrt(r * r - 1.0);
  return MassOrbitPoint::make({{z_m * r, spatial * u[0], spatial * u[1], spatial * u[2]}}, z_m);
}

SuiteReport boost_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("boost", cfg);
  for (BoostMethod m : orbit_methods()) {
    s.at_most("embedding_" + std::string(to_string(m)), cfg.tol, s.n(), [&, m](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n(); ++i) {
        const auto p = random_orbit_point(rng, random_mass(rng));
        acc.add(embedding_residual(boost(m, p), p));
      }
      return acc.value;
    });
  }
  s.at_most("beta3_antipode", 0.0, 3, [](Rng&) {
    MaxAcc acc;
    for (Complex z_m : {Complex{1.0}, Complex{0.0, 1.0}, std::polar(2.0, std::numbers::pi / 3.0)}) {
      const auto p = MassOrbitPoint::make(-MassOrbitPoint::standard(z_m).v(), z_m);
      acc.add(embedding_residual(beta3(p), p));
    }
    return acc.value;
  });
  s.at_most("jplus_square", cfg.tol, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto p = random_orbit_point(rng, random_mass(rng));
      const Mat2 j = j_plus(p);
      const Mat2 target = sigma_map(p.v()) / p.z_m();
      acc.add(rel(distance(j * j, target), frobenius_norm(target)));
    }
    return acc.value;
  });
  s.at_most("jplus_determinant", cfg.tol, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) acc.add(std::abs(det2(j_plus(random_orbit_point(rng, random_mass(rng)))) - 1.0));
    return acc.value;
  });
  for (BoostMethod m : {BoostMethod::Beta2, BoostMethod::Beta3}) {
    s.at_most("real_restriction_" + std::string(to_string(m)), cfg.tol, s.n_tenth(), [&, m](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n_tenth(); ++i) {
        const auto shell = random_mass_shell(rng);
        const auto& q = shell.p;
        const auto p = MassOrbitPoint::make({{q[0], q[1], q[2], q[3]}}, shell.m);
        const SpinElement w = sign_aligned(beta_wigner(q, shell.m));
        acc.add(rel(spin_distance(sign_aligned(boost(m, p)), w), frobenius_norm(w.a())));
      }
      return acc.value;
    });
  }
  s.check("beta1_real_form_violation", Comparison::AtLeast, 1e-3, s.n_tenth(), [&](Rng& rng) {
    MinAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      const auto shell = random_mass_shell(rng);
      const auto& q = shell.p;
      acc.add(real_form_defect(beta1(MassOrbitPoint::make({{q[0], q[1], q[2], q[3]}}, shell.m))));
    }
    return acc.value;
  });
  const double theta = std::numbers::pi - 1e-4;
  s.check("directional_limit_separation", Comparison::GreaterThan, 1.0, 9, [&](Rng&) {
    MinAcc acc;
    const std::array<std::array<double, 3>, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (Complex z_m : {Complex{1.0}, Complex{0.0, 1.0}, std::polar(2.0, std::numbers::pi / 3.0)})
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
          acc.add(distance(directional_limit(axes[a], z_m, theta), directional_limit(axes[b], z_m, theta)));
    return acc.value;
  });
  s.at_most("directional_limit_closed_form", 1e-3, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    const Complex i{0.0, 1.0};
    for (std::size_t k = 0; k < s.n_tenth(); ++k) {
      const auto u = rng.unit_vector();
      Mat2 expected = std::cos(theta / 2.0) * Mat2::identity();
      for (int j = 1; j <= 3; ++j) expected += i * std::sin(theta / 2.0) * u[j - 1] * pauli(j);
      acc.add(distance(directional_limit(u, random_mass(rng), theta), expected));
    }
    return acc.value;
  });
  s.at_most("beta3p_hemisphere_branches", cfg.tol, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t k = 0; k < s.n_tenth(); ++k) {
      const Complex z_m = random_mass(rng);
      for (double side : {1e-6, -1e-6}) {
        const auto p = hemisphere_point(rng, z_m, side);
        acc.add(embedding_residual(beta3_prime(p), p));
      }
    }
    return acc.value;
  });
  return s.take();
}

// cocycle

SuiteReport cocycle_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("cocycle", cfg);
  for (BoostMethod m : orbit_methods()) {
    const std::string tag(to_string(m));
    s.at_most("diagonality_" + tag, cfg.tol, s.n(), [&, m](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n(); ++i) {
        const SpinElement g = random_spin(rng, 1.0);
        const auto p = random_orbit_point(rng, random_mass(rng));
        acc.add(wigner_cocycle_checked(m, g, p, kInf).diagonality_residual);
      }
      return acc.value;
    });
    s.at_most("fixes_base_" + tag, cfg.tol, s.n(), [&, m](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n(); ++i) {
        const SpinElement g = random_spin(rng, 1.0);
        const auto p = random_orbit_point(rng, random_mass(rng));
        acc.add(wigner_cocycle_checked(m, g, p, kInf).fixes_residual);
      }
      return acc.value;
    });
    s.at_most("composition_" + tag, cfg.tol, s.n(), [&, m](Rng& rng) {
      MaxAcc acc;
      for (std::size_t i = 0; i < s.n(); ++i) {
        const SpinElement g1 = random_spin(rng, 1.0), g2 = random_spin(rng, 1.0);
        const auto p = random_orbit_point(rng, random_mass(rng));
        const auto moved = MassOrbitPoint::make(act_vector(spin_inv(g1), p.v()), p.z_m());
        const Mat2 lhs = wigner_cocycle(m, g1 * g2, p, kInf);
        const Mat2 rhs = wigner_cocycle(m, g1, p, kInf) * wigner_cocycle(m, g2, moved, kInf);
        acc.add(rel(distance(lhs, rhs), frobenius_norm(lhs)));
      }
      return acc.value;
    });
  }
  return s.take();
}

// measure

OrbitChartPoint random_chart_point(Rng& rng, const BoxDomain& box, Complex z_m) {
  std::array<double, 6> x{};
  for (std::size_t k = 0; k < 6; ++k) x[k] = rng.uniform(box.lo[k], box.hi[k]);
  return OrbitChartPoint::from_real_coords(x, z_m);
}

constexpr double kMeasureSpinScale = 0.5;
constexpr double kMinV22 = 0.1;

bool chart_safe(const SpinElement& g, const OrbitChartPoint& p) {
  const Mat2 v = act_matrix(g, chart_to_matrix(p));
  return std::abs(v(1, 1)) >= kMinV22;
}

SuiteReport measure_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("measure", cfg);
  const BoxDomain box = default_box();
  s.at_most("radon_nikodym_invariance", kRadonNikodymTol, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      SpinElement g;
      OrbitChartPoint p;
      do {
        g = random_spin(rng, kMeasureSpinScale);
        p = random_chart_point(rng, box, random_mass(rng));
      } while (!chart_safe(g, p));
      acc.add(std::abs(radon_nikodym_numeric(g, p) - 1.0));
    }
    return acc.value;
  });
  s.at_most("radon_nikodym_cocycle", 1e-3, s.n_tenth(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n_tenth(); ++i) {
      SpinElement g, h;
      OrbitChartPoint p;
      do {
        g = random_spin(rng, kMeasureSpinScale);
        h = random_spin(rng, kMeasureSpinScale);
        p = random_chart_point(rng, box, random_mass(rng));
      } while (!chart_safe(h, p) || !chart_safe(g * h, p));
      const double lhs = radon_nikodym_numeric(g * h, p);
      const double rhs = radon_nikodym_numeric(h, p) * radon_nikodym_numeric(g, pushforward_chart(h, p));
      acc.add(std::abs(lhs - rhs));
    }
    return acc.value;
  });
  s.at_most("chart_roundtrip", 1e-14, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto p = random_chart_point(rng, box, random_mass(rng));
      const Mat2 v = chart_to_matrix(p);
      const Mat2 back = chart_to_matrix(matrix_to_chart(v, p.z_m));
      acc.add(rel(distance(back, v), frobenius_norm(v)));
    }
    return acc.value;
  });
  s.at_most("pushforward_preserves_det", 1e-10, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto p = random_chart_point(rng, box, random_mass(rng));
      const Mat2 v = act_matrix(random_spin(rng, kMeasureSpinScale), chart_to_matrix(p));
      const double nv = frobenius_norm(v);
      acc.add(rel(std::abs(det2(v) - p.z_m * p.z_m), nv * nv));
    }
    return acc.value;
  });
  return s.take();
}

// induced

OrbitFunction test_function(std::size_t dim) {
  OrbitFunction f;
  f.dim = dim;
  f.evaluate = [dim](const ComplexFourVector& v) {
    double r2 = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) r2 += std::norm(v[mu]);
    const double envelope = std::exp(-r2 / 8.0);
    CVector out{envelope * Complex{1.0, 0.5 * v[0].real()}};
    if (dim == 2) out.push_back(envelope * 0.5 * v[1]);
    return out;
  };
  return f;
}

double vec_distance(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - b[k]);
  return std::sqrt(s);
}

double vec_norm(const CVector& a) { return vec_distance(a, CVector(a.size())); }

SuiteReport induced_suite(const VerifyConfig& cfg) {
  SuiteBuilder s("induced", cfg);
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cfg.samples))));
  const BoostMethod method = cfg.method;

  s.at_most("character_additivity", 1e-14, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto base = MassOrbitPoint::standard(random_mass(rng)).v();
      const auto z = random_vector(rng), w = random_vector(rng);
      acc.add(std::abs(orbit_character(base, z) * orbit_character(base, w) - orbit_character(base, z + w)));
    }
    return acc.value;
  });
  s.at_most("defining_rep_homomorphism", 1e-12, s.n(), [&](Rng& rng) {
    MaxAcc acc;
    const LittleGroupRep rho = defining_rep();
    for (std::size_t i = 0; i < s.n(); ++i) {
      const Mat2 a = random_sl2(rng, 0.5), b = random_sl2(rng, 0.5);
      acc.add(distance(rho.apply(a * b), rho.apply(a) * rho.apply(b)));
    }
    return acc.value;
  });
  for (const LittleGroupRep& rho : {trivial_rep(), defining_rep()}) {
    s.at_most("group_law_" + rho.name, 1e-8, side * side, [&, rho](Rng& rng) {
      MaxAcc acc;
      const OrbitFunction f = test_function(rho.dim);
      for (std::size_t i = 0; i < side; ++i) {
        const Complex z_m = random_mass(rng);
        const auto g1 = random_ispin(rng, 0.5), g2 = random_ispin(rng, 0.5);
        const OrbitFunction inner = induced_function(rho, method, g2, f, z_m);
        const IspinElement g12 = ispin_mul(g1, g2);
        for (std::size_t j = 0; j < side; ++j) {
          const auto p = random_orbit_point(rng, z_m, 0.5);
          const CVector lhs = induced_apply(rho, method, g1, inner, p);
          const CVector rhs = induced_apply(rho, method, g12, f, p);
          acc.add(rel(vec_distance(lhs, rhs), vec_norm(rhs)));
        }
      }
      return acc.value;
    });
  }

  const BoxDomain witness_box{{-1.0, -1.0, -1.0, -1.0, 0.5, -1.0}, {1.0, 1.0, 1.0, 1.0, 2.0, 1.0}};
  const std::size_t witness_groups = std::min<std::size_t>(side, 10);
  const auto witness_reports = [&](const LittleGroupRep& rho, Rng& rng) {
    std::vector<UnitarityReport> out;
    for (std::size_t i = 0; i < witness_groups; ++i) {
      const Complex z_m = random_mass(rng);
      const IspinElement g = random_ispin(rng, 0.05);
      std::vector<OrbitChartPoint> pts;
      for (std::size_t j = 0; j < side; ++j) pts.push_back(random_chart_point(rng, witness_box, z_m));
      out.push_back(unitarity_witness(rho, method, g, test_function(rho.dim), pts));
    }
    return out;
  };
  s.at_most("unitarity_modulus_trivial", kModulusTol, witness_groups * side, [&](Rng& rng) {
    MaxAcc acc;
    for (const auto& r : witness_reports(trivial_rep(), rng))
      for (const auto& e : r.entries) acc.add(rel(e.abs_err, e.rhs));
    return acc.value;
  });
  s.at_most("unitarity_rn_certificates", kRadonNikodymTol, witness_groups * side, [&](Rng& rng) {
    MaxAcc acc;
    for (const auto& r : witness_reports(trivial_rep(), rng))
      for (double x : r.rn_values) acc.add(std::abs(x - 1.0));
    return acc.value;
  });
  s.at_most("defining_rep_flagged_nonunitary", 0.0, 1, [&](Rng& rng) {
    double flagged_unitary = 0.0;
    for (const auto& r : witness_reports(defining_rep(), rng))
      if (r.rep_unitary || r.certified) flagged_unitary += 1.0;
    return flagged_unitary;
  });
  return s.take();
}

using SuiteFn = SuiteReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"clifford", clifford_suite}, {"spin", spin_suite},       {"orbit", orbit_suite},     {"boost", boost_suite},
      {"cocycle", cocycle_suite},   {"measure", measure_suite}, {"induced", induced_suite},
  };
  return table;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyConfig& cfg) {
  if (cfg.samples == 0) throw Error(ErrorCode::UsageError, "samples must be at least 1");
  if (!(cfg.tol > 0.0)) throw Error(ErrorCode::UsageError, "tol must be positive");
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : suite_table())
    if (suite == "all" || suite == name) out.push_back(fn(cfg));
  if (out.empty()) throw Error(ErrorCode::UsageError, "unknown suite '" + std::string(suite) + "'");
  return out;
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass(); });
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::AtMost: return "<=";
    case Comparison::GreaterThan: return ">";
    case Comparison::AtLeast: return ">=";
  }
  return "?";
}

nlohmann::json report_json(std::string_view suite, const VerifyConfig& cfg, const std::vector<SuiteReport>& reports) {
  using nlohmann::json;
  json suites = json::array();
  for (const auto& r : reports) {
    json props = json::array();
    for (const auto& p : r.properties)
      props.push_back({{"name", p.name},
                       {"value", io::real_to_json(p.value)},
                       {"threshold", p.threshold},
                       {"comparison", std::string(to_string(p.comparison))},
                       {"samples", p.samples},
                       {"pass", p.pass}});
    suites.push_back({{"name", r.name}, {"pass", r.pass()}, {"properties", std::move(props)}});
  }
  return {{"suite", std::string(suite)},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"tol", cfg.tol},
          {"method", std::string(to_string(cfg.method))},
          {"pass", all_pass(reports)},
          {"suites", std::move(suites)}};
}

}  // namespace cspin
