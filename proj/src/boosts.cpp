#include "cspin/boosts.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cspin/error.hpp"

namespace cspin {

MassOrbitPoint MassOrbitPoint::make(const ComplexFourVector& v, Complex z_m, double tol) {
  if (z_m == Complex{}) throw Error(ErrorCode::ZeroMass, "orbit point needs z_m != 0");
  const double nv = norm(v);
  const double defect = std::abs(eta(v, v) - z_m * z_m);
  if (!(defect <= tol * std::max(1.0, nv * nv)))
    throw Error(ErrorCode::OffOrbit, "|eta(v,v) - z_m^2| = " + std::to_string(defect));
  return {v, z_m};
}

MassOrbitPoint MassOrbitPoint::standard(Complex z_m) {
  if (z_m == Complex{}) throw Error(ErrorCode::ZeroMass, "orbit point needs z_m != 0");
  return {{{z_m, 0.0, 0.0, 0.0}}, z_m};
}

std::string_view to_string(BoostMethod method) {
  switch (method) {
    case BoostMethod::Beta1: return "beta1";
    case BoostMethod::Beta2: return "beta2";
    case BoostMethod::Beta3: return "beta3";
    case BoostMethod::Beta3Prime: return "beta3p";
    case BoostMethod::Wigner: return "wigner";
  }
  return "unknown";
}

BoostMethod parse_boost_method(std::string_view name) {
  for (auto m : {BoostMethod::Beta1, BoostMethod::Beta2, BoostMethod::Beta3, BoostMethod::Beta3Prime,
                 BoostMethod::Wigner})
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::UsageError, "unknown boost method '" + std::string(name) + "'");
}

SpinElement beta1(const MassOrbitPoint& p) {
  return SpinElement::unchecked(Mat2::identity(), inv2(sigma_map(p.v()) / p.z_m()));
}

SpinElement beta2(const MassOrbitPoint& p) {
  const Polar polar = polar2(sigma_map(p.v()) / p.z_m());
  const Mat2 root = sqrt_posdef2(polar.positive);
  return SpinElement::unchecked(root, inv2(polar.unitary) * inv2(root));
}

namespace {

bool near_antipodal_denominator(const MassOrbitPoint& p) {
  return std::abs(p.z_m() + p.v()[0]) <= kDefaultTol * std::abs(p.z_m());
}

Complex beta_plus_denominator(const MassOrbitPoint& p) {
  if (near_antipodal_denominator(p))
    throw Error(ErrorCode::AntipodalPoint, "z_m + v_0 vanishes; j+ is undefined here");
  return p.z_m() * principal_sqrt(2.0 * (1.0 + p.v()[0] / p.z_m()));
}

MassOrbitPoint negated(const MassOrbitPoint& p) {
  return MassOrbitPoint::make(-p.v(), p.z_m(), std::numeric_limits<double>::infinity());
}

SpinElement beta_plus(const MassOrbitPoint& p) { return from_weyl(beta_plus_weyl(p)); }

SpinElement beta_minus(const MassOrbitPoint& p) { return spin_mul(volume_form_spin(), beta_plus(negated(p))); }

}  // namespace

Mat2 j_plus(const MassOrbitPoint& p) {
  const Complex d = beta_plus_denominator(p);
  return (p.z_m() * Mat2::identity() + sigma_map(p.v())) / d;
}

Mat4 beta_plus_weyl(const MassOrbitPoint& p) {
  const Complex d = beta_plus_denominator(p);
  const Mat4 num = p.z_m() * Mat4::identity() + (minkowski_embed(p.v()) * gamma_weyl(0)).matrix;
  return num / d;
}

SpinElement volume_form_spin() {
  static const SpinElement omega = from_weyl(volume_form().matrix, 0.0);
  return omega;
}

SpinElement beta3(const MassOrbitPoint& p) {
  const ComplexFourVector offset = p.v() + p.standard_vector();
  if (norm(offset) <= kDefaultTol * std::max(1.0, std::abs(p.z_m()))) return volume_form_spin();
  if (near_antipodal_denominator(p)) return beta_minus(p);
  return beta_plus(p);
}

SpinElement beta3_prime(const MassOrbitPoint& p) {
  if ((p.v()[0] / p.z_m()).real() >= 0.0) return beta_plus(p);
  return beta_minus(p);
}

SpinElement beta_wigner(const std::array<double, 4>& p, double m, double tol) {
  if (!(m > 0.0)) throw Error(ErrorCode::NonPositiveEnergy, "mass must be positive");
  if (!(p[0] > 0.0)) throw Error(ErrorCode::NonPositiveEnergy, "p_0 must be positive");
  const double shell = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
  const double np2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
  if (!(std::abs(shell - m * m) <= tol * std::max(1.0, np2)))
    throw Error(ErrorCode::OffShell, "eta(p,p) differs from m^2");
  const Mat2 root = sqrt_posdef2(sigma_map({{p[0], p[1], p[2], p[3]}}) / m);
  return SpinElement::unchecked(root, inv2(root));
}

SpinElement boost(BoostMethod method, const MassOrbitPoint& p) {
  switch (method) {
    case BoostMethod::Beta1: return beta1(p);
    case BoostMethod::Beta2: return beta2(p);
    case BoostMethod::Beta3: return beta3(p);
    case BoostMethod::Beta3Prime: return beta3_prime(p);
    case BoostMethod::Wigner: {
      const double scale = std::max(1.0, norm(p.v()));
      std::array<double, 4> real{};
      for (std::size_t mu = 0; mu < 4; ++mu) {
        if (std::abs(p.v()[mu].imag()) > kDefaultTol * scale)
          throw Error(ErrorCode::NotRealMassShell, "wigner boost needs a real four-vector");
        real[mu] = p.v()[mu].real();
      }
      if (std::abs(p.z_m().imag()) > kDefaultTol * std::abs(p.z_m()) || !(p.z_m().real() > 0.0))
        throw Error(ErrorCode::NotRealMassShell, "wigner boost needs a real positive mass");
      return beta_wigner(real, p.z_m().real());
    }
  }
  throw Error(ErrorCode::UsageError, "unknown boost method");
}

double embedding_residual(const SpinElement& beta, const MassOrbitPoint& p) {
  return norm(act_vector(beta, p.standard_vector()) - p.v()) / std::max(1.0, norm(p.v()));
}

SpinElement sign_aligned(const SpinElement& s) {
  const Complex t = trace(s.a());
  const bool flip = t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0);
  if (!flip) return s;
  return SpinElement::unchecked(-s.a(), -s.b());
}

double real_form_defect(const SpinElement& s) { return distance(s.b(), inv2(adjoint(s.a()))); }

MassOrbitPoint antipodal_curve(const std::array<double, 3>& u_hat, double theta, Complex z_m) {
  const double len = std::sqrt(u_hat[0] * u_hat[0] + u_hat[1] * u_hat[1] + u_hat[2] * u_hat[2]);
  if (std::abs(len - 1.0) > kDefaultTol) throw Error(ErrorCode::InvalidArgument, "direction must be a unit vector");
  const Complex i{0.0, 1.0};
  const Complex spatial = i * z_m * std::sin(theta);
  const ComplexFourVector u{{z_m * std::cos(theta), spatial * u_hat[0], spatial * u_hat[1], spatial * u_hat[2]}};
  return MassOrbitPoint::make(u, z_m);
}

Mat2 directional_limit(const std::array<double, 3>& u_hat, Complex z_m, double theta_eval) {
  return j_plus(antipodal_curve(u_hat, theta_eval, z_m));
}

}  // namespace cspin
