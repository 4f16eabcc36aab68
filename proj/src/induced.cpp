#include "cspin/induced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cspin/error.hpp"

namespace cspin {

DynMatrix DynMatrix::identity(std::size_t n) {
  DynMatrix m{n, std::vector<Complex>(n * n)};
  for (std::size_t i = 0; i < n; ++i) m.data[i * n + i] = 1.0;
  return m;
}

CVector DynMatrix::apply(const CVector& x) const {
  if (x.size() != dim) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in representation action");
  CVector y(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

DynMatrix operator*(const DynMatrix& a, const DynMatrix& b) {
  if (a.dim != b.dim) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  DynMatrix c{a.dim, std::vector<Complex>(a.dim * a.dim)};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t j = 0; j < a.dim; ++j) c.data[i * a.dim + j] += a(i, k) * b(k, j);
  return c;
}

double distance(const DynMatrix& a, const DynMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += std::norm(a.data[i] - b.data[i]);
  return std::sqrt(s);
}

LittleGroupRep trivial_rep() {
  return {"trivial", 1, true, [](const Mat2&) { return DynMatrix::identity(1); }};
}

LittleGroupRep defining_rep() {
  return {"defining", 2, false, [](const Mat2& h) { return DynMatrix{2, {h.data.begin(), h.data.end()}}; }};
}

CocycleResult wigner_cocycle_checked(BoostMethod method, const SpinElement& s, const MassOrbitPoint& p, double tol) {
  const MassOrbitPoint moved = MassOrbitPoint::make(act_vector(spin_inv(s), p.v()), p.z_m());
  const SpinElement pair = spin_inv(boost(method, p)) * s * boost(method, moved);

  CocycleResult out;
  out.h = pair.a();
  out.diagonality_residual = distance(pair.a(), pair.b()) / std::max(1.0, frobenius_norm(pair.a()));
  const ComplexFourVector base = p.standard_vector();
  out.fixes_residual = norm(act_vector(pair, base) - base) / std::max(1.0, std::abs(p.z_m()));
  if (!(out.diagonality_residual <= tol))
    throw Error(ErrorCode::CocycleNotDiagonal,
                "cocycle factors differ by " + std::to_string(out.diagonality_residual));
  return out;
}

Mat2 wigner_cocycle(BoostMethod method, const SpinElement& s, const MassOrbitPoint& p, double tol) {
  return wigner_cocycle_checked(method, s, p, tol).h;
}

Complex orbit_character(const ComplexFourVector& v, const ComplexFourVector& z) {
  return std::polar(1.0, eta(v, z).real());
}

CVector induced_apply(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g, const OrbitFunction& f,
                      const MassOrbitPoint& p, const RadonNikodymHook& theta) {
  if (rho.dim != f.dim) throw Error(ErrorCode::InvalidArgument, "representation and function dimensions differ");
  const ComplexFourVector moved = act_vector(spin_inv(g.s), p.v());
  const Mat2 h = wigner_cocycle(method, g.s, p);
  Complex factor = orbit_character(p.v(), g.z);
  if (theta) factor *= std::sqrt(theta(g, p));
  CVector out = rho.apply(h).apply(f.evaluate(moved));
  for (auto& x : out) x *= factor;
  return out;
}

OrbitFunction induced_function(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g,
                               const OrbitFunction& f, Complex z_m) {
  OrbitFunction out;
  out.dim = f.dim;
  out.evaluate = [rho, method, g, f, z_m](const ComplexFourVector& v) {
    return induced_apply(rho, method, g, f, MassOrbitPoint::make(v, z_m));
  };
  return out;
}

UnitarityReport unitarity_witness(const LittleGroupRep& rho, BoostMethod method, const IspinElement& g,
                                  const OrbitFunction& f, const std::vector<OrbitChartPoint>& points, double h) {
  UnitarityReport report;
  report.rep_name = rho.name;
  report.rep_unitary = rho.unitary;
  bool rn_ok = true;
  bool modulus_ok = true;
  const auto vec_norm = [](const CVector& x) {
    double s = 0.0;
    for (const auto& c : x) s += std::norm(c);
    return std::sqrt(s);
  };

  for (const auto& cp : points) {
    const MassOrbitPoint p = MassOrbitPoint::make(sigma_unmap(chart_to_matrix(cp)), cp.z_m);
    WitnessEntry e;
    e.v = p.v();
    e.lhs = vec_norm(induced_apply(rho, method, g, f, p));
    e.rhs = vec_norm(f.evaluate(act_vector(spin_inv(g.s), p.v())));
    e.abs_err = std::abs(e.lhs - e.rhs);
    report.max_abs_err = std::max(report.max_abs_err, e.abs_err);
    modulus_ok = modulus_ok && e.abs_err <= kModulusTol * std::max(1.0, e.rhs);
    report.entries.push_back(e);

    double rn = std::numeric_limits<double>::quiet_NaN();
    try {
      rn = radon_nikodym_numeric(g.s, cp, h);
      report.max_rn_deviation = std::max(report.max_rn_deviation, std::abs(rn - 1.0));
      rn_ok = rn_ok && std::abs(rn - 1.0) <= kRadonNikodymTol;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ChartSingular) throw;
      rn_ok = false;
    }
    report.rn_values.push_back(rn);
  }
  report.certified = report.rep_unitary && modulus_ok && rn_ok;
  return report;
}

}  // namespace cspin
