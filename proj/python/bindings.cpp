#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "cspin/boosts.hpp"
#include "cspin/error.hpp"
#include "cspin/induced.hpp"
#include "cspin/json_io.hpp"
#include "cspin/measure.hpp"
#include "cspin/orbits.hpp"
#include "cspin/verify.hpp"

namespace py = pybind11;
using namespace cspin;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

template <std::size_t N>
CArray to_array(const Mat<N>& m) {
  CArray out({N, N});
  auto r = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(i, j);
  return out;
}

template <std::size_t N>
Mat<N> to_mat(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != static_cast<py::ssize_t>(N) || a.shape(1) != static_cast<py::ssize_t>(N))
    throw Error(ErrorCode::InvalidArgument, "expected a " + std::to_string(N) + "x" + std::to_string(N) + " matrix");
  auto r = a.unchecked<2>();
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = r(i, j);
  return m;
}

CArray to_array(const ComplexFourVector& v) {
  CArray out(4);
  auto r = out.mutable_unchecked<1>();
  for (std::size_t k = 0; k < 4; ++k) r(k) = v[k];
  return out;
}

ComplexFourVector to_vec(const CArray& a) {
  if (a.ndim() != 1 || a.shape(0) != 4) throw Error(ErrorCode::InvalidArgument, "expected a length-4 vector");
  auto r = a.unchecked<1>();
  return {{r(0), r(1), r(2), r(3)}};
}

py::tuple to_tuple(const SpinElement& s) { return py::make_tuple(to_array(s.a()), to_array(s.b())); }

SpinElement to_spin(const CArray& a, const CArray& b) { return SpinElement::make(to_mat<2>(a), to_mat<2>(b)); }

MassOrbitPoint orbit_point(const CArray& v, Complex z_m) { return MassOrbitPoint::make(to_vec(v), z_m); }

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_cspin, m) {
  m.doc() = "ISpin(4,C) structure: Clifford algebra, orbits, standard boosts, Wigner cocycles.";

  static PyObject* error_type = py::exception<Error>(m, "CspinError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("gamma", [](int mu) { return to_array(gamma_weyl(mu).matrix); }, py::arg("mu"), "Weyl gamma matrix gamma_mu.");
  m.def("volume_form", [] { return to_array(volume_form().matrix); });
  m.def("minkowski_embed", [](const CArray& v) { return to_array(minkowski_embed(to_vec(v)).matrix); }, py::arg("v"));
  m.def("eta", [](const CArray& v, const CArray& w) { return eta(to_vec(v), to_vec(w)); }, py::arg("v"), py::arg("w"));
  m.def("sigma_map", [](const CArray& v) { return to_array(sigma_map(to_vec(v))); }, py::arg("v"));
  m.def("sigma_unmap", [](const CArray& mat) { return to_array(sigma_unmap(to_mat<2>(mat))); }, py::arg("m"));

  m.def("act", [](const CArray& a, const CArray& b, const CArray& v) { return to_array(act_vector(to_spin(a, b), to_vec(v))); },
        py::arg("a"), py::arg("b"), py::arg("v"), "(A, B) . v, computed as A sigma(v) B^-1.");
  m.def("covering", [](const CArray& a, const CArray& b) { return to_array(covering_so4(to_spin(a, b))); },
        py::arg("a"), py::arg("b"));
  m.def("random_spin", [](std::uint64_t seed, double scale) { return to_tuple(random_spin(seed, scale)); },
        py::arg("seed"), py::arg("scale") = 1.0);

  m.def(
      "classify",
      [](const CArray& mat) {
        const OrbitClass c = classify(to_mat<2>(mat));
        py::dict d;
        d["tag"] = io::to_json(c)["tag"].get<std::string>();
        if (c.kind == OrbitKind::Mass) d["z2"] = c.z_squared;
        return d;
      },
      py::arg("m"));
  m.def("transporter", [](const CArray& mat) { return to_tuple(transporter(to_mat<2>(mat))); }, py::arg("m"));

  m.def(
      "boost",
      [](const std::string& method, const CArray& v, Complex z_m) {
        return to_tuple(boost(parse_boost_method(method), orbit_point(v, z_m)));
      },
      py::arg("method"), py::arg("v"), py::arg("z_m"));
  m.def("j_plus", [](const CArray& v, Complex z_m) { return to_array(j_plus(orbit_point(v, z_m))); }, py::arg("v"),
        py::arg("z_m"));
  m.def(
      "wigner_cocycle",
      [](const std::string& method, const CArray& a, const CArray& b, const CArray& v, Complex z_m, double tol) {
        return to_array(wigner_cocycle(parse_boost_method(method), to_spin(a, b), orbit_point(v, z_m), tol));
      },
      py::arg("method"), py::arg("a"), py::arg("b"), py::arg("v"), py::arg("z_m"), py::arg("tol") = kDefaultTol);

  m.def(
      "radon_nikodym",
      [](const CArray& a, const CArray& b, Complex v12, Complex v21, Complex v22, Complex z_m, double h) {
        return radon_nikodym_numeric(to_spin(a, b), {v12, v21, v22, z_m}, h);
      },
      py::arg("a"), py::arg("b"), py::arg("v12"), py::arg("v21"), py::arg("v22"), py::arg("z_m"),
      py::arg("h") = kRadonNikodymStep);
  m.def(
      "sample_chart",
      [](std::size_t n, std::uint64_t seed, Complex z_m) {
        const auto points = sample_chart(default_box(), n, seed, z_m);
        py::array_t<double> out({n, std::size_t{6}});
        auto r = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < n; ++i) {
          const auto x = points[i].real_coords();
          for (std::size_t k = 0; k < 6; ++k) r(i, k) = x[k];
        }
        return out;
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("z_m") = Complex{1.0},
      "Rows of real chart coordinates (Re v12, Im v12, Re v21, Im v21, Re v22, Im v22).");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples, double tol, const std::string& method) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.tol = tol;
        cfg.method = parse_boost_method(method);
        std::string text;
        {
          py::gil_scoped_release release;
          text = report_json(suite, cfg, run_verify(suite, cfg)).dump();
        }
        return loads(text);
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("samples") = 1000, py::arg("tol") = kDefaultTol,
      py::arg("method") = "beta3");
  m.def("suite_names", [] { return suite_names(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
