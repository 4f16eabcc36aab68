#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "cspin/boosts.hpp"
#include "cspin/induced.hpp"
#include "cspin/json_io.hpp"
#include "cspin/measure.hpp"
#include "cspin/orbits.hpp"
#include "cspin/verify.hpp"

namespace cspin::cli {

using io::json;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UsageError:
    case ErrorCode::NotRealMassShell:
    case ErrorCode::ZeroMass:
      return 2;
    case ErrorCode::ChartSingular: return 3;
    case ErrorCode::OffOrbit:
    case ErrorCode::OffShell:
    case ErrorCode::NonPositiveEnergy:
      return 4;
    case ErrorCode::CocycleNotDiagonal: return 5;
    default: return 1;
  }
}

namespace {

struct Options {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::size_t samples = 10000;
  std::string format = "json";
  std::string output;
  std::string method = "beta3";
  std::string suite = "all";
  std::string vector;
  std::string matrix;
  std::string spin;
  std::string zm = "1";
};

std::uint64_t seed_default() {
  const char* env = std::getenv("CSPIN_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  std::istringstream in(env);
  if (!(in >> value) || !in.eof()) throw Error(ErrorCode::UsageError, "CSPIN_SEED is not an unsigned integer");
  return value;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  out << prefix << ": " << j.dump() << "\n";
}

std::string verify_text(const json& doc) {
  std::ostringstream out;
  for (const auto& suite : doc["suites"]) {
    for (const auto& p : suite["properties"])
      out << (p["pass"].get<bool>() ? "PASS " : "FAIL ") << suite["name"].get<std::string>() << "/"
          << p["name"].get<std::string>() << " " << p["value"].dump() << " " << p["comparison"].get<std::string>()
          << " " << p["threshold"].dump() << "\n";
  }
  out << (doc["pass"].get<bool>() ? "all properties pass" : "some properties fail") << "\n";
  return out.str();
}

Complex parse_complex(const std::string& text) { return io::from_json<Complex>(io::parse(text)); }

ComplexFourVector parse_vector(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::UsageError, "--vector is required");
  return io::from_json<ComplexFourVector>(io::parse(text));
}

json cmd_classify(const Options& o) {
  if (o.vector.empty() == o.matrix.empty()) throw Error(ErrorCode::UsageError, "give exactly one of --vector, --matrix");
  const Mat2 m = o.vector.empty() ? io::from_json<Mat2>(io::parse(o.matrix)) : sigma_map(parse_vector(o.vector));
  const OrbitClass cls = classify(m, o.tol);
  json doc{{"input", io::to_json(m)}, {"class", io::to_json(cls)}};
  if (cls.kind != OrbitKind::ZeroPoint) {
    const SpinElement t = transporter(m, o.tol);
    const Mat2 moved = act_matrix(t, representative(cls));
    doc["transporter"] = io::to_json(t);
    doc["transporter_residual"] = io::real_to_json(distance(moved, m) / std::max(1.0, frobenius_norm(m)));
  }
  return doc;
}

json cmd_boost(const Options& o) {
  const BoostMethod method = parse_boost_method(o.method);
  const ComplexFourVector v = parse_vector(o.vector);
  const Complex z_m = parse_complex(o.zm);
  if (method == BoostMethod::Wigner) {
    bool real = z_m.imag() == 0.0 && z_m.real() > 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) real = real && v[mu].imag() == 0.0;
    if (!real) throw Error(ErrorCode::NotRealMassShell, "wigner boost needs a real four-vector and a real positive mass");
  }
  const MassOrbitPoint p = MassOrbitPoint::make(v, z_m, o.tol);
  const SpinElement beta = boost(method, p);
  const ComplexFourVector image = act_vector(beta, p.standard_vector());
  const double abs_err = norm(image - v);
  const double rel_err = embedding_residual(beta, p);
  json doc{{"method", std::string(to_string(method))},
           {"z_m", io::to_json(z_m)},
           {"v", io::to_json(v)},
           {"beta", io::to_json(beta)},
           {"check",
            {{"lhs", io::to_json(image)},
             {"rhs", io::to_json(v)},
             {"abs_err", io::real_to_json(abs_err)},
             {"rel_err", io::real_to_json(rel_err)},
             {"tol", o.tol},
             {"pass", rel_err <= o.tol}}}};
  if (method == BoostMethod::Beta3 && std::abs(z_m + v[0]) <= kDefaultTol * std::abs(z_m))
    doc["note"] = "antipodal point: boost built from the volume form";
  return doc;
}

json cmd_wigner_rotation(const Options& o) {
  const BoostMethod method = parse_boost_method(o.method);
  if (o.spin.empty()) throw Error(ErrorCode::UsageError, "--spin is required");
  const SpinElement s = io::from_json<SpinElement>(io::parse(o.spin));
  const Complex z_m = parse_complex(o.zm);
  const MassOrbitPoint p = MassOrbitPoint::make(parse_vector(o.vector), z_m, o.tol);
  const CocycleResult r = wigner_cocycle_checked(method, s, p, o.tol);
  return {{"method", std::string(to_string(method))},
          {"h", io::to_json(r.h)},
          {"diagonality_residual", io::real_to_json(r.diagonality_residual)},
          {"fixes_residual", io::real_to_json(r.fixes_residual)}};
}

json cmd_sample(const Options& o) {
  const Complex z_m = parse_complex(o.zm);
  const BoxDomain box = default_box();
  const auto points = sample_chart(box, o.samples, o.seed, z_m);
  std::optional<SpinElement> s;
  if (!o.spin.empty()) s = io::from_json<SpinElement>(io::parse(o.spin));
  json pts = json::array();
  json rn = json::array();
  for (const auto& p : points) {
    pts.push_back({{"chart", io::to_json(p)}, {"v", io::to_json(sigma_unmap(chart_to_matrix(p)))}});
    if (s) rn.push_back(io::rn_record(*s, p, radon_nikodym_numeric(*s, p)));
  }
  json doc{{"seed", o.seed}, {"box", io::to_json(box)}, {"points", std::move(pts)}};
  if (s) doc["radon_nikodym"] = std::move(rn);
  return doc;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed (default: CSPIN_SEED or 0)");
  cmd->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", o.output, "write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.seed = seed_default();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }

  CLI::App app{"ISpin(4,C) structure theory and representations", "cspin"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a four-vector or 2x2 matrix by orbit");
  add_common(classify_cmd, o);
  classify_cmd->add_option("--vector", o.vector, "four-vector as JSON [[re,im] x4]");
  classify_cmd->add_option("--matrix", o.matrix, "2x2 matrix as JSON rows of [re,im]");

  auto* boost_cmd = app.add_subcommand("boost", "standard boost beta(v) with a self-check");
  add_common(boost_cmd, o);
  boost_cmd->add_option("--method", o.method, "beta1, beta2, beta3, beta3p or wigner");
  boost_cmd->add_option("--vector", o.vector, "orbit point as JSON");
  boost_cmd->add_option("--zm", o.zm, "complex mass as JSON [re,im] or a number");

  auto* wigner_cmd = app.add_subcommand("wigner-rotation", "Wigner cocycle beta(v)^-1 s beta(s^-1 v)");
  add_common(wigner_cmd, o);
  wigner_cmd->add_option("--method", o.method, "beta1, beta2, beta3, beta3p or wigner");
  wigner_cmd->add_option("--spin", o.spin, "spin element as JSON {\"a\": ..., \"b\": ...}");
  wigner_cmd->add_option("--vector", o.vector, "orbit point as JSON");
  wigner_cmd->add_option("--zm", o.zm, "complex mass as JSON [re,im] or a number");

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--suite", o.suite, "clifford, spin, orbit, boost, cocycle, measure, induced or all");
  verify_cmd->add_option("--samples", o.samples, "samples per property")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--method", o.method, "boost used by the induced suite");

  auto* sample_cmd = app.add_subcommand("sample", "uniform chart samples of a mass orbit");
  add_common(sample_cmd, o);
  sample_cmd->add_option("--samples", o.samples, "number of points")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--zm", o.zm, "complex mass as JSON [re,im] or a number");
  sample_cmd->add_option("--spin", o.spin, "attach Radon-Nikodym records for this spin element");

  std::vector<const char*> argv{"cspin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool text = o.format == "text";
  json doc;
  std::string rendered;
  int status = 0;
  try {
    if (classify_cmd->parsed()) {
      doc = cmd_classify(o);
    } else if (boost_cmd->parsed()) {
      doc = cmd_boost(o);
    } else if (wigner_cmd->parsed()) {
      doc = cmd_wigner_rotation(o);
    } else if (verify_cmd->parsed()) {
      VerifyConfig cfg{o.seed, o.tol, o.samples, parse_boost_method(o.method)};
      const auto reports = run_verify(o.suite, cfg);
      doc = report_json(o.suite, cfg, reports);
      status = all_pass(reports) ? 0 : 1;
      if (text) rendered = verify_text(doc);
    } else if (sample_cmd->parsed()) {
      if (sample_cmd->count("--samples") == 0) o.samples = 10;
      doc = cmd_sample(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }

  if (rendered.empty()) {
    if (text) {
      std::ostringstream s;
      flatten(doc, "", s);
      rendered = s.str();
    } else {
      rendered = doc.dump(2) + "\n";
    }
  }

  if (o.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!(file << rendered)) {
      err << "error: cannot write " << o.output << "\n";
      return 1;
    }
  }
  return status;
}

}  // namespace cspin::cli
