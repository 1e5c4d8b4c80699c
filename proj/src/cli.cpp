#include "ctrnn/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctrnn/io.hpp"

namespace ctrnn {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
  throw ConfigError("config key \"" + key + "\" " + what);
}

double as_double(const json& j, const std::string& key) {
  if (!j.is_number()) bad_key(key, "must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) bad_key(key, "must be an integer");
  return j.get<int>();
}

std::vector<double> as_double_array(const json& j, const std::string& key) {
  if (!j.is_array()) bad_key(key, "must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) bad_key(key, "must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

OutputFormat parse_format(const std::string& s, const std::string& key) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  bad_key(key, "must be \"csv\" or \"json\"");
}

XiVariant parse_variant(const std::string& s, const std::string& key) {
  if (s == "printed") return XiVariant::Printed;
  if (s == "corrected") return XiVariant::Corrected;
  bad_key(key, "must be \"printed\" or \"corrected\"");
}

NetworkParams parse_network(const json& j) {
  if (!j.is_object()) bad_key("network", "must be an object");
  NetworkParams p;
  if (!j.contains("n")) bad_key("network.n", "is required");
  p.n = as_int(j.at("n"), "network.n");
  if (!j.contains("tau")) bad_key("network.tau", "is required");
  p.tau = as_double_array(j.at("tau"), "network.tau");
  if (!j.contains("weights")) bad_key("network.weights", "is required");
  if (!j.at("weights").is_array()) bad_key("network.weights", "must be an n x n array");
  for (const auto& row : j.at("weights"))
    p.weights.push_back(as_double_array(row, "network.weights"));
  if (!j.contains("theta")) bad_key("network.theta", "is required");
  p.theta = as_double_array(j.at("theta"), "network.theta");
  if (!j.contains("inputs")) bad_key("network.inputs", "is required");
  p.inputs = as_double_array(j.at("inputs"), "network.inputs");
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config key \"network\" is invalid: ") + e.what());
  }
  return p;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  RunConfig cfg;
  if (!j.contains("network")) bad_key("network", "is required");
  cfg.network = parse_network(j.at("network"));

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (!g.is_object()) bad_key("grid", "must be an object");
    if (g.contains("y_min")) cfg.grid.y_min = as_double(g.at("y_min"), "grid.y_min");
    if (g.contains("y_max")) cfg.grid.y_max = as_double(g.at("y_max"), "grid.y_max");
    if (g.contains("n_points"))
      cfg.grid.n_points = as_int(g.at("n_points"), "grid.n_points");
    try {
      validate(cfg.grid);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config key \"grid\" is invalid: ") + e.what());
    }
  }

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) bad_key("tolerances", "must be an object");
    if (t.contains("hamiltonicity"))
      cfg.hamiltonicity_tol = as_double(t.at("hamiltonicity"), "tolerances.hamiltonicity");
    if (t.contains("boundary_eps"))
      cfg.boundary_eps = as_double(t.at("boundary_eps"), "tolerances.boundary_eps");
    if (t.contains("series_rel_tol"))
      cfg.series.rel_tol = as_double(t.at("series_rel_tol"), "tolerances.series_rel_tol");
    if (t.contains("series_max_terms"))
      cfg.series.max_terms = as_int(t.at("series_max_terms"), "tolerances.series_max_terms");
    if (!(cfg.hamiltonicity_tol > 0.0))
      bad_key("tolerances.hamiltonicity", "must be positive");
    if (!(cfg.boundary_eps > 0.0)) bad_key("tolerances.boundary_eps", "must be positive");
    if (!(cfg.series.rel_tol > 0.0))
      bad_key("tolerances.series_rel_tol", "must be positive");
  }

  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    if (!o.is_object()) bad_key("oracle", "must be an object");
    if (o.contains("tol")) cfg.oracle_tol = as_double(o.at("tol"), "oracle.tol");
    if (o.contains("max_iter"))
      cfg.oracle_max_iter = as_int(o.at("max_iter"), "oracle.max_iter");
    if (!(cfg.oracle_tol > 0.0)) bad_key("oracle.tol", "must be positive");
    if (cfg.oracle_max_iter < 1) bad_key("oracle.max_iter", "must be at least 1");
  }

  if (j.contains("variant")) {
    if (!j.at("variant").is_string()) bad_key("variant", "must be a string");
    cfg.variant = parse_variant(j.at("variant").get<std::string>(), "variant");
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) bad_key("output", "must be an object");
    if (o.contains("path")) {
      if (!o.at("path").is_string()) bad_key("output.path", "must be a string");
      cfg.output_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string()) bad_key("output.format", "must be a string");
      cfg.output_format =
          parse_format(o.at("format").get<std::string>(), "output.format");
    }
  }

  if (j.contains("simulate")) {
    const json& s = j.at("simulate");
    if (!s.is_object()) bad_key("simulate", "must be an object");
    if (s.contains("y0")) cfg.y0 = as_double_array(s.at("y0"), "simulate.y0");
    if (s.contains("t_end")) cfg.t_end = as_double(s.at("t_end"), "simulate.t_end");
    if (s.contains("dt")) cfg.dt = as_double(s.at("dt"), "simulate.dt");
  }

  if (j.contains("spectrum")) {
    const json& s = j.at("spectrum");
    if (!s.is_object()) bad_key("spectrum", "must be an object");
    if (s.contains("m_max")) cfg.m_max = as_int(s.at("m_max"), "spectrum.m_max");
    if (cfg.m_max < 0) bad_key("spectrum.m_max", "must be non-negative");
    if (s.contains("eigenfunctions_stem")) {
      if (!s.at("eigenfunctions_stem").is_string())
        bad_key("spectrum.eigenfunctions_stem", "must be a string");
      cfg.eigenfunction_stem = s.at("eigenfunctions_stem").get<std::string>();
    }
  }

  if (j.contains("contour")) {
    const json& c = j.at("contour");
    if (!c.is_object()) bad_key("contour", "must be an object");
    if (c.contains("y1_min")) cfg.y1_min = as_double(c.at("y1_min"), "contour.y1_min");
    if (c.contains("y1_max")) cfg.y1_max = as_double(c.at("y1_max"), "contour.y1_max");
    if (c.contains("y2_min")) cfg.y2_min = as_double(c.at("y2_min"), "contour.y2_min");
    if (c.contains("y2_max")) cfg.y2_max = as_double(c.at("y2_max"), "contour.y2_max");
    if (c.contains("resolution"))
      cfg.resolution = as_int(c.at("resolution"), "contour.resolution");
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    if (!s.is_object() || !s.contains("parameters"))
      bad_key("sweep.parameters", "is required for scan");
    const json& params = s.at("parameters");
    if (!params.is_array() || params.empty())
      bad_key("sweep.parameters", "must be a non-empty array");
    for (const auto& item : params) {
      if (!item.is_object()) bad_key("sweep.parameters", "entries must be objects");
      SweepParameter sp;
      if (!item.contains("name") || !item.at("name").is_string())
        bad_key("sweep.parameters[].name", "is required and must be a string");
      sp.name = item.at("name").get<std::string>();
      if (!item.contains("min")) bad_key("sweep.parameters[].min", "is required");
      sp.min = as_double(item.at("min"), "sweep.parameters[].min");
      if (!item.contains("max")) bad_key("sweep.parameters[].max", "is required");
      sp.max = as_double(item.at("max"), "sweep.parameters[].max");
      if (!item.contains("count")) bad_key("sweep.parameters[].count", "is required");
      sp.count = as_int(item.at("count"), "sweep.parameters[].count");
      if (sp.count < 1) bad_key("sweep.parameters[].count", "must be at least 1");
      if (sp.count > 1 && !(sp.max > sp.min))
        bad_key("sweep.parameters[].max", "must exceed min when count > 1");
      cfg.sweep.push_back(std::move(sp));
    }
  }

  return cfg;
}

namespace {

// Output sink: a named file (opened immediately so unwritable paths fail
// before any computation) or stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::optional<std::string>& path) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw ConfigError("output path is not writable: " + *path);
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

void require_format(const RunConfig& cfg, OutputFormat defined,
                    const std::string& command) {
  if (cfg.output_format && *cfg.output_format != defined)
    throw ConfigError(command + " only emits " +
                      (defined == OutputFormat::Csv ? "csv" : "json") +
                      "; the requested format is not defined for it");
}

PlanarParams planar_or_throw(const RunConfig& cfg, const std::string& command) {
  if (cfg.network.n != 2)
    throw DimensionError(command + ": network must have exactly 2 nodes, got " +
                         std::to_string(cfg.network.n));
  return to_planar(cfg.network);
}

HamiltonianCoeffs coeffs_or_throw(const RunConfig& cfg, const PlanarParams& p) {
  // NotHamiltonianError propagates to exit code 5
  return coefficients(p, cfg.hamiltonicity_tol);
}

void write_coeffs(JsonWriter& w, const HamiltonianCoeffs& c) {
  w.begin_object();
  w.key("c1").value(c.c1);
  w.key("d1").value(c.d1);
  w.key("c2").value(c.c2);
  w.key("d2").value(c.d2);
  w.key("e2").value(c.e2);
  w.end_object();
}

void write_admissibility(JsonWriter& w, const AdmissibilityVerdict& av) {
  w.begin_object();
  w.key("verdict").value(to_string(av.verdict));
  w.key("re_xi1").value(av.re_xi1);
  w.key("re_xi2").value(av.re_xi2);
  w.end_object();
}

std::string csv_row_trajectory(const State& s,
                               const std::optional<HamiltonianCoeffs>& hc) {
  std::string row = format_double(s.t);
  for (double v : s.y) {
    row += ',';
    row += format_double(v);
  }
  if (hc) {
    row += ',';
    row += format_double(evaluate_h(*hc, s.y[0], s.y[1]));
  }
  row += '\n';
  return row;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Csv, "simulate");
  if (!cfg.y0) throw ConfigError("config key \"simulate.y0\" is required for simulate");
  if (static_cast<int>(cfg.y0->size()) != cfg.network.n)
    throw ConfigError("config key \"simulate.y0\" must have length network.n");
  if (!(cfg.dt > 0.0)) throw ConfigError("config key \"simulate.dt\" must be positive");
  if (!(cfg.dt <= cfg.t_end))
    throw ConfigError("config key \"simulate.dt\" must not exceed t_end");

  OutputSink sink(cfg.output_path);

  std::optional<HamiltonianCoeffs> hc;
  if (cfg.network.n == 2) {
    const PlanarParams p = to_planar(cfg.network);
    if (check_hamiltonicity(p, cfg.hamiltonicity_tol).verdict !=
        HamiltonicityCase::NotHamiltonian)
      hc = coefficients(p, cfg.hamiltonicity_tol);
  }

  const State s0{*cfg.y0, 0.0};
  const Trajectory traj = integrate_rk4(cfg.network, s0, cfg.t_end, cfg.dt);

  std::string header = "t";
  for (int i = 1; i <= cfg.network.n; ++i) header += ",y" + std::to_string(i);
  if (hc) header += ",H";
  sink.stream() << header << '\n';
  for (const State& s : traj.states) sink.stream() << csv_row_trajectory(s, hc);
  return kExitOk;
}

std::string check_report(const RunConfig& cfg) {
  const PlanarParams p = planar_or_throw(cfg, "check");
  const HamiltonicityResult r = check_hamiltonicity(p, cfg.hamiltonicity_tol);
  JsonWriter w;
  w.begin_object();
  w.key("verdict").value(to_string(r.verdict));
  w.key("mismatch").value(r.mismatch);
  w.key("coefficients");
  if (r.verdict == HamiltonicityCase::NotHamiltonian) {
    w.null_value();
  } else {
    write_coeffs(w, coefficients(p, cfg.hamiltonicity_tol));
  }
  w.end_object();
  return w.str();
}

int cmd_check(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Json, "check");
  OutputSink sink(cfg.output_path);
  sink.stream() << check_report(cfg) << '\n';
  return kExitOk;
}

std::string spectrum_report(const RunConfig& cfg) {
  const PlanarParams p = planar_or_throw(cfg, "spectrum");
  const HamiltonianCoeffs c = coeffs_or_throw(cfg, p);
  const AdmissibilityVerdict av = admissibility(p, cfg.hamiltonicity_tol, cfg.boundary_eps);

  JsonWriter w;
  w.begin_object();
  w.key("coeffs");
  write_coeffs(w, c);
  w.key("variant").value(to_string(cfg.variant));
  w.key("eigenvalues").begin_array();
  for (int m = 0; m <= cfg.m_max; ++m) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const Complex lambda = eigenvalue(c, parity, m);
      w.begin_object();
      w.key("parity").value(to_string(parity));
      w.key("m").value(m);
      w.key("re").value(lambda.real());
      w.key("im").value(lambda.imag());
      w.end_object();
    }
  }
  w.end_array();
  w.key("admissibility");
  write_admissibility(w, av);
  // comparison classification from the corrected exponents, when they exist
  w.key("admissibility_corrected");
  if (c.c2 != 0.0 && s_discriminant(c) != 0.0) {
    const ExponentParams xc = exponent_params(c, XiVariant::Corrected);
    write_admissibility(w, classify_xi(xc.xi1, xc.xi2, cfg.boundary_eps));
  } else {
    w.null_value();
  }
  w.end_object();
  return w.str();
}

int cmd_spectrum(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Json, "spectrum");
  OutputSink sink(cfg.output_path);
  sink.stream() << spectrum_report(cfg) << '\n';

  if (cfg.eigenfunction_stem) {
    const PlanarParams p = planar_or_throw(cfg, "spectrum");
    const HamiltonianCoeffs c = coeffs_or_throw(cfg, p);
    const AdmissibilityVerdict av =
        admissibility(p, cfg.hamiltonicity_tol, cfg.boundary_eps);
    const double s = 4.0 * c.c2 * c.d2 + c.e2 * c.e2;
    if (av.verdict == Admissibility::Inadmissible) {
      std::cerr << "spectrum: parameters are inadmissible; "
                   "eigenfunction sampling suppressed\n";
    } else if (!(s > 0.0) || !(c.c2 > 0.0)) {
      std::cerr << "spectrum: eigenfunctions are not defined for S <= 0 or "
                   "c2 <= 0; sampling suppressed\n";
    } else {
      for (int m = 0; m <= cfg.m_max; ++m) {
        for (Parity parity : {Parity::Even, Parity::Odd}) {
          const SampledEigenfunction f =
              normalize(c, parity, m, cfg.grid, cfg.variant);
          const std::string path = *cfg.eigenfunction_stem + "_" +
                                   to_string(parity) + "_m" +
                                   std::to_string(m) + ".csv";
          std::ofstream out(path, std::ios::binary);
          if (!out) throw ConfigError("output path is not writable: " + path);
          out << "y,psi_re,psi_im\n";
          for (int i = 0; i < f.grid.n_points; ++i)
            out << format_double(f.grid.point(i)) << ','
                << format_double(f.values[i].real()) << ','
                << format_double(f.values[i].imag()) << '\n';
        }
      }
    }
  }
  return kExitOk;
}

namespace {

double* sweep_field(PlanarParams& p, const std::string& name) {
  if (name == "w11") return &p.w11;
  if (name == "w12") return &p.w12;
  if (name == "w21") return &p.w21;
  if (name == "w22") return &p.w22;
  if (name == "tau1") return &p.tau1;
  if (name == "tau2") return &p.tau2;
  if (name == "theta1") return &p.theta1;
  if (name == "theta2") return &p.theta2;
  if (name == "i1") return &p.i1;
  if (name == "i2") return &p.i2;
  return nullptr;
}

const char* admissibility_csv_label(Admissibility a) {
  switch (a) {
    case Admissibility::AdmissibleStrict: return "admissible-strict";
    case Admissibility::AdmissibleBoundary: return "admissible-boundary";
    case Admissibility::Inadmissible: return "inadmissible";
  }
  return "?";
}

}  // namespace

int cmd_scan(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Csv, "scan");
  const PlanarParams base = planar_or_throw(cfg, "scan");
  if (cfg.sweep.empty())
    throw ConfigError("config key \"sweep.parameters\" is required for scan");
  {
    PlanarParams probe = base;
    for (const SweepParameter& sp : cfg.sweep)
      if (sweep_field(probe, sp.name) == nullptr)
        throw ConfigError("config key \"sweep.parameters[].name\" has unknown "
                          "parameter \"" + sp.name + "\"");
  }

  OutputSink sink(cfg.output_path);
  sink.stream()
      << "w11,w12,w21,w22,tau1,tau2,theta1,theta2,i1,i2,verdict,re_xi1,re_xi2\n";

  const size_t dims = cfg.sweep.size();
  std::vector<int> idx(dims, 0);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  bool done = false;
  while (!done) {
    PlanarParams p = base;
    for (size_t d = 0; d < dims; ++d) {
      const SweepParameter& sp = cfg.sweep[d];
      const double v =
          sp.count == 1
              ? sp.min
              : sp.min + idx[d] * (sp.max - sp.min) / (sp.count - 1);
      *sweep_field(p, sp.name) = v;
    }

    std::string verdict;
    double re1 = nan, re2 = nan;
    if (check_hamiltonicity(p, cfg.hamiltonicity_tol).verdict ==
        HamiltonicityCase::NotHamiltonian) {
      verdict = "not-hamiltonian";
    } else {
      const AdmissibilityVerdict av =
          admissibility(p, cfg.hamiltonicity_tol, cfg.boundary_eps);
      verdict = admissibility_csv_label(av.verdict);
      re1 = av.re_xi1;
      re2 = av.re_xi2;
    }
    sink.stream() << format_double(p.w11) << ',' << format_double(p.w12) << ','
                  << format_double(p.w21) << ',' << format_double(p.w22) << ','
                  << format_double(p.tau1) << ',' << format_double(p.tau2) << ','
                  << format_double(p.theta1) << ',' << format_double(p.theta2)
                  << ',' << format_double(p.i1) << ',' << format_double(p.i2)
                  << ',' << verdict << ',' << format_double(re1) << ','
                  << format_double(re2) << '\n';

    // odometer over the sweep axes, last axis fastest
    int d = static_cast<int>(dims) - 1;
    for (; d >= 0; --d) {
      if (++idx[d] < cfg.sweep[d].count) break;
      idx[d] = 0;
    }
    if (d < 0) done = true;
  }
  return kExitOk;
}

std::string verify_report(const RunConfig& cfg) {
  const PlanarParams p = planar_or_throw(cfg, "verify");
  const HamiltonianCoeffs c = coeffs_or_throw(cfg, p);
  const DiscretizedOperator op = discretize(c, cfg.grid);
  const double s = 4.0 * c.c2 * c.d2 + c.e2 * c.e2;
  const bool sampleable = (s > 0.0) && (c.c2 > 0.0);

  JsonWriter w;
  w.begin_object();
  w.key("coeffs");
  write_coeffs(w, c);
  w.key("grid").begin_object();
  w.key("y_min").value(cfg.grid.y_min);
  w.key("y_max").value(cfg.grid.y_max);
  w.key("n").value(cfg.grid.n_points);
  w.end_object();
  w.key("cases").begin_array();
  for (int m = 0; m <= cfg.m_max; ++m) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const Complex lambda = eigenvalue(c, parity, m);
      const EigenEstimate est =
          inverse_iteration(op, lambda, cfg.oracle_tol, cfg.oracle_max_iter);
      w.begin_object();
      w.key("parity").value(to_string(parity));
      w.key("m").value(m);
      w.key("lambda_analytic").begin_object();
      w.key("re").value(lambda.real());
      w.key("im").value(lambda.imag());
      w.end_object();
      w.key("lambda_numeric").begin_object();
      w.key("re").value(est.lambda.real());
      w.key("im").value(est.lambda.imag());
      w.end_object();
      for (XiVariant variant : {XiVariant::Printed, XiVariant::Corrected}) {
        w.key(variant == XiVariant::Printed ? "residual_printed_xi"
                                            : "residual_corrected_xi");
        if (!sampleable) {
          w.null_value();
          continue;
        }
        std::vector<Complex> samples(cfg.grid.n_points);
        for (int i = 0; i < cfg.grid.n_points; ++i)
          samples[i] = eigenfunction(c, parity, m, cfg.grid.point(i), variant);
        double res;
        try {
          res = residual_norm(c, lambda, samples, cfg.grid);
        } catch (const std::domain_error&) {
          w.null_value();  // underflowed to zero everywhere
          continue;
        }
        if (std::isfinite(res))
          w.value(res);
        else
          w.null_value();
      }
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  return w.str();
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Json, "verify");
  OutputSink sink(cfg.output_path);
  sink.stream() << verify_report(cfg) << '\n';  // OracleError maps to exit 6
  return kExitOk;
}

int cmd_contour(const RunConfig& cfg) {
  require_format(cfg, OutputFormat::Csv, "contour");
  const PlanarParams p = planar_or_throw(cfg, "contour");
  const HamiltonianCoeffs c = coeffs_or_throw(cfg, p);
  ContourGrid g;
  try {
    g = contour_grid(c, {cfg.y1_min, cfg.y1_max}, {cfg.y2_min, cfg.y2_max},
                     cfg.resolution);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config key \"contour\" is invalid: ") + e.what());
  }
  OutputSink sink(cfg.output_path);
  sink.stream() << "y1,y2,H\n";
  for (int i = 0; i < g.resolution; ++i)
    for (int j = 0; j < g.resolution; ++j)
      sink.stream() << format_double(g.y1[i]) << ',' << format_double(g.y2[j])
                    << ',' << format_double(g.at(i, j)) << '\n';
  return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"planar ReLU CTRNN dynamics, Hamiltonian structure and spectra"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_path;
  std::string format;
  std::string variant;
  int m_max = -1;
  double t_end = std::numeric_limits<double>::quiet_NaN();
  double dt = std::numeric_limits<double>::quiet_NaN();

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--output", output_path, "output file (default: stdout)");
    sub->add_option("--format,--output-format", format, "csv or json");
    sub->add_option("--variant", variant, "printed or corrected");
    sub->add_option("--m-max", m_max, "largest eigen index m");
    sub->add_option("--t-end", t_end, "integration length");
    sub->add_option("--dt", dt, "integration step");
  };

  CLI::App* c_simulate = app.add_subcommand("simulate", "integrate the network and emit a trajectory CSV");
  CLI::App* c_check = app.add_subcommand("check", "Hamiltonicity verdict and coefficients (JSON)");
  CLI::App* c_spectrum = app.add_subcommand("spectrum", "analytic eigenvalues and admissibility (JSON)");
  CLI::App* c_scan = app.add_subcommand("scan", "admissibility sweep over parameters (CSV)");
  CLI::App* c_verify = app.add_subcommand("verify", "finite-difference verification report (JSON)");
  CLI::App* c_contour = app.add_subcommand("contour", "Hamiltonian level-set grid (CSV)");
  for (CLI::App* sub : {c_simulate, c_check, c_spectrum, c_scan, c_verify, c_contour})
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config_path);
    // flags win over config values
    if (!output_path.empty()) cfg.output_path = output_path;
    if (!format.empty()) cfg.output_format = parse_format(format, "--format");
    if (!variant.empty()) cfg.variant = parse_variant(variant, "--variant");
    if (m_max >= 0) cfg.m_max = m_max;
    if (!std::isnan(t_end)) cfg.t_end = t_end;
    if (!std::isnan(dt)) cfg.dt = dt;

    if (c_simulate->parsed()) return cmd_simulate(cfg);
    if (c_check->parsed()) return cmd_check(cfg);
    if (c_spectrum->parsed()) return cmd_spectrum(cfg);
    if (c_scan->parsed()) return cmd_scan(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
    if (c_contour->parsed()) return cmd_contour(cfg);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const NotHamiltonianError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotHamiltonian;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracle;
  } catch (const std::exception& e) {
    // remaining domain errors are parameter problems (S = 0, bad ranges, ...)
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace ctrnn
