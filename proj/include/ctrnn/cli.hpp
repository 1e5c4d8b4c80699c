#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrnn/dynamics.hpp"
#include "ctrnn/oracle.hpp"
#include "ctrnn/spectrum.hpp"

namespace ctrnn {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A planar subcommand was handed a network with n != 2.
class DimensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct SweepParameter {
  std::string name;  // one of w11,w12,w21,w22,tau1,tau2,theta1,theta2,i1,i2
  double min = 0.0;
  double max = 0.0;
  int count = 1;
};

// Everything a subcommand needs, parsed from the JSON config; command-line
// flags override individual fields after loading.
struct RunConfig {
  NetworkParams network;
  Grid grid;
  double hamiltonicity_tol = kDefaultHamiltonicityTol;
  double boundary_eps = kDefaultBoundaryEps;
  SeriesControl series;
  double oracle_tol = 1e-10;
  int oracle_max_iter = 200;
  XiVariant variant = XiVariant::Corrected;
  std::optional<std::string> output_path;
  std::optional<OutputFormat> output_format;
  // simulate
  std::optional<std::vector<double>> y0;
  double t_end = 10.0;
  double dt = 1e-3;
  // spectrum / verify
  int m_max = 3;
  std::optional<std::string> eigenfunction_stem;
  // contour
  double y1_min = -1.0, y1_max = 1.0;
  double y2_min = -1.0, y2_max = 1.0;
  int resolution = 64;
  // scan
  std::vector<SweepParameter> sweep;
};

RunConfig load_config(const std::string& path);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitDimension = 4;
inline constexpr int kExitNotHamiltonian = 5;
inline constexpr int kExitOracle = 6;

int cmd_simulate(const RunConfig& cfg);
int cmd_check(const RunConfig& cfg);
int cmd_spectrum(const RunConfig& cfg);
int cmd_scan(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_contour(const RunConfig& cfg);

// Report bodies, exposed so tests can inspect them without a process spawn.
std::string check_report(const RunConfig& cfg);
std::string spectrum_report(const RunConfig& cfg);
std::string verify_report(const RunConfig& cfg);

// Full argv-level entry point: parses flags, loads the config, dispatches,
// and maps thrown errors onto the exit-code contract above.
int run_cli(int argc, const char* const* argv);

}  // namespace ctrnn
