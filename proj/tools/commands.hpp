#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pertsum/perturbation.hpp"

namespace pertsum::cli {

/// Either --level n or --state file.
struct ModeOptions {
  std::optional<std::size_t> level;
  std::optional<std::string> state_path;
};

struct PerturbOptions {
  std::string h_path;
  std::string hp_path;
  double x = 0.0;
  ModeOptions mode;
  Tolerances tol;
};

struct SweepOptions {
  std::string h_path;
  std::string hp_path;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<int> points;
  ModeOptions mode;
  Tolerances tol;
};

struct BoxOptions {
  std::size_t levels = 1;
  double width = 1.0;
  std::string potential;
  std::size_t quadrature_points = 2048;
  std::string out_prefix = "box";
};

struct RandomOptions {
  std::uint64_t seed = 0;
  std::size_t dim = 1;
  double scale = 1.0;
  std::string out_prefix = "random";
};

std::string run_spectrum(const std::string& h_path);
std::string run_perturb(const PerturbOptions& opts);
std::string run_sweep(const SweepOptions& opts);
std::string run_model_box(const BoxOptions& opts);
std::string run_model_random(const RandomOptions& opts);

/// Parses argv-style arguments (args[0] is the program name), dispatches,
/// and writes the command output to `out`. Errors go to `err` as
/// "error: <Name>: <detail>" with exit code 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pertsum::cli
