#include "commands.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pertsum/eigensolver.hpp"
#include "pertsum/errors.hpp"
#include "pertsum/matrix_io.hpp"
#include "pertsum/models.hpp"
#include "pertsum/verify.hpp"

namespace pertsum::cli {
namespace {

HermitianMatrix load_matrix(const std::string& path) { return parse_matrix(read_text_file(path)); }

void require_same_dim(const HermitianMatrix& h, const HermitianMatrix& hp) {
  if (h.dim() != hp.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "H is " + std::to_string(h.dim()) + "-dimensional, H' is " + std::to_string(hp.dim()));
  }
}

StateVector resolve_state(const ModeOptions& mode, std::size_t dim) {
  if (mode.level) {
    if (*mode.level >= dim) {
      throw Error(ErrorKind::InvalidArgument,
                  "level " + std::to_string(*mode.level) + " outside 0.." + std::to_string(dim - 1));
    }
    return StateVector::basis_state(dim, *mode.level);
  }
  StateVector b = parse_vector(read_text_file(*mode.state_path));
  if (b.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "state has dimension " + std::to_string(b.dim()) + ", H has " + std::to_string(dim));
  }
  return b;
}

std::string join(std::span<const Complex> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_complex(values[i]);
  }
  return s;
}

std::string join(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_real(values[i]);
  }
  return s;
}

void write_rows(std::ostream& os, std::span<const SweepRecord> records) {
  for (const auto& r : records) {
    os << format_real(r.x) << ',' << r.level << ',' << format_real(r.perturbative) << ','
       << format_real(r.exact) << ',' << format_real(r.abs_error) << '\n';
  }
}

void write_fit(std::ostream& os, const char* tag, int level, const OrderFit& fit) {
  os << "# " << tag << " level=" << level << " slope=" << (fit.floored ? "floored" : format_real(fit.slope))
     << '\n';
}

}  // namespace

std::string run_spectrum(const std::string& h_path) {
  const HermitianMatrix h = load_matrix(h_path);
  const SpectralDecomposition spec = jacobi_eigendecompose(h);
  std::ostringstream os;
  os << "dim = " << spec.dim() << '\n';
  os << "eigenvalues = " << join(spec.eigenvalues) << '\n';
  for (std::size_t m = 0; m < spec.dim(); ++m) {
    os << "eigenvector." << m << " = " << join(spec.basis_vector(m).entries()) << '\n';
  }
  return os.str();
}

std::string run_perturb(const PerturbOptions& opts) {
  const HermitianMatrix h = load_matrix(opts.h_path);
  const HermitianMatrix hp = load_matrix(opts.hp_path);
  require_same_dim(h, hp);
  const StateVector b = resolve_state(opts.mode, h.dim());

  const SpectralDecomposition spec = jacobi_eigendecompose(h);
  const FirstOrderResult r = first_order(spec, hp, b, opts.x, opts.tol);
  const Vector psi1_original = to_original_basis(spec, r.perturbed_state);
  const double residual = residual_norm(h, hp, opts.x, r.total_energy, psi1_original);

  std::ostringstream os;
  os << "dim = " << spec.dim() << '\n';
  os << "x = " << format_real(opts.x) << '\n';
  if (opts.mode.level) {
    os << "mode = eigenstate\n";
    os << "level = " << *opts.mode.level << '\n';
  } else {
    os << "mode = superposition\n";
    os << "b = " << join(b.coefficients().entries()) << '\n';
  }
  os << "levels = n,E_n,Eprime_n,E1_n\n";
  for (std::size_t n = 0; n < spec.dim(); ++n) {
    os << "level." << n << " = " << n << ',' << format_real(spec.eigenvalues[n]) << ','
       << format_real(r.level_shifts[n]) << ',' << format_real(r.perturbed_levels[n]) << '\n';
  }
  os << "E = " << format_real(r.expected_energy) << '\n';
  os << "Eprime = " << format_real(r.total_first_order) << '\n';
  os << "E1 = " << format_real(r.total_energy) << '\n';
  os << "a = " << join(r.corrections) << '\n';
  os << "psi1 = " << join(r.perturbed_state.entries()) << '\n';
  os << "psi1_normalized = " << join(r.perturbed_state_normalized.entries()) << '\n';
  os << "psi1_original = " << join(psi1_original.entries()) << '\n';
  os << "residual = " << format_real(residual) << '\n';
  return os.str();
}

std::string run_sweep(const SweepOptions& opts) {
  const HermitianMatrix h = load_matrix(opts.h_path);
  const HermitianMatrix hp = load_matrix(opts.hp_path);
  require_same_dim(h, hp);
  const StateVector b = resolve_state(opts.mode, h.dim());

  const bool custom_grid = opts.x_min || opts.x_max || opts.points;
  const std::vector<double> grid =
      custom_grid ? log_strength_grid(opts.x_min.value_or(1e-3), opts.x_max.value_or(1e-1), opts.points.value_or(5))
                  : default_strength_grid();

  const std::vector<SweepRecord> levels = level_sweep(h, hp, grid);
  std::vector<SweepRecord> weighted;
  std::vector<SweepRecord> residuals;
  if (opts.mode.level) {
    residuals = residual_sweep(h, hp, *opts.mode.level, grid, opts.tol);
  } else {
    weighted = superposition_sweep(h, hp, b, grid);
  }

  std::ostringstream os;
  os << "x,level,perturbative,exact,abs_error\n";
  write_rows(os, levels);
  write_rows(os, weighted);
  for (std::size_t n = 0; n < h.dim(); ++n) {
    const int level = static_cast<int>(n);
    write_fit(os, "order", level, convergence_order(records_for_level(levels, level)));
  }
  if (!weighted.empty()) write_fit(os, "order", kWeightedLevel, convergence_order(weighted));
  if (!residuals.empty()) {
    write_fit(os, "residual", static_cast<int>(*opts.mode.level), convergence_order(residuals));
  }
  return os.str();
}

std::string run_model_box(const BoxOptions& opts) {
  const BoxModelSpec spec{opts.levels, opts.width, parse_potential(opts.potential)};
  const HermitianMatrix h = box_hamiltonian(spec);
  const HermitianMatrix hp = box_potential_matrix(spec, opts.quadrature_points);
  const std::string h_path = opts.out_prefix + "_H.mat";
  const std::string hp_path = opts.out_prefix + "_Hp.mat";
  const std::string header = "box levels=" + std::to_string(opts.levels) + " width=" + format_real(opts.width);
  write_text_file(h_path, format_matrix(h, header));
  write_text_file(hp_path, format_matrix(hp, header + " potential=" + opts.potential));
  return "wrote " + h_path + "\nwrote " + hp_path + "\n";
}

std::string run_model_random(const RandomOptions& opts) {
  const HermitianMatrix h = random_hermitian(opts.seed, opts.dim, opts.scale);
  const std::string path = opts.out_prefix + "_H.mat";
  write_text_file(path, format_matrix(h, "random seed=" + std::to_string(opts.seed) + " dim=" +
                                             std::to_string(opts.dim) + " scale=" + format_real(opts.scale)));
  return "wrote " + path + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order perturbation theory by summation over an eigenbasis"};
  app.require_subcommand(1);

  std::string spectrum_path;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and phase-fixed eigenvectors of H");
  spectrum->add_option("H", spectrum_path, "Matrix file")->required();

  auto add_mode = [](CLI::App* cmd, ModeOptions& mode, Tolerances& tol) {
    auto* level = cmd->add_option("--level", mode.level, "Eigenstate mode: psi = phi_n");
    auto* state = cmd->add_option("--state", mode.state_path, "Superposition mode: file with b_j");
    level->excludes(state);
    cmd->add_option("--tol-degen", tol.degenerate, "Relative degeneracy tolerance")->capture_default_str();
    cmd->add_option("--tol-num", tol.numerator, "Relative 0/0 numerator tolerance")->capture_default_str();
  };

  PerturbOptions perturb_opts;
  auto* perturb = app.add_subcommand("perturb", "First-order energies and eigenstate of H + x H'");
  perturb->add_option("H", perturb_opts.h_path, "Unperturbed matrix file")->required();
  perturb->add_option("Hp", perturb_opts.hp_path, "Perturbation matrix file")->required();
  perturb->add_option("--x", perturb_opts.x, "Perturbation strength")->required();
  add_mode(perturb, perturb_opts.mode, perturb_opts.tol);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "CSV of first-order vs exact levels over a strength grid");
  sweep->add_option("H", sweep_opts.h_path, "Unperturbed matrix file")->required();
  sweep->add_option("Hp", sweep_opts.hp_path, "Perturbation matrix file")->required();
  sweep->add_option("--x-min", sweep_opts.x_min, "Smallest strength (default 1e-3)");
  sweep->add_option("--x-max", sweep_opts.x_max, "Largest strength (default 1e-1)");
  sweep->add_option("--points", sweep_opts.points, "Number of log-spaced strengths (default 5)");
  add_mode(sweep, sweep_opts.mode, sweep_opts.tol);

  auto* model = app.add_subcommand("model", "Write model Hamiltonians as matrix files");
  model->require_subcommand(1);
  BoxOptions box_opts;
  auto* box = model->add_subcommand("box", "Particle in a box with a perturbing potential");
  box->add_option("--levels", box_opts.levels, "Number of basis states")->required();
  box->add_option("--width", box_opts.width, "Well width L")->required();
  box->add_option("--potential", box_opts.potential, "const:v | linear:l | quadratic:k")->required();
  box->add_option("--quadrature-points", box_opts.quadrature_points, "Simpson subintervals")
      ->capture_default_str();
  box->add_option("--out", box_opts.out_prefix, "Output prefix")->capture_default_str();
  RandomOptions random_opts;
  auto* random = model->add_subcommand("random", "Seeded random Hermitian matrix");
  random->add_option("--seed", random_opts.seed, "Generator seed")->required();
  random->add_option("--dim", random_opts.dim, "Dimension")->required();
  random->add_option("--scale", random_opts.scale, "Entry magnitude bound")->capture_default_str();
  random->add_option("--out", random_opts.out_prefix, "Output prefix")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* cmd : {perturb, sweep}) {
      auto& mode = cmd == perturb ? perturb_opts.mode : sweep_opts.mode;
      if (cmd->parsed() && !mode.level && !mode.state_path) {
        throw CLI::ValidationError("exactly one of --level or --state is required");
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return 1;
  }

  try {
    if (spectrum->parsed()) {
      out << run_spectrum(spectrum_path);
    } else if (perturb->parsed()) {
      out << run_perturb(perturb_opts);
    } else if (sweep->parsed()) {
      out << run_sweep(sweep_opts);
    } else if (box->parsed()) {
      out << run_model_box(box_opts);
    } else if (random->parsed()) {
      out << run_model_random(random_opts);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pertsum::cli
