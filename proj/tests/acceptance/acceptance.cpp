// Acceptance checks. Each criterion prints one PASS/FAIL line with the
// worst observed metric; the exit code is nonzero if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "pertsum/eigensolver.hpp"
#include "pertsum/errors.hpp"
#include "pertsum/matrix_io.hpp"
#include "pertsum/models.hpp"
#include "pertsum/perturbation.hpp"
#include "pertsum/verify.hpp"

using namespace pertsum;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Vector random_unit_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Complex> e(n);
  double s = 0.0;
  for (auto& z : e) {
    z = {g(rng), g(rng)};
    s += std::norm(z);
  }
  for (auto& z : e) z /= std::sqrt(s);
  return Vector(std::move(e));
}

// 20 seeded nondegenerate (H, H') pairs at N = 6.
std::vector<RandomInstance> sweep_instances() {
  std::vector<RandomInstance> out;
  for (std::uint64_t k = 0; k < 20; ++k) out.push_back(random_nondegenerate_instance(1000 + 97 * k, 6));
  return out;
}

// ---------------------------------------------------------------------------

Verdict eigensolver_soundness() {
  double worst_residual = 0.0;
  double worst_ortho = 0.0;
  double worst_trace = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const HermitianMatrix h = random_hermitian(seed, n, 1.0);
    const SpectralDecomposition s = jacobi_eigendecompose(h);
    ComplexMatrix lambda(n);
    for (std::size_t m = 0; m < n; ++m) lambda(m, m) = s.eigenvalues[m];
    const double hn = h.frobenius_norm();
    worst_residual = std::max(worst_residual, frobenius_norm(h.to_complex() * s.eigenvectors - s.eigenvectors * lambda) / hn);
    worst_ortho = std::max(worst_ortho, frobenius_norm(s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::identity(n)));
    double sum = 0.0;
    for (double e : s.eigenvalues) sum += e;
    worst_trace = std::max(worst_trace, std::abs(sum - h.trace()) / std::max(std::abs(h.trace()), hn));
  }
  const bool pass = worst_residual <= 1e-10 && worst_ortho <= 1e-10 && worst_trace <= 1e-10;
  return {pass, "max |HV-VL|/|H|=" + sci(worst_residual) + " max |V^HV-I|=" + sci(worst_ortho) +
                    " max trace rel=" + sci(worst_trace)};
}

Verdict textbook_reduction() {
  double worst = 0.0;
  bool diagonal_zero = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const RandomInstance inst = random_nondegenerate_instance(seed * 13 + 1, n);
    const SpectralDecomposition s = jacobi_eigendecompose(inst.h);
    for (std::size_t level = 0; level < n; ++level) {
      const FirstOrderResult r = first_order(s, inst.perturbation, StateVector::basis_state(n, level), 0.1);
      diagonal_zero = diagonal_zero && r.corrections[level] == Complex(0.0);
      for (std::size_t m = 0; m < n; ++m) {
        if (m == level) continue;
        const Complex textbook = matrix_element(s.basis_vector(m), inst.perturbation, s.basis_vector(level)) /
                                 (s.eigenvalues[level] - s.eigenvalues[m]);
        worst = std::max(worst, std::abs(r.corrections[m] - textbook));
      }
    }
  }
  return {worst <= 1e-12 && diagonal_zero,
          "max |a_m - textbook|=" + sci(worst) + (diagonal_zero ? " a_n=0" : " a_n!=0")};
}

Verdict energy_accuracy(const std::vector<RandomInstance>& instances) {
  const auto grid = default_strength_grid();
  double min_slope = std::numeric_limits<double>::infinity();
  int floored = 0;
  bool pass = true;
  std::string failing;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto rows = level_sweep(instances[k].h, instances[k].perturbation, grid);
    for (int level = 0; level < 6; ++level) {
      const auto records = records_for_level(rows, level);
      const OrderFit fit = convergence_order(records);
      if (fit.floored) ++floored;
      else min_slope = std::min(min_slope, fit.slope);
      if (!meets_order(fit)) {
        pass = false;
        // slope over x <= 1e-2 as a diagnostic only; the verdict uses the full grid
        const std::vector<SweepRecord> small_x(records.begin() + 2, records.end());
        failing += " [instance " + std::to_string(k) + " level " + std::to_string(level) + ": slope " +
                   sci(fit.slope) + ", small-x slope " + sci(convergence_order(small_x).slope) + "]";
      }
    }
  }
  return {pass, "120 level fits, min slope=" + sci(min_slope) + " floored=" + std::to_string(floored) + failing};
}

Verdict residual_scaling(const std::vector<RandomInstance>& instances) {
  const auto grid = default_strength_grid();
  double min_slope = std::numeric_limits<double>::infinity();
  int floored = 0;
  bool pass = true;
  for (const auto& inst : instances) {
    for (std::size_t level = 0; level < 6; ++level) {
      const OrderFit fit = convergence_order(residual_sweep(inst.h, inst.perturbation, level, grid));
      pass = pass && meets_order(fit);
      if (fit.floored) ++floored;
      else min_slope = std::min(min_slope, fit.slope);
    }
  }
  return {pass, "120 residual fits, min slope=" + sci(min_slope) + " floored=" + std::to_string(floored)};
}

Verdict weighted_sum_identity() {
  std::mt19937_64 rng(55);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const HermitianMatrix h = random_hermitian(700 + trial, n, 1.0);
    const HermitianMatrix hp = random_hermitian(900 + trial, n, 1.0);
    const SpectralDecomposition s = jacobi_eigendecompose(h);
    const StateVector b(random_unit_vector(rng, n));
    const double x = 0.01 * (1 + trial % 10);
    const double e = expected_energy(b, s);
    const std::vector<double> shifts = level_shifts(hp, s);
    const std::vector<double> levels = perturbed_levels(s, shifts, x);
    const TotalEnergy t = total_energy(e, shifts, b, x);
    double weighted = 0.0;
    for (std::size_t k = 0; k < n; ++k) weighted += std::norm(b[k]) * levels[k];
    worst = std::max(worst, std::abs(t.total - weighted) / std::max(1.0, std::abs(weighted)));
  }
  return {worst <= 1e-12, "max rel |E1 - sum |b|^2 E1n|=" + sci(worst)};
}

Verdict superposition_check(const std::vector<RandomInstance>& instances) {
  std::mt19937_64 rng(808);
  const auto grid = default_strength_grid();
  double min_slope = std::numeric_limits<double>::infinity();
  int floored = 0;
  bool pass = true;
  for (const auto& inst : instances) {
    const StateVector b(random_unit_vector(rng, inst.h.dim()));
    const OrderFit fit = convergence_order(superposition_sweep(inst.h, inst.perturbation, b, grid));
    pass = pass && meets_order(fit);
    if (fit.floored) ++floored;
    else min_slope = std::min(min_slope, fit.slope);
  }
  return {pass, "20 triples, min slope=" + sci(min_slope) + " floored=" + std::to_string(floored)};
}

Verdict exact_cases() {
  std::mt19937_64 rng(31);
  double worst_energy = 0.0;
  double worst_residual = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const RandomInstance inst = random_nondegenerate_instance(300 + seed, n);
    const double c = -1.5 + 0.37 * static_cast<double>(seed);
    const HermitianMatrix hp = add_scaled(HermitianMatrix::zero(n), HermitianMatrix::identity(n), c);
    const SpectralDecomposition s = jacobi_eigendecompose(inst.h);
    const StateVector mix(random_unit_vector(rng, n));
    for (int k = 0; k <= 10; ++k) {
      const double x = 0.1 * k;
      const std::vector<double> exact = exact_levels(inst.h, hp, x);
      const FirstOrderResult sup = first_order(s, hp, mix, x);
      double weighted = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        worst_energy = std::max(worst_energy, std::abs(sup.perturbed_levels[m] - exact[m]));
        weighted += std::norm(mix[m]) * exact[m];
      }
      worst_energy = std::max(worst_energy, std::abs(sup.total_energy - weighted));
      for (std::size_t level = 0; level < n; ++level) {
        const FirstOrderResult r = first_order(s, hp, StateVector::basis_state(n, level), x);
        worst_residual = std::max(worst_residual, residual_norm(inst.h, hp, x, r.perturbed_levels[level],
                                                                to_original_basis(s, r.perturbed_state)));
      }
    }
  }
  return {worst_energy <= 1e-12 && worst_residual <= 1e-12,
          "max energy error=" + sci(worst_energy) + " max residual=" + sci(worst_residual)};
}

Verdict box_model() {
  double worst_const = 0.0;
  for (double v0 : {-3.0, 0.5, 2.0}) {
    const HermitianMatrix m = box_potential_matrix({8, 1.3, {PotentialKind::Constant, v0}});
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) worst_const = std::max(worst_const, std::abs(m(i, j) - (i == j ? v0 : 0.0)));
  }
  double worst_linear = 0.0;
  for (double L : {std::numbers::pi, 1.0, 2.5}) {
    const HermitianMatrix m = box_potential_matrix({6, L, {PotentialKind::Linear, 1.0}});
    for (std::size_t n = 0; n < 6; ++n) worst_linear = std::max(worst_linear, std::abs(m(n, n).real() - L / 2.0));
    const double pi2 = std::numbers::pi * std::numbers::pi;
    worst_linear = std::max(worst_linear, std::abs(m(0, 1).real() - (-8.0 * L * 2.0 / (9.0 * pi2))));
  }
  return {worst_const <= 1e-10 && worst_linear <= 1e-8,
          "const max dev=" + sci(worst_const) + " linear max dev=" + sci(worst_linear)};
}

Verdict degenerate_guard() {
  const std::vector<double> d{1.0, 1.0};
  const HermitianMatrix h = HermitianMatrix::diagonal(d);
  const SpectralDecomposition s = jacobi_eigendecompose(h);
  int raised = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    HermitianMatrix hp = random_hermitian(seed, 2, 1.0);
    if (hp(0, 1) == Complex(0.0)) continue;
    for (std::size_t level = 0; level < 2; ++level) {
      ++total;
      try {
        first_order(s, hp, StateVector::basis_state(2, level), 0.1);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateDenominator) ++raised;
      }
    }
  }
  return {total > 0 && raised == total, std::to_string(raised) + "/" + std::to_string(total) + " raised"};
}

Verdict cli_round_trip() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const HermitianMatrix m = random_hermitian(seed, n, std::pow(10.0, static_cast<double>(seed % 5) - 2.0));
    const HermitianMatrix back = parse_matrix(format_matrix(m));
    for (std::size_t i = 0; i < m.entries().size(); ++i)
      worst = std::max(worst, std::abs(m.entries()[i] - back.entries()[i]));
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("pertsum_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const RandomInstance inst = random_nondegenerate_instance(4242, 5);
  write_text_file((dir / "H.mat").string(), format_matrix(inst.h));
  write_text_file((dir / "Hp.mat").string(), format_matrix(inst.perturbation));
  std::vector<std::string> outputs;
  bool ok = true;
  for (int run = 0; run < 3; ++run) {
    std::ostringstream out;
    std::ostringstream err;
    ok = ok && cli::run({"pertsum", "sweep", (dir / "H.mat").string(), (dir / "Hp.mat").string(), "--level", "1"},
                        out, err) == 0;
    outputs.push_back(out.str());
  }
  fs::remove_all(dir);
  const bool identical = ok && outputs[0] == outputs[1] && outputs[1] == outputs[2] && !outputs[0].empty();
  return {worst <= 1e-15 && identical,
          "max round-trip dev=" + sci(worst) + (identical ? " sweep byte-identical" : " sweep differs")};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<RandomInstance> instances = sweep_instances();

  struct Criterion {
    const char* name;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {"AC1 eigensolver soundness", eigensolver_soundness},
      {"AC2 textbook reduction", textbook_reduction},
      {"AC3 first-order energy accuracy", [&] { return energy_accuracy(instances); }},
      {"AC4 residual scaling", [&] { return residual_scaling(instances); }},
      {"AC5 weighted-sum identity", weighted_sum_identity},
      {"AC6 superposition-mode check", [&] { return superposition_check(instances); }},
      {"AC7 exact cases (H' = cI)", exact_cases},
      {"AC8 box model matrix elements", box_model},
      {"AC9 degenerate guard", degenerate_guard},
      {"AC10 CLI round-trip and determinism", cli_round_trip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              seconds);
  return failures == 0 ? 0 : 1;
}
