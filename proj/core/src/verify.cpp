#include "pertsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <set>
#include <string>

#include "pertsum/errors.hpp"
#include "pertsum/models.hpp"

namespace pertsum {
namespace {

// Evaluates f at every grid point concurrently and returns the results in
// grid order.
template <typename F>
auto map_grid(std::span<const double> grid, F f) {
  using Result = decltype(f(0.0));
  std::vector<std::future<Result>> pending;
  pending.reserve(grid.size());
  for (double x : grid) pending.push_back(std::async(std::launch::async, f, x));
  std::vector<Result> out;
  out.reserve(grid.size());
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

void require_strength(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "sweep strengths must be finite and > 0");
  }
}

}  // namespace

std::vector<double> default_strength_grid() { return {1e-1, 3e-2, 1e-2, 3e-3, 1e-3}; }

std::vector<double> log_strength_grid(double x_min, double x_max, int points) {
  if (points < 2) throw Error(ErrorKind::InsufficientData, "a sweep needs at least 2 points");
  if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
    throw Error(ErrorKind::InvalidArgument, "grid requires 0 < x_min < x_max");
  }
  const double hi = std::log10(x_max);
  const double lo = std::log10(x_min);
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    grid[static_cast<std::size_t>(k)] = std::pow(10.0, hi + (lo - hi) * k / (points - 1));
  }
  grid.front() = x_max;
  grid.back() = x_min;
  return grid;
}

std::vector<double> exact_levels(const HermitianMatrix& h, const HermitianMatrix& perturbation, double x) {
  return jacobi_eigendecompose(add_scaled(h, perturbation, x)).eigenvalues;
}

std::vector<SweepRecord> pair_and_errors(std::vector<double> perturbative, std::vector<double> exact, double x) {
  if (perturbative.size() != exact.size()) {
    throw Error(ErrorKind::DimensionMismatch, "pair_and_errors: " + std::to_string(perturbative.size()) +
                                                  " vs " + std::to_string(exact.size()));
  }
  std::sort(perturbative.begin(), perturbative.end());
  std::sort(exact.begin(), exact.end());
  std::vector<SweepRecord> records(exact.size());
  for (std::size_t n = 0; n < exact.size(); ++n) {
    records[n] = {x, static_cast<int>(n), perturbative[n], exact[n], std::abs(perturbative[n] - exact[n])};
  }
  return records;
}

OrderFit convergence_order(std::span<const SweepRecord> records, double floor) {
  std::set<double> strengths;
  for (const auto& r : records) {
    if (!(r.x > 0.0) || !std::isfinite(r.x)) {
      throw Error(ErrorKind::InvalidArgument, "convergence_order needs x > 0");
    }
    strengths.insert(r.x);
  }
  if (strengths.size() < 2) {
    throw Error(ErrorKind::InsufficientData, "need at least 2 distinct strengths, got " +
                                                 std::to_string(strengths.size()));
  }

  std::vector<double> lx;
  std::vector<double> ly;
  std::set<double> surviving;
  for (const auto& r : records) {
    if (r.abs_error > floor) {
      lx.push_back(std::log10(r.x));
      ly.push_back(std::log10(r.abs_error));
      surviving.insert(r.x);
    }
  }
  OrderFit fit;
  fit.n_points = static_cast<int>(lx.size());
  if (surviving.size() < 2) {
    fit.floored = true;
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.intercept = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }

  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

bool meets_order(const OrderFit& fit, double min_order) noexcept {
  return fit.floored || fit.slope >= min_order;
}

std::vector<SweepRecord> records_for_level(std::span<const SweepRecord> records, int level) {
  std::vector<SweepRecord> out;
  for (const auto& r : records)
    if (r.level == level) out.push_back(r);
  return out;
}

std::vector<SweepRecord> level_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                     std::span<const double> grid) {
  for (double x : grid) require_strength(x);
  const SpectralDecomposition spec = jacobi_eigendecompose(h);
  const std::vector<double> shifts = level_shifts(perturbation, spec);

  auto rows = map_grid(grid, [&](double x) {
    return pair_and_errors(perturbed_levels(spec, shifts, x), exact_levels(h, perturbation, x), x);
  });
  std::vector<SweepRecord> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<SweepRecord> superposition_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                             const StateVector& b, std::span<const double> grid) {
  for (double x : grid) require_strength(x);
  const SpectralDecomposition spec = jacobi_eigendecompose(h);
  const std::vector<double> shifts = level_shifts(perturbation, spec);
  const double energy = expected_energy(b, spec);
  const std::vector<double> weights = b.weights();

  return map_grid(grid, [&](double x) {
    const double e1 = total_energy(energy, shifts, b, x).total;
    const std::vector<double> exact = exact_levels(h, perturbation, x);
    double weighted = 0.0;
    for (std::size_t n = 0; n < exact.size(); ++n) weighted += weights[n] * exact[n];
    return SweepRecord{x, kWeightedLevel, e1, weighted, std::abs(e1 - weighted)};
  });
}

std::vector<SweepRecord> residual_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                        std::size_t level, std::span<const double> grid, const Tolerances& tol) {
  for (double x : grid) require_strength(x);
  const SpectralDecomposition spec = jacobi_eigendecompose(h);
  if (level >= spec.dim()) throw Error(ErrorKind::InvalidArgument, "level out of range");
  const StateVector b = StateVector::basis_state(spec.dim(), level);

  return map_grid(grid, [&](double x) {
    const FirstOrderResult r = first_order(spec, perturbation, b, x, tol);
    const double res = residual_norm(h, perturbation, x, r.perturbed_levels[level],
                                     to_original_basis(spec, r.perturbed_state));
    return SweepRecord{x, static_cast<int>(level), res, 0.0, res};
  });
}

double min_level_gap(const SpectralDecomposition& spec) noexcept {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n < spec.dim(); ++n) gap = std::min(gap, spec.eigenvalues[n] - spec.eigenvalues[n - 1]);
  return gap;
}

RandomInstance random_nondegenerate_instance(std::uint64_t seed, std::size_t n) {
  // H' comes from a seed stream disjoint from the one scanned for H.
  constexpr std::uint64_t kPerturbationStream = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t kMaxAttempts = 100000;
  for (std::uint64_t s = seed; s - seed < kMaxAttempts; ++s) {
    HermitianMatrix h = random_hermitian(s, n, 1.0);
    const SpectralDecomposition spec = jacobi_eigendecompose(h);
    if (n == 1 || min_level_gap(spec) >= 0.1 * spec.spread()) {
      const HermitianMatrix raw = random_hermitian(seed ^ kPerturbationStream, n, 1.0);
      const double norm = raw.frobenius_norm();
      return {std::move(h), norm > 0.0 ? add_scaled(HermitianMatrix::zero(n), raw, 1.0 / norm) : raw, s};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no H with min gap >= 0.1 * spread found for n=" + std::to_string(n));
}

}  // namespace pertsum
