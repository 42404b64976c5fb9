#pragma once

// Exact-diagonalization checks of first-order results and log-log fits of
// the error against the perturbation strength.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pertsum/eigensolver.hpp"
#include "pertsum/numkernel.hpp"
#include "pertsum/perturbation.hpp"

namespace pertsum {

struct SweepRecord {
  double x = 0.0;
  int level = 0;  // kWeightedLevel for superposition-mode totals
  double perturbative = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
};

/// Level label used for the weighted total sum_n |b_n|^2 E_{1n}.
inline constexpr int kWeightedLevel = -1;

struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_points = 0;
  bool floored = false;  // fewer than two errors above the floor; slope n/a
};

inline constexpr double kErrorFloor = 1e-12;
inline constexpr double kMinOrder = 1.8;

/// {1e-1, 3e-2, 1e-2, 3e-3, 1e-3}
std::vector<double> default_strength_grid();

/// `points` logarithmically spaced strengths from x_max down to x_min.
/// Throws InsufficientData for points < 2 and InvalidArgument unless
/// 0 < x_min < x_max.
std::vector<double> log_strength_grid(double x_min, double x_max, int points);

/// Ascending eigenvalues of H + x H'.
std::vector<double> exact_levels(const HermitianMatrix& h, const HermitianMatrix& perturbation, double x);

/// Sorts both inputs ascending and pairs them by index.
std::vector<SweepRecord> pair_and_errors(std::vector<double> perturbative, std::vector<double> exact, double x);

/// Least-squares fit of log10(abs_error) on log10(x), using only records
/// with abs_error > floor. Throws InsufficientData unless the records span
/// at least two distinct strengths, InvalidArgument for x <= 0.
OrderFit convergence_order(std::span<const SweepRecord> records, double floor = kErrorFloor);

/// True if the fit shows at least `min_order` or every error was floored.
bool meets_order(const OrderFit& fit, double min_order = kMinOrder) noexcept;

std::vector<SweepRecord> records_for_level(std::span<const SweepRecord> records, int level);

/// E_{1n}(x) against the exact levels of H + x H', for every level and every
/// strength on the grid. Rows are ordered by grid position, then level.
std::vector<SweepRecord> level_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                     std::span<const double> grid);

/// E_1(x) for state b against sum_n |b_n|^2 * exact_n(x); level = kWeightedLevel.
std::vector<SweepRecord> superposition_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                             const StateVector& b, std::span<const double> grid);

/// Residual of (psi_1, E_{1n}) in eigenstate mode for `level`. The residual
/// is stored as both `perturbative` and `abs_error`; `exact` is zero.
std::vector<SweepRecord> residual_sweep(const HermitianMatrix& h, const HermitianMatrix& perturbation,
                                        std::size_t level, std::span<const double> grid,
                                        const Tolerances& tol = {});

/// Smallest gap between adjacent ascending eigenvalues (infinity for N = 1).
double min_level_gap(const SpectralDecomposition& spec) noexcept;

struct RandomInstance {
  HermitianMatrix h;
  HermitianMatrix perturbation;
  std::uint64_t seed;  // seed that produced h
};

/// Random (H, H') pair. H has entries bounded by 1 and a spectrum with
/// min gap >= 0.1 * spread; seeds seed, seed+1, ... are tried in turn.
/// H' is rescaled to ||H'||_F = 1 so that the default grid stays inside
/// the perturbative regime (x ||H'|| well below the level gaps).
/// The gap filter is only satisfiable for small n (about n <= 9); after
/// 100000 rejected seeds InvalidArgument is thrown.
RandomInstance random_nondegenerate_instance(std::uint64_t seed, std::size_t n);

}  // namespace pertsum
