#pragma once

// First-order energies and eigenstate of H + x H', obtained by summing over
// the eigenbasis {phi_m, E_m} of the unperturbed H.
//
// A state is given by its eigenbasis coordinates b (psi = sum_j b_j phi_j).
// Eigenstate mode is the special case b = e_n.

#include <cstddef>
#include <vector>

#include "pertsum/eigensolver.hpp"
#include "pertsum/numkernel.hpp"

namespace pertsum {

inline constexpr double kStateNormTolerance = 1e-10;

/// Eigenbasis coordinates b_j with sum |b_j|^2 = 1 (within 1e-10).
class StateVector {
 public:
  /// Throws NotNormalized when the squared norm is off by more than 1e-10.
  explicit StateVector(Vector coefficients);

  /// b = e_n, i.e. psi = phi_n.
  static StateVector basis_state(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return coefficients_.dim(); }
  const Complex& operator[](std::size_t i) const { return coefficients_[i]; }
  const Vector& coefficients() const noexcept { return coefficients_; }

  /// |b_j|^2 for each j.
  std::vector<double> weights() const;

 private:
  Vector coefficients_;
};

struct Tolerances {
  double degenerate = 1e-9;  // relative to (E_max - E_min + 1)
  double numerator = 1e-9;   // relative to ||H'||_F
};

/// E = sum_m |b_m|^2 E_m.
double expected_energy(const StateVector& b, const SpectralDecomposition& spec);

/// E'_n = <phi_n|H'|phi_n> for every n.
std::vector<double> level_shifts(const HermitianMatrix& perturbation, const SpectralDecomposition& spec);

/// E_{1n} = E_n + x E'_n.
std::vector<double> perturbed_levels(const SpectralDecomposition& spec, const std::vector<double>& shifts,
                                     double x);

struct TotalEnergy {
  double first_order;  // E' = sum_n |b_n|^2 E'_n
  double total;        // E_1 = E + x E'
};

TotalEnergy total_energy(double energy, const std::vector<double>& shifts, const StateVector& b, double x);

/// a_m = (<phi_m|H'|psi> - E' b_m) / (E - E_m).
///
/// When |E - E_m| <= tol.degenerate * (E_max - E_min + 1) the quotient is
/// 0/0 if the numerator is <= tol.numerator * ||H'||_F, and a_m is set to 0.
/// Otherwise the level is genuinely degenerate and DegenerateDenominator is
/// thrown.
std::vector<Complex> correction_coefficients(const HermitianMatrix& perturbation,
                                             const SpectralDecomposition& spec, const StateVector& b,
                                             double energy, double first_order_energy,
                                             const Tolerances& tol = {});

struct PerturbedState {
  Vector raw;         // b + x a, eigenbasis coordinates
  Vector normalized;  // raw / ||raw||
};

/// Throws ZeroVector when b + x a vanishes.
PerturbedState perturbed_state(const StateVector& b, const std::vector<Complex>& corrections, double x);

/// Maps eigenbasis coordinates c to sum_m c_m phi_m in the original basis.
Vector to_original_basis(const SpectralDecomposition& spec, const Vector& coordinates);

/// ||(H + x H') psi1 - E1 psi1|| / ||psi1||, psi1 in original coordinates.
double residual_norm(const HermitianMatrix& h, const HermitianMatrix& perturbation, double x, double e1,
                     const Vector& psi1);

struct FirstOrderResult {
  double expected_energy;                 // E
  std::vector<double> level_shifts;       // E'_n
  std::vector<double> perturbed_levels;   // E_{1n}
  double total_first_order;               // E'
  double total_energy;                    // E_1
  std::vector<Complex> corrections;       // a_m
  Vector perturbed_state;                 // psi_1 = b + x a (eigenbasis)
  Vector perturbed_state_normalized;
};

/// Runs every first-order step for state b at strength x.
FirstOrderResult first_order(const SpectralDecomposition& spec, const HermitianMatrix& perturbation,
                             const StateVector& b, double x, const Tolerances& tol = {});

}  // namespace pertsum
