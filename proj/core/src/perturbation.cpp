#include "pertsum/perturbation.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "pertsum/errors.hpp"

namespace pertsum {
namespace {

void require_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFiniteValue, what);
}

}  // namespace

StateVector::StateVector(Vector coefficients) : coefficients_(std::move(coefficients)) {
  double sq = 0.0;
  for (const auto& z : coefficients_.entries()) sq += std::norm(z);
  if (std::abs(sq - 1.0) > kStateNormTolerance) {
    throw Error(ErrorKind::NotNormalized, "norm " + std::to_string(std::sqrt(sq)));
  }
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t n) {
  return StateVector(Vector::unit(dim, n));
}

std::vector<double> StateVector::weights() const {
  std::vector<double> w(dim());
  for (std::size_t j = 0; j < dim(); ++j) w[j] = std::norm(coefficients_[j]);
  return w;
}

double expected_energy(const StateVector& b, const SpectralDecomposition& spec) {
  require_dim(b.dim(), spec.dim(), "expected_energy");
  double e = 0.0;
  for (std::size_t m = 0; m < b.dim(); ++m) e += std::norm(b[m]) * spec.eigenvalues[m];
  return e;
}

std::vector<double> level_shifts(const HermitianMatrix& perturbation, const SpectralDecomposition& spec) {
  require_dim(perturbation.dim(), spec.dim(), "level_shifts");
  std::vector<double> shifts(spec.dim());
  for (std::size_t n = 0; n < spec.dim(); ++n) {
    const Vector phi = spec.basis_vector(n);
    shifts[n] = matrix_element(phi, perturbation, phi).real();
  }
  return shifts;
}

std::vector<double> perturbed_levels(const SpectralDecomposition& spec, const std::vector<double>& shifts,
                                     double x) {
  require_dim(shifts.size(), spec.dim(), "perturbed_levels");
  require_finite(x, "perturbation strength");
  std::vector<double> levels(spec.dim());
  for (std::size_t n = 0; n < levels.size(); ++n) levels[n] = spec.eigenvalues[n] + x * shifts[n];
  return levels;
}

TotalEnergy total_energy(double energy, const std::vector<double>& shifts, const StateVector& b, double x) {
  require_dim(shifts.size(), b.dim(), "total_energy");
  require_finite(x, "perturbation strength");
  double first = 0.0;
  for (std::size_t n = 0; n < b.dim(); ++n) first += std::norm(b[n]) * shifts[n];
  return {first, energy + x * first};
}

std::vector<Complex> correction_coefficients(const HermitianMatrix& perturbation,
                                             const SpectralDecomposition& spec, const StateVector& b,
                                             double energy, double first_order_energy,
                                             const Tolerances& tol) {
  const std::size_t n = spec.dim();
  require_dim(perturbation.dim(), n, "correction_coefficients");
  require_dim(b.dim(), n, "correction_coefficients");

  const Vector psi = to_original_basis(spec, b.coefficients());
  const Vector hp_psi = matvec(perturbation, psi);
  const double denominator_floor = tol.degenerate * (spec.spread() + 1.0);
  const double numerator_floor = tol.numerator * perturbation.frobenius_norm();

  std::vector<Complex> a(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Complex numerator = inner_product(spec.basis_vector(m), hp_psi) - first_order_energy * b[m];
    const double denominator = energy - spec.eigenvalues[m];
    if (std::abs(denominator) > denominator_floor) {
      a[m] = numerator / denominator;
    } else if (std::abs(numerator) <= numerator_floor) {
      a[m] = 0.0;
    } else {
      std::ostringstream detail;
      detail << "m=" << m << " |E-E_m|=" << std::abs(denominator) << " |numerator|=" << std::abs(numerator);
      throw Error(ErrorKind::DegenerateDenominator, detail.str());
    }
  }
  return a;
}

PerturbedState perturbed_state(const StateVector& b, const std::vector<Complex>& corrections, double x) {
  require_dim(corrections.size(), b.dim(), "perturbed_state");
  require_finite(x, "perturbation strength");
  std::vector<Complex> psi(b.dim());
  for (std::size_t m = 0; m < b.dim(); ++m) psi[m] = b[m] + x * corrections[m];
  Vector raw(std::move(psi));
  if (raw.norm() == 0.0) throw Error(ErrorKind::ZeroVector, "b + x a vanishes");
  Vector unit = normalized(raw);
  return {std::move(raw), std::move(unit)};
}

Vector to_original_basis(const SpectralDecomposition& spec, const Vector& coordinates) {
  return matvec(spec.eigenvectors, coordinates);
}

double residual_norm(const HermitianMatrix& h, const HermitianMatrix& perturbation, double x, double e1,
                     const Vector& psi1) {
  require_dim(h.dim(), psi1.dim(), "residual_norm");
  const double scale = psi1.norm();
  if (scale == 0.0) throw Error(ErrorKind::ZeroVector, "residual of the zero vector");
  const Vector applied = matvec(add_scaled(h, perturbation, x), psi1);
  return axpy(applied, -e1, psi1).norm() / scale;
}

FirstOrderResult first_order(const SpectralDecomposition& spec, const HermitianMatrix& perturbation,
                             const StateVector& b, double x, const Tolerances& tol) {
  const double energy = expected_energy(b, spec);
  std::vector<double> shifts = level_shifts(perturbation, spec);
  std::vector<double> levels = perturbed_levels(spec, shifts, x);
  const TotalEnergy total = total_energy(energy, shifts, b, x);
  std::vector<Complex> a = correction_coefficients(perturbation, spec, b, energy, total.first_order, tol);
  PerturbedState state = perturbed_state(b, a, x);
  return FirstOrderResult{energy,
                          std::move(shifts),
                          std::move(levels),
                          total.first_order,
                          total.total,
                          std::move(a),
                          std::move(state.raw),
                          std::move(state.normalized)};
}

}  // namespace pertsum
