#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pertsum/numkernel.hpp"

namespace pertsum {

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors,
/// stored as the columns of `eigenvectors`. Each column carries a fixed
/// phase (see fix_phase).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  Vector basis_vector(std::size_t m) const { return eigenvectors.column(m); }
  double spread() const noexcept { return eigenvalues.back() - eigenvalues.front(); }
};

inline constexpr int kDefaultMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-12;

/// Cyclic complex Jacobi. Sweeps run row by row over the strict upper
/// triangle until the off-diagonal Frobenius norm is <= 1e-12 * ||A||_F.
/// Throws NoConvergence when that has not happened after `max_sweeps`.
SpectralDecomposition jacobi_eigendecompose(const HermitianMatrix& a, int max_sweeps = kDefaultMaxSweeps);

/// Relative magnitude window inside which entries count as tied for the
/// phase anchor.
inline constexpr double kPhaseTieTolerance = 1e-12;

/// Index of the entry fix_phase rotates onto the positive real axis: the
/// lowest index whose magnitude is within kPhaseTieTolerance of the maximum.
std::size_t phase_anchor(const Vector& column);

/// Multiplies the column by the unit scalar that makes its anchor entry
/// real and positive. Throws ZeroVector for an all-zero column.
Vector fix_phase(const Vector& column);

/// V diag(lambda) V^H.
ComplexMatrix reconstruct(const SpectralDecomposition& spec);

}  // namespace pertsum
