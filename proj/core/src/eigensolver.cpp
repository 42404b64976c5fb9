#include "pertsum/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pertsum/errors.hpp"

namespace pertsum {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary U that equals the identity outside
// rows/cols p,q and has the block
//   [ c          s e^{i phi} ]
//   [ -s e^{-i phi}   c      ]
// where a(p,q) = |a(p,q)| e^{i phi}. Applies a <- U^H a U and v <- v U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex s_up = s * phase;              // U(p,q)
  const Complex s_dn = -s * std::conj(phase);  // U(q,p)

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + s_dn * akq;
    a(k, q) = s_up * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(s_dn) * aqk;
    a(q, k) = std::conj(s_up) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + s_dn * vkq;
    v(k, q) = s_up * vkp + c * vkq;
  }
}

}  // namespace

SpectralDecomposition jacobi_eigendecompose(const HermitianMatrix& input, int max_sweeps) {
  const std::size_t n = input.dim();
  ComplexMatrix a = input.to_complex();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kJacobiTolerance * input.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "off-diagonal norm above tolerance after " +
                                                std::to_string(sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t m = 0; m < n; ++m) {
    out.eigenvalues[m] = a(order[m], order[m]).real();
    const Vector col = fix_phase(v.column(order[m]));
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, m) = col[k];
  }
  return out;
}

std::size_t phase_anchor(const Vector& column) {
  double largest = 0.0;
  for (const auto& z : column.entries()) largest = std::max(largest, std::abs(z));
  if (largest == 0.0) throw Error(ErrorKind::ZeroVector, "phase of the zero vector is undefined");
  const double cutoff = largest * (1.0 - kPhaseTieTolerance);
  for (std::size_t i = 0; i < column.dim(); ++i)
    if (std::abs(column[i]) >= cutoff) return i;
  return 0;  // unreachable
}

Vector fix_phase(const Vector& column) {
  const std::size_t k = phase_anchor(column);
  const Complex anchor = column[k];
  const Complex rotation = std::conj(anchor) / std::abs(anchor);
  std::vector<Complex> e(column.entries().begin(), column.entries().end());
  for (auto& z : e) z *= rotation;
  e[k] = std::abs(anchor);
  return Vector(std::move(e));
}

ComplexMatrix reconstruct(const SpectralDecomposition& spec) {
  const std::size_t n = spec.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t m = 0; m < n; ++m)
        s += spec.eigenvectors(i, m) * spec.eigenvalues[m] * std::conj(spec.eigenvectors(j, m));
      out(i, j) = s;
    }
  return out;
}

}  // namespace pertsum
