#include "pertsum/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pertsum/errors.hpp"

namespace pertsum {
namespace {

void require_finite(std::span<const Complex> entries, const char* what) {
  for (const auto& z : entries) {
    if (!is_finite(z)) throw Error(ErrorKind::NonFiniteValue, std::string(what) + " has a non-finite entry");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// ---------------------------------------------------------------- Vector

Vector::Vector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "vector dimension must be >= 1");
  require_finite(entries_, "vector");
}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<Complex>(dim)); }

Vector Vector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorKind::InvalidArgument, "unit vector index out of range");
  std::vector<Complex> e(dim);
  e[index] = 1.0;
  return Vector(std::move(e));
}

double Vector::norm() const noexcept {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

// --------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix needs dim*dim entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Vector ComplexMatrix::column(std::size_t j) const {
  std::vector<Complex> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = (*this)(i, j);
  return Vector(std::move(c));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix difference");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return ComplexMatrix(a.dim(), std::move(e));
}

double frobenius_norm(const ComplexMatrix& a) noexcept {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// ------------------------------------------------------- HermitianMatrix

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {}

HermitianMatrix HermitianMatrix::from_entries(std::size_t dim, std::vector<Complex> entries) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
  if (entries.size() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(entries.size()));
  }
  require_finite(entries, "matrix");
  if (!check_hermitian(dim, entries)) {
    throw Error(ErrorKind::NonHermitianInput,
                "max violation " + std::to_string(hermiticity_violation(dim, entries)));
  }
  std::vector<Complex> sym(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    sym[i * dim + i] = entries[i * dim + i].real();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex avg = 0.5 * (entries[i * dim + j] + std::conj(entries[j * dim + i]));
      sym[i * dim + j] = avg;
      sym[j * dim + i] = std::conj(avg);
    }
  }
  return HermitianMatrix(dim, std::move(sym));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(values[i])) throw Error(ErrorKind::NonFiniteValue, "diagonal entry");
    e[i * n + i] = values[i];
  }
  return HermitianMatrix(n, std::move(e));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return diagonal(std::vector<double>(dim, 1.0));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  return diagonal(std::vector<double>(dim, 0.0));
}

double HermitianMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double HermitianMatrix::max_abs_entry() const noexcept {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double HermitianMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i).real();
  return t;
}

ComplexMatrix HermitianMatrix::to_complex() const { return ComplexMatrix(dim_, entries_); }

double hermiticity_violation(std::size_t dim, std::span<const Complex> entries) {
  if (entries.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "array is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      worst = std::max(worst, std::abs(entries[i * dim + j] - std::conj(entries[j * dim + i])));
  return worst;
}

bool check_hermitian(std::size_t dim, std::span<const Complex> entries) {
  double scale = 0.0;
  for (const auto& z : entries) scale = std::max(scale, std::abs(z));
  return hermiticity_violation(dim, entries) <= kHermiticityTolerance * scale;
}

// ------------------------------------------------------------ operations

Complex inner_product(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim(), "inner_product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Vector matvec(const HermitianMatrix& a, const Vector& v) {
  require_same_dim(a.dim(), v.dim(), "matvec");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return Vector(std::move(out));
}

Vector matvec(const ComplexMatrix& a, const Vector& v) {
  require_same_dim(a.dim(), v.dim(), "matvec");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return Vector(std::move(out));
}

Complex matrix_element(const Vector& u, const HermitianMatrix& a, const Vector& v) {
  require_same_dim(u.dim(), a.dim(), "matrix_element");
  const Complex value = inner_product(u, matvec(a, v));
  if (&u == &v || u == v) return value.real();
  return value;
}

HermitianMatrix add_scaled(const HermitianMatrix& a, const HermitianMatrix& b, double x) {
  require_same_dim(a.dim(), b.dim(), "add_scaled");
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFiniteValue, "add_scaled strength");
  std::vector<Complex> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + x * b.entries_[i];
  require_finite(e, "add_scaled result");
  return HermitianMatrix(a.dim(), std::move(e));
}

Vector scaled(const Vector& v, Complex factor) {
  std::vector<Complex> e(v.entries().begin(), v.entries().end());
  for (auto& z : e) z *= factor;
  return Vector(std::move(e));
}

Vector axpy(const Vector& y, Complex alpha, const Vector& x) {
  require_same_dim(y.dim(), x.dim(), "axpy");
  std::vector<Complex> e(y.entries().begin(), y.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += alpha * x[i];
  return Vector(std::move(e));
}

Vector normalized(const Vector& v) {
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  return scaled(v, 1.0 / n);
}

}  // namespace pertsum
