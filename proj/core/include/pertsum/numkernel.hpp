#pragma once

// Dense complex vectors and Hermitian matrices.
//
// Inner products are conjugate-linear in the first argument (bra-ket
// convention): <u|v> = sum_i conj(u_i) v_i.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pertsum {

using Complex = std::complex<double>;

bool is_finite(Complex z) noexcept;

/// Coordinate tuple of dimension >= 1 with finite entries.
class Vector {
 public:
  explicit Vector(std::vector<Complex> entries);

  static Vector zeros(std::size_t dim);
  static Vector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Euclidean norm sqrt(<v|v>).
  double norm() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Complex> entries_;
};

/// General square complex matrix, row-major. Holds eigenvector columns and
/// other non-Hermitian intermediates.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Vector column(std::size_t j) const;
  ComplexMatrix adjoint() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a) noexcept;

/// Dense self-adjoint matrix. Entries satisfy a(i,j) == conj(a(j,i)) bit
/// exactly and the diagonal is real.
class HermitianMatrix {
 public:
  /// Validates with check_hermitian, then stores (A + A^H) / 2.
  /// Throws NonHermitianInput carrying the maximum violation.
  static HermitianMatrix from_entries(std::size_t dim, std::vector<Complex> entries);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix zero(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  double frobenius_norm() const noexcept;
  double max_abs_entry() const noexcept;
  double trace() const noexcept;
  ComplexMatrix to_complex() const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  HermitianMatrix(std::size_t dim, std::vector<Complex> entries);
  friend HermitianMatrix add_scaled(const HermitianMatrix&, const HermitianMatrix&, double);

  std::size_t dim_;
  std::vector<Complex> entries_;
};

inline constexpr double kHermiticityTolerance = 1e-12;

/// max_{i,j} |a(i,j) - conj(a(j,i))|. Requires entries.size() == dim*dim.
double hermiticity_violation(std::size_t dim, std::span<const Complex> entries);

/// True iff the violation is within 1e-12 * max|entry|.
bool check_hermitian(std::size_t dim, std::span<const Complex> entries);

Complex inner_product(const Vector& u, const Vector& v);
Vector matvec(const HermitianMatrix& a, const Vector& v);
Vector matvec(const ComplexMatrix& a, const Vector& v);

/// <u|A|v>. When u and v are the same vector the result is real up to
/// rounding and is returned with its imaginary part set to zero.
Complex matrix_element(const Vector& u, const HermitianMatrix& a, const Vector& v);

/// A + x B, entrywise. Real x keeps the result Hermitian.
HermitianMatrix add_scaled(const HermitianMatrix& a, const HermitianMatrix& b, double x);

Vector scaled(const Vector& v, Complex factor);
Vector axpy(const Vector& y, Complex alpha, const Vector& x);  // y + alpha x
Vector normalized(const Vector& v);

}  // namespace pertsum
