#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace skewtrace {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
///
/// Entries are always finite. Construction from raw data validates this;
/// arithmetic on finite inputs is assumed to stay finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of size dim x dim.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of dim*dim row-major entries. Throws DimensionMismatch
  /// on a size mismatch and NonFiniteEntry on NaN/Inf.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// Builds from nested rows; every row must have rows.size() entries.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex factor, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix matmul(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix scale(const ComplexMatrix& x, Complex factor);
ComplexMatrix adjoint(const ComplexMatrix& x);
Complex trace(const ComplexMatrix& x);
/// Tr[XY] without forming the product.
Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y);
double frobenius_norm(const ComplexMatrix& x);

/// [X, Y] = XY - YX
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
/// {X, Y} = XY + YX
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// ||X - X^dagger||_F
double hermiticity_defect(const ComplexMatrix& x);
/// True when ||X - X^dagger||_F <= tol * max(1, ||X||_F).
bool is_hermitian(const ComplexMatrix& x, double tol);
/// (X + X^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& x);

/// Throws DimensionMismatch unless both operands have the same dimension.
void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* what);

}  // namespace skewtrace
