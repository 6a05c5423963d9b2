#include "skewtrace/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewtrace/errors.hpp"

namespace skewtrace {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionMismatch("matrix of dim " + std::to_string(dim_) + " needs " +
                            std::to_string(dim_ * dim_) + " entries, got " +
                            std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteEntry("matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("from_rows: matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  for (Complex& z : data_) z *= factor;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex factor, ComplexMatrix m) { return m *= factor; }
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return matmul(lhs, rhs);
}

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* what) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
  }
}

ComplexMatrix matmul(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "matmul");
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  // i-k-j order keeps the inner loop contiguous in both y and out.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y) { return x + y; }

ComplexMatrix scale(const ComplexMatrix& x, Complex factor) { return factor * x; }

ComplexMatrix adjoint(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

Complex trace(const ComplexMatrix& x) {
  Complex sum{};
  for (std::size_t i = 0; i < x.dim(); ++i) sum += x(i, i);
  return sum;
}

Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "trace_product");
  const std::size_t n = x.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) sum += x(i, k) * y(k, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& x) {
  double sum = 0.0;
  for (const Complex& z : x.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "commutator");
  return matmul(x, y) - matmul(y, x);
}

ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "anticommutator");
  return matmul(x, y) + matmul(y, x);
}

double hermiticity_defect(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += std::norm(x(i, j) - std::conj(x(j, i)));
  return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
  return hermiticity_defect(x) <= tol * std::max(1.0, frobenius_norm(x));
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  return out;
}

}  // namespace skewtrace
