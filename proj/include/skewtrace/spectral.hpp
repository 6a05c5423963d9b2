#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "skewtrace/matrix.hpp"

namespace skewtrace {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kJacobiOffDiagTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// H = Q diag(eigenvalues) Q^dagger with eigenvalues sorted non-increasing
/// and the columns of Q orthonormal.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input must satisfy ||H - H^dagger||_F <= tol * max(1, ||H||_F); its
/// Hermitian part is diagonalised. Sweeps stop once the off-diagonal
/// Frobenius norm falls to 1e-13 * ||H||_F. Throws NotHermitian or
/// NoConvergence (after 100 sweeps).
SpectralDecomposition eigh(const ComplexMatrix& h, double tol = kHermitianTol);

/// Q diag(values) Q^dagger for the eigenvectors of `s`.
ComplexMatrix reconstruct(const SpectralDecomposition& s, std::span<const double> values);

/// Q f(Lambda) Q^dagger. Throws DomainError if f yields a non-finite value.
template <std::invocable<double> F>
ComplexMatrix spectral_apply(const SpectralDecomposition& s, F&& f);

/// The same eigenvalue transform as spectral_apply, returned as a vector.
template <std::invocable<double> F>
std::vector<double> transform_eigenvalues(const SpectralDecomposition& s, F&& f);

void require_finite_spectrum(std::span<const double> values);

template <std::invocable<double> F>
std::vector<double> transform_eigenvalues(const SpectralDecomposition& s, F&& f) {
  std::vector<double> out;
  out.reserve(s.dim());
  for (double lambda : s.eigenvalues) out.push_back(static_cast<double>(f(lambda)));
  require_finite_spectrum(out);
  return out;
}

template <std::invocable<double> F>
ComplexMatrix spectral_apply(const SpectralDecomposition& s, F&& f) {
  return reconstruct(s, transform_eigenvalues(s, std::forward<F>(f)));
}

}  // namespace skewtrace
