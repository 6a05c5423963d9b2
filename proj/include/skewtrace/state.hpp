#pragma once

#include <cstdint>

#include "skewtrace/matrix.hpp"
#include "skewtrace/rng.hpp"
#include "skewtrace/spectral.hpp"

namespace skewtrace {

/// Eigenvalues with |lambda| <= kPsdClampTol are rounding noise and are set
/// to 0. Positive noise matters as much as negative: fractional powers turn
/// 1e-17 into 1e-17^0.1 ~ 0.02.
inline constexpr double kPsdClampTol = 1e-12;

/// Hermitian operator; stored as its exact Hermitian part.
class Observable {
 public:
  /// Throws NotHermitian when ||H - H^dagger||_F > tol * max(1, ||H||_F).
  explicit Observable(const ComplexMatrix& m, double tol = kHermitianTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

/// Validated quantum state: Hermitian, positive semidefinite, unit trace.
///
/// The spectrum is computed once at construction. Eigenvalues are
/// non-negative, sum to one, and rounding-level ones are exactly zero (the
/// matrix is then rebuilt from the cleaned spectrum).
class DensityMatrix {
 public:
  /// Normalises `m` by its trace and validates it.
  ///
  /// Errors: NotHermitian, ZeroTrace (trace not positive), NotPSD (an
  /// eigenvalue of the normalised matrix below -psd_tol).
  static DensityMatrix from_matrix(const ComplexMatrix& m, double psd_tol = kPsdClampTol,
                                   double hermitian_tol = kHermitianTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  std::span<const double> eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  DensityMatrix(ComplexMatrix m, SpectralDecomposition s)
      : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

inline DensityMatrix density_from_matrix(const ComplexMatrix& m, double psd_tol = kPsdClampTol) {
  return DensityMatrix::from_matrix(m, psd_tol);
}

/// rho = G G^dagger / Tr[G G^dagger] with G a dim x rank matrix of standard
/// complex Gaussians. Throws InvalidArgument unless 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// (G + G^dagger) / 2 with G a dim x dim matrix of standard complex Gaussians.
Observable random_observable(std::size_t dim, Rng& rng);
Observable random_observable(std::size_t dim, std::uint64_t seed);

/// Tr[rho H], required to be real within 1e-10.
double expectation(const DensityMatrix& rho, const Observable& h);

/// H0 = H - Tr[rho H] I.
Observable center(const DensityMatrix& rho, const Observable& h);

/// rho^alpha for alpha in [0, 1], with 0^alpha = 0 for alpha > 0 and
/// 0^0 = 1 (so rho^0 is the identity even for singular rho).
ComplexMatrix fractional_power(const DensityMatrix& rho, double alpha);

/// The eigenvalues of rho^alpha in the order of rho.spectrum().
std::vector<double> powered_eigenvalues(const DensityMatrix& rho, double alpha);

}  // namespace skewtrace
