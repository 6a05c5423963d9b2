#include "skewtrace/state.hpp"

#include <cmath>
#include <string>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

constexpr double kExpectationImagTol = 1e-10;

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha out of range [0, 1]: " + std::to_string(alpha));
  }
}

ComplexMatrix gaussian_gram(std::size_t dim, std::size_t rank, Rng& rng) {
  std::vector<Complex> g(dim * rank);
  for (Complex& z : g) z = rng.complex_normal();
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < rank; ++k) sum += g[i * rank + k] * std::conj(g[j * rank + k]);
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

}  // namespace

Observable::Observable(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw NotHermitian("observable is not Hermitian: ||H - H^dagger||_F = " +
                       std::to_string(hermiticity_defect(m)));
  }
  matrix_ = hermitian_part(m);
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double psd_tol,
                                         double hermitian_tol) {
  if (m.empty()) throw DimensionMismatch("density matrix must have dim >= 1");
  if (!is_hermitian(m, hermitian_tol)) {
    throw NotHermitian("density matrix is not Hermitian: ||M - M^dagger||_F = " +
                       std::to_string(hermiticity_defect(m)));
  }
  const double tr = trace(m).real();
  if (!(tr > 0.0)) throw ZeroTrace("density matrix trace must be positive");

  ComplexMatrix normalised = hermitian_part(m);
  normalised *= 1.0 / tr;
  SpectralDecomposition spectrum = eigh(normalised, hermitian_tol);

  bool clamped = false;
  for (double& lambda : spectrum.eigenvalues) {
    if (lambda < -psd_tol) {
      throw NotPSD("density matrix has negative eigenvalue " + std::to_string(lambda));
    }
    if (lambda <= psd_tol && lambda != 0.0) {
      lambda = 0.0;
      clamped = true;
    }
  }
  double sum = 0.0;
  for (double lambda : spectrum.eigenvalues) sum += lambda;
  for (double& lambda : spectrum.eigenvalues) lambda /= sum;

  if (clamped) {
    normalised = reconstruct(spectrum, spectrum.eigenvalues);
  }
  const double renorm = trace(normalised).real();
  normalised *= 1.0 / renorm;
  return DensityMatrix(std::move(normalised), std::move(spectrum));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw InvalidArgument("random_density: rank must satisfy 1 <= rank <= dim (rank=" +
                          std::to_string(rank) + ", dim=" + std::to_string(dim) + ")");
  }
  return DensityMatrix::from_matrix(gaussian_gram(dim, rank, rng));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

Observable random_observable(std::size_t dim, Rng& rng) {
  if (dim < 1) throw InvalidArgument("random_observable: dim must be >= 1");
  ComplexMatrix g(dim);
  for (Complex& z : g.data()) z = rng.complex_normal();
  return Observable(hermitian_part(g));
}

Observable random_observable(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_observable(dim, rng);
}

double expectation(const DensityMatrix& rho, const Observable& h) {
  require_same_dim(rho.matrix(), h.matrix(), "expectation");
  const Complex value = trace_product(rho.matrix(), h.matrix());
  if (std::abs(value.imag()) > kExpectationImagTol * std::max(1.0, std::abs(value.real()))) {
    throw InconsistencyError("Tr[rho H] has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

Observable center(const DensityMatrix& rho, const Observable& h) {
  const double mean = expectation(rho, h);
  ComplexMatrix centered = h.matrix();
  for (std::size_t i = 0; i < centered.dim(); ++i) centered(i, i) -= mean;
  return Observable(centered);
}

std::vector<double> powered_eigenvalues(const DensityMatrix& rho, double alpha) {
  require_alpha(alpha);
  return transform_eigenvalues(rho.spectrum(), [alpha](double lambda) {
    if (alpha == 0.0) return 1.0;
    return lambda <= 0.0 ? 0.0 : std::pow(lambda, alpha);
  });
}

ComplexMatrix fractional_power(const DensityMatrix& rho, double alpha) {
  if (alpha == 1.0) return rho.matrix();
  return reconstruct(rho.spectrum(), powered_eigenvalues(rho, alpha));
}

}  // namespace skewtrace
