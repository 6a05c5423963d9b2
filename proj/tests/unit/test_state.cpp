#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "skewtrace/errors.hpp"
#include "skewtrace/state.hpp"

using namespace skewtrace;

namespace {
const Complex I1{0.0, 1.0};

double eigen_sum(const DensityMatrix& rho) {
  const auto l = rho.eigenvalues();
  return std::accumulate(l.begin(), l.end(), 0.0);
}
}  // namespace

TEST_CASE("density_from_matrix examples") {
  const DensityMatrix rho = density_from_matrix(ComplexMatrix::diagonal({0.75, 0.25}));
  CHECK(rho.eigenvalues()[0] == 0.75);
  CHECK(rho.eigenvalues()[1] == 0.25);
  CHECK(trace(rho.matrix()).real() == 1.0);

  const DensityMatrix pure = density_from_matrix(ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK(pure.eigenvalues()[0] == 1.0);
  CHECK(pure.eigenvalues()[1] == 0.0);

  // diag(1, -0.5) scaled to unit trace is diag(2, -1).
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix::diagonal({1.0, -0.5})), NotPSD);
}

TEST_CASE("density_from_matrix error paths") {
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix::from_rows({{0.5, 0.1}, {0.3, 0.5}})),
                  NotHermitian);
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix(2)), ZeroTrace);
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix::diagonal({-1.0, 0.0})), ZeroTrace);
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix()), DimensionMismatch);
}

TEST_CASE("density_from_matrix normalises trace and clamps rounding negatives") {
  const DensityMatrix scaled = density_from_matrix(ComplexMatrix::diagonal({3.0, 1.0}));
  CHECK(scaled.eigenvalues()[0] == 0.75);

  const DensityMatrix clamped = density_from_matrix(ComplexMatrix::diagonal({1.0, -5e-13}));
  CHECK(clamped.eigenvalues()[1] == 0.0);
  CHECK(eigen_sum(clamped) == 1.0);
  CHECK(clamped.matrix()(1, 1).real() >= 0.0);
  CHECK_THROWS_AS(density_from_matrix(ComplexMatrix::diagonal({1.0, -5e-12})), NotPSD);
}

TEST_CASE("random_density examples") {
  const DensityMatrix one = random_density(1, 1, 12345);
  CHECK(one.dim() == 1);
  CHECK(one.matrix()(0, 0) == Complex{1.0, 0.0});

  const DensityMatrix full = random_density(4, 4, 42);
  for (double l : full.eigenvalues()) CHECK(l > 0.0);
  CHECK(eigen_sum(full) == doctest::Approx(1.0).epsilon(1e-15));

  const DensityMatrix pure = random_density(4, 1, 7);
  CHECK(pure.eigenvalues()[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(pure.eigenvalues()[k]) < 1e-12);

  CHECK_THROWS_AS(random_density(3, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(random_density(3, 4, 1), InvalidArgument);
}

TEST_CASE("random_density is deterministic per seed") {
  CHECK(random_density(5, 3, 99).matrix() == random_density(5, 3, 99).matrix());
  CHECK_FALSE(random_density(5, 3, 99).matrix() == random_density(5, 3, 100).matrix());
}

TEST_CASE("property: random_density passes validation for 10,000 seeds") {
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const std::size_t dim = 1 + seed % 8;
    const std::size_t rank = 1 + (seed / 8) % dim;
    try {
      const DensityMatrix rho = random_density(dim, rank, seed);
      const DensityMatrix again = density_from_matrix(rho.matrix());
      const auto l = again.eigenvalues();
      const bool ok = std::abs(eigen_sum(again) - 1.0) <= 1e-15 &&
                      std::all_of(l.begin(), l.end(), [](double x) { return x >= 0.0; });
      if (!ok) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("random_observable") {
  const Observable scalar = random_observable(1, 3);
  CHECK(scalar.matrix()(0, 0).imag() == 0.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Observable h = random_observable(6, seed);
    CHECK(hermiticity_defect(h.matrix()) == 0.0);
  }
  CHECK(random_observable(2, 1).matrix() == random_observable(2, 1).matrix());
}

TEST_CASE("Observable rejects non-Hermitian matrices") {
  CHECK_THROWS_AS(Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), NotHermitian);
}

TEST_CASE("center examples") {
  const DensityMatrix rho = density_from_matrix(ComplexMatrix::diagonal({0.75, 0.25}));
  const Observable id(ComplexMatrix::identity(2));
  CHECK(frobenius_norm(center(rho, id).matrix()) == 0.0);

  const Observable a(ComplexMatrix::from_rows({{0.0, I1}, {-I1, 0.0}}));
  CHECK(center(rho, a).matrix() == a.matrix());

  const Observable z(ComplexMatrix::diagonal({1.0, -1.0}));
  CHECK(center(rho, z).matrix() == ComplexMatrix::diagonal({0.5, -1.5}));

  CHECK_THROWS_AS(center(rho, Observable(ComplexMatrix::identity(3))), DimensionMismatch);
}

TEST_CASE("property: centering zeroes the mean and is idempotent") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t dim = 2 + seed % 7;
    const DensityMatrix rho = random_density(dim, 1 + rng.uniform_int(0, dim - 1), rng);
    const Observable h = random_observable(dim, rng);
    const Observable h0 = center(rho, h);
    CHECK(std::abs(trace_product(rho.matrix(), h0.matrix())) <= 1e-12);
    CHECK(oracle::max_abs_diff(center(rho, h0).matrix(), h0.matrix()) <= 1e-12);
  }
}

TEST_CASE("fractional_power examples") {
  const DensityMatrix rho = random_density(4, 4, 5);
  CHECK(fractional_power(rho, 1.0) == rho.matrix());
  CHECK(oracle::max_abs_diff(fractional_power(rho, 0.0), ComplexMatrix::identity(4)) < 1e-14);

  const DensityMatrix d = density_from_matrix(ComplexMatrix::diagonal({0.75, 0.25}));
  const ComplexMatrix p = fractional_power(d, 1.0 / 3.0);
  CHECK(p(0, 0).real() == doctest::Approx(0.908560296416).epsilon(1e-12));
  CHECK(p(1, 1).real() == doctest::Approx(0.629960524947).epsilon(1e-12));
}

TEST_CASE("fractional_power boundary conventions on singular states") {
  const DensityMatrix pure = density_from_matrix(ComplexMatrix::diagonal({1.0, 0.0}));
  // 0^0 = 1: the full identity, not the support projector.
  CHECK(fractional_power(pure, 0.0) == ComplexMatrix::identity(2));
  CHECK(fractional_power(pure, 0.3)(1, 1) == Complex{});
  CHECK_THROWS_AS(fractional_power(pure, -0.1), DomainError);
  CHECK_THROWS_AS(fractional_power(pure, 1.5), DomainError);
}

TEST_CASE("property: rho^a rho^(1-a) = rho for full-rank states") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const std::size_t dim = 1 + seed % 8;
    const DensityMatrix rho = random_density(dim, dim, rng);
    const double a = rng.uniform();
    const ComplexMatrix prod =
        matmul(fractional_power(rho, a), fractional_power(rho, 1.0 - a));
    CHECK(frobenius_norm(prod - rho.matrix()) <= 1e-10);
  }
}

TEST_CASE("property: (rho^(1/q))^q = rho") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(5, 5, seed);
    const ComplexMatrix root = fractional_power(rho, 1.0 / 3.0);
    CHECK(frobenius_norm(oracle::naive_product(oracle::naive_product(root, root), root) -
                         rho.matrix()) <= 1e-12);
  }
}
