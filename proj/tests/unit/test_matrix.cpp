#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "skewtrace/errors.hpp"
#include "skewtrace/matrix.hpp"

using namespace skewtrace;

namespace {
const Complex I1{0.0, 1.0};

ComplexMatrix fixture_a() { return ComplexMatrix::from_rows({{0.0, I1}, {-I1, 0.0}}); }
ComplexMatrix fixture_b() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
}  // namespace

TEST_CASE("matmul examples") {
  Rng rng(3);
  const ComplexMatrix x = oracle::random_hermitian(4, rng) + I1 * oracle::random_hermitian(4, rng);
  CHECK(matmul(ComplexMatrix::identity(4), x) == x);

  const ComplexMatrix expected = ComplexMatrix::from_rows({{I1, 0.0}, {0.0, -I1}});
  CHECK(matmul(fixture_a(), fixture_b()) == expected);

  const ComplexMatrix d = ComplexMatrix::diagonal({0.75, 0.25});
  CHECK(matmul(d, ComplexMatrix::identity(2)) == d);
}

TEST_CASE("matmul agrees with the naive triple loop") {
  Rng rng(11);
  for (std::size_t n = 1; n <= 9; ++n) {
    ComplexMatrix x(n), y(n);
    for (auto& z : x.data()) z = rng.complex_normal();
    for (auto& z : y.data()) z = rng.complex_normal();
    CHECK(oracle::max_abs_diff(matmul(x, y), oracle::naive_product(x, y)) < 1e-13);
  }
}

TEST_CASE("dimension mismatch is an error") {
  const ComplexMatrix x(2), y(3);
  CHECK_THROWS_AS(matmul(x, y), DimensionMismatch);
  CHECK_THROWS_AS(commutator(x, y), DimensionMismatch);
  CHECK_THROWS_AS(anticommutator(x, y), DimensionMismatch);
  CHECK_THROWS_AS(trace_product(x, y), DimensionMismatch);
}

TEST_CASE("construction rejects non-finite entries and wrong sizes") {
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0, 3.0}), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex{NAN, 0.0}}), NonFiniteEntry);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex{0.0, INFINITY}}), NonFiniteEntry);
}

TEST_CASE("adjoint, trace and norm") {
  CHECK(trace(ComplexMatrix::diagonal({0.75, 0.25})) == Complex{1.0, 0.0});
  Rng rng(5);
  ComplexMatrix x(3);
  for (auto& z : x.data()) z = rng.complex_normal();
  CHECK(adjoint(adjoint(x)) == x);
  CHECK(frobenius_norm(ComplexMatrix(4)) == 0.0);
  CHECK(frobenius_norm(ComplexMatrix::identity(4)) == doctest::Approx(2.0));
  CHECK(trace_product(x, adjoint(x)).real() == doctest::Approx(std::pow(frobenius_norm(x), 2)));
}

TEST_CASE("commutator examples") {
  Rng rng(8);
  const ComplexMatrix x = oracle::random_hermitian(3, rng);
  CHECK(frobenius_norm(commutator(x, x)) == 0.0);

  const ComplexMatrix expected = ComplexMatrix::from_rows({{2.0 * I1, 0.0}, {0.0, -2.0 * I1}});
  CHECK(commutator(fixture_a(), fixture_b()) == expected);

  const ComplexMatrix d = ComplexMatrix::diagonal({1.0, -2.0, 5.0});
  const ComplexMatrix e = ComplexMatrix::diagonal({0.5, 3.0, -1.0});
  CHECK(frobenius_norm(commutator(d, e)) == 0.0);
}

TEST_CASE("anticommutator examples") {
  Rng rng(9);
  const ComplexMatrix x = oracle::random_hermitian(3, rng);
  CHECK(frobenius_norm(anticommutator(x, ComplexMatrix(3))) == 0.0);
  CHECK(oracle::max_abs_diff(anticommutator(ComplexMatrix::identity(3), x), 2.0 * x) < 1e-15);

  const double m1 = 0.3, m2 = 0.9;
  const ComplexMatrix result = anticommutator(ComplexMatrix::diagonal({m1, m2}), fixture_b());
  CHECK(oracle::max_abs_diff(result, (m1 + m2) * fixture_b()) < 1e-15);
}

TEST_CASE("property: commutator is traceless and anti-Hermitian for Hermitian inputs") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 9);
    const ComplexMatrix x = oracle::random_hermitian(n, rng, 1.0 + 10.0 * rng.uniform());
    const ComplexMatrix y = oracle::random_hermitian(n, rng);
    const ComplexMatrix c = commutator(x, y);
    CHECK(std::abs(trace(c)) <= 1e-12 * frobenius_norm(x) * frobenius_norm(y));
    CHECK(oracle::max_abs_diff(c, -1.0 * adjoint(c)) <= 1e-12 * frobenius_norm(x) * frobenius_norm(y));
    CHECK(is_hermitian(anticommutator(x, y), 1e-12));
  }
}

TEST_CASE("hermiticity test is relative to max(1, norm)") {
  ComplexMatrix h = ComplexMatrix::diagonal({1e6, -1e6});
  h(0, 1) = 1e-5;  // defect 1e-5 against norm ~1.4e6
  CHECK(is_hermitian(h, 1e-10));
  ComplexMatrix small(2);
  small(0, 1) = 1e-9;
  CHECK_FALSE(is_hermitian(small, 1e-10));
}
