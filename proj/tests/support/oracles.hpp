#pragma once

// Independent reference computations used only by tests. Nothing here calls
// the eigenbasis or trace-formula code paths it is compared against.

#include <cmath>
#include <complex>

#include "skewtrace/matrix.hpp"
#include "skewtrace/rng.hpp"
#include "skewtrace/state.hpp"

namespace skewtrace::oracle {

/// Textbook i-j-k triple loop.
inline ComplexMatrix naive_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += x(i, k) * y(k, j);
      out(i, j) = sum;
    }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  double worst = 0.0;
  for (std::size_t k = 0; k < x.data().size(); ++k)
    worst = std::max(worst, std::abs(x.data()[k] - y.data()[k]));
  return worst;
}

inline double pow0(double x, double p) { return p == 0.0 ? 1.0 : std::pow(x, p); }

/// Closed forms for rho = diag(l1, l2) and an observable whose only non-zero
/// entries are h at (0,1) and conj(h) at (1,0). Such an H has zero mean in
/// rho, so H0 = H.
struct QubitOffDiagonal {
  double l1, l2, alpha, h_sq;

  double V() const { return (l1 + l2) * h_sq; }
  double cross() const {
    return (pow0(l1, alpha) * pow0(l2, 1 - alpha) + pow0(l1, 1 - alpha) * pow0(l2, alpha)) * h_sq;
  }
  double I() const { return V() - cross(); }
  double J() const { return V() + cross(); }
  double m1() const { return 0.5 * (pow0(l1, alpha) + pow0(l1, 1 - alpha)); }
  double m2() const { return 0.5 * (pow0(l2, alpha) + pow0(l2, 1 - alpha)); }
  double K() const { return (m1() - m2()) * (m1() - m2()) * h_sq; }
  double L() const { return (m1() + m2()) * (m1() + m2()) * h_sq; }
};

/// |Tr[diag(d1, d2) [A, B]]|^2 for off-diagonal A (entry a) and B (entry b):
/// [A,B] = diag(a conj(b) - b conj(a), conj(a) b - conj(b) a).
inline double diag_commutator_weight(double d1, double d2, Complex a, Complex b) {
  const Complex c = a * std::conj(b) - b * std::conj(a);
  return std::norm(d1 * c - d2 * c);
}

/// Random Hermitian matrix with entries of order `scale`.
inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng, double scale = 1.0) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = scale * rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = scale * rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// -1/2 Tr[[rho^a, H][rho^(1-a), H]], the commutator form of the skew
/// information, with the powers taken from an explicit matrix.
inline double commutator_form_I(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b,
                                const ComplexMatrix& h) {
  const ComplexMatrix c1 = naive_product(rho_a, h) - naive_product(h, rho_a);
  const ComplexMatrix c2 = naive_product(rho_b, h) - naive_product(h, rho_b);
  return -0.5 * trace(naive_product(c1, c2)).real();
}

}  // namespace skewtrace::oracle
