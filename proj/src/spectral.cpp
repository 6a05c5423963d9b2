#include "skewtrace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// 2x2 unitary acting on columns p and q.
struct Rotation {
  Complex pp, pq, qp, qq;
};

// Builds G with (G^dagger A G)_pq = 0. The phase of a_pq is removed first so
// the remaining problem is the real symmetric Jacobi rotation.
Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double magnitude = std::abs(apq);
  const Complex phase_conj = std::conj(apq / magnitude);
  const double theta = (aqq - app) / (2.0 * magnitude);
  double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  return {c, s, -s * phase_conj, c * phase_conj};
}

void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = mkp * g.pp + mkq * g.qp;
    m(k, q) = mkp * g.pq + mkq * g.qq;
  }
}

void rotate_rows_adjoint(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = std::conj(g.pp) * mpk + std::conj(g.qp) * mqk;
    m(q, k) = std::conj(g.pq) * mpk + std::conj(g.qq) * mqk;
  }
}

}  // namespace

void require_finite_spectrum(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DomainError("spectral function is undefined at an eigenvalue");
    }
  }
}

SpectralDecomposition eigh(const ComplexMatrix& h, double tol) {
  const double h_norm = frobenius_norm(h);
  const double defect = hermiticity_defect(h);
  if (defect > tol * std::max(1.0, h_norm)) {
    throw NotHermitian("matrix is not Hermitian: ||H - H^dagger||_F = " +
                       std::to_string(defect));
  }

  const std::size_t n = h.dim();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagTol * h_norm;

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (apq == Complex{}) continue;
        const Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, g);
        rotate_rows_adjoint(a, p, q, g);
        rotate_columns(v, p, q, g);
        a(p, q) = Complex{};
        a(q, p) = Complex{};
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    throw NoConvergence("Jacobi eigensolver did not converge in " +
                        std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
  }
  return out;
}

ComplexMatrix reconstruct(const SpectralDecomposition& s, std::span<const double> values) {
  const std::size_t n = s.dim();
  if (values.size() != n) throw DimensionMismatch("reconstruct: value count differs from dim");
  const ComplexMatrix& q = s.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) {
        if (values[k] == 0.0) continue;
        sum += q(i, k) * values[k] * std::conj(q(j, k));
      }
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

}  // namespace skewtrace
