#include "skewtrace/skew_info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

// Clamps rounding-level negatives to zero. `scale` is the magnitude of the
// terms whose difference produced `value`.
double clamp_nonnegative(double value, double scale, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeClampTol * std::max(1.0, scale)) return 0.0;
  throw InconsistencyError(std::string(what) + " is negative beyond rounding: " +
                           std::to_string(value));
}

struct Centered {
  Observable h0;
  double second_moment;  // Tr[rho H0^2]
};

Centered centered(const DensityMatrix& rho, const Observable& h) {
  Observable h0 = center(rho, h);
  const double moment = trace_product(rho.matrix(), matmul(h0.matrix(), h0.matrix())).real();
  return {std::move(h0), moment};
}

// Tr[rho^a H0 rho^(1-a) H0], real for Hermitian factors.
double cross_term(const DensityMatrix& rho, const ComplexMatrix& h0, double alpha) {
  const ComplexMatrix left = matmul(fractional_power(rho, alpha), h0);
  const ComplexMatrix right = matmul(fractional_power(rho, 1.0 - alpha), h0);
  return trace_product(left, right).real();
}

// |<phi_i|H0|phi_j>|^2 in the eigenbasis of rho.
ComplexMatrix eigenbasis(const DensityMatrix& rho, const ComplexMatrix& h0) {
  const ComplexMatrix& q = rho.spectrum().eigenvectors;
  return matmul(adjoint(q), matmul(h0, q));
}

template <typename Weight>
double eigenpair_sum(const DensityMatrix& rho, const Observable& h, double alpha, Weight weight) {
  const SkewParams params(alpha);
  const Observable h0 = center(rho, h);
  const ComplexMatrix rotated = eigenbasis(rho, h0.matrix());
  const auto lambda = rho.eigenvalues();
  const auto pow_a = powered_eigenvalues(rho, params.alpha());
  const auto pow_b = powered_eigenvalues(rho, 1.0 - params.alpha());
  double sum = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const double cross = pow_a[i] * pow_b[j] + pow_b[i] * pow_a[j];
      sum += weight(lambda[i] + lambda[j], cross) * std::norm(rotated(i, j));
    }
  }
  return sum;
}

double half_trace_square(const ComplexMatrix& x) { return 0.5 * trace_product(x, x).real(); }

}  // namespace

SkewParams::SkewParams(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha out of range [0, 1]: " + std::to_string(alpha));
  }
}

double variance(const DensityMatrix& rho, const Observable& h) {
  const Centered c = centered(rho, h);
  return clamp_nonnegative(c.second_moment, 0.0, "variance");
}

Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_same_dim(a.matrix(), b.matrix(), "covariance");
  const Observable a0 = center(rho, a);
  const Observable b0 = center(rho, b);
  return trace_product(rho.matrix(), matmul(a0.matrix(), b0.matrix()));
}

double wyd_I(const DensityMatrix& rho, const Observable& h, double alpha) {
  const SkewParams params(alpha);
  const Centered c = centered(rho, h);
  const double cross = cross_term(rho, c.h0.matrix(), params.alpha());
  return clamp_nonnegative(c.second_moment - cross, c.second_moment, "I_alpha");
}

double wyd_I_eigensum(const DensityMatrix& rho, const Observable& h, double alpha) {
  return eigenpair_sum(rho, h, alpha, [](double sum, double cross) { return sum - cross; });
}

double wyd_J(const DensityMatrix& rho, const Observable& h, double alpha) {
  const SkewParams params(alpha);
  const Centered c = centered(rho, h);
  const double cross = cross_term(rho, c.h0.matrix(), params.alpha());
  return clamp_nonnegative(c.second_moment + cross, c.second_moment, "J_alpha");
}

double wyd_J_eigensum_lower(const DensityMatrix& rho, const Observable& h, double alpha) {
  return eigenpair_sum(rho, h, alpha, [](double sum, double cross) { return sum + cross; });
}

namespace {

double checked_U(double v, double i, double j) {
  const double from_variance = v * v - (v - i) * (v - i);
  const double from_product = i * j;
  const double scale = std::max({v * v, std::abs(from_variance), std::abs(from_product)});
  if (std::abs(from_variance - from_product) > kUAgreementTol * scale) {
    throw InconsistencyError("U radicands disagree: V^2-(V-I)^2 = " +
                             std::to_string(from_variance) +
                             ", I*J = " + std::to_string(from_product));
  }
  clamp_nonnegative(from_variance, v * v, "U radicand");
  return std::sqrt(std::max(0.0, from_product));
}

}  // namespace

double wyd_U(const DensityMatrix& rho, const Observable& h, double alpha) {
  const SkewParams params(alpha);
  const Centered c = centered(rho, h);
  const double v = clamp_nonnegative(c.second_moment, 0.0, "variance");
  const double cross = cross_term(rho, c.h0.matrix(), params.alpha());
  const double i = clamp_nonnegative(c.second_moment - cross, c.second_moment, "I_alpha");
  const double j = clamp_nonnegative(c.second_moment + cross, c.second_moment, "J_alpha");
  return checked_U(v, i, j);
}

ComplexMatrix mean_power(const DensityMatrix& rho, double alpha) {
  const SkewParams params(alpha);
  const auto pow_a = powered_eigenvalues(rho, params.alpha());
  const auto pow_b = powered_eigenvalues(rho, 1.0 - params.alpha());
  std::vector<double> mean(pow_a.size());
  for (std::size_t k = 0; k < mean.size(); ++k) mean[k] = 0.5 * (pow_a[k] + pow_b[k]);
  return reconstruct(rho.spectrum(), mean);
}

double K_alpha(const DensityMatrix& rho, const Observable& h, double alpha) {
  const ComplexMatrix m = mean_power(rho, alpha);
  const Observable h0 = center(rho, h);
  // (i[M,H0])^2 = -[M,H0]^2
  const ComplexMatrix comm = commutator(m, h0.matrix());
  const double value = -half_trace_square(comm);
  return clamp_nonnegative(value, frobenius_norm(m) * frobenius_norm(h0.matrix()), "K_alpha");
}

double L_alpha(const DensityMatrix& rho, const Observable& h, double alpha) {
  const ComplexMatrix m = mean_power(rho, alpha);
  const Observable h0 = center(rho, h);
  const ComplexMatrix anti = anticommutator(m, h0.matrix());
  return clamp_nonnegative(half_trace_square(anti), 0.0, "L_alpha");
}

double W_alpha(const DensityMatrix& rho, const Observable& h, double alpha) {
  return std::sqrt(K_alpha(rho, h, alpha) * L_alpha(rho, h, alpha));
}

SkewQuantities compute_all(const DensityMatrix& rho, const Observable& h, double alpha) {
  SkewQuantities q;
  q.alpha = SkewParams(alpha).alpha();
  const Centered c = centered(rho, h);
  q.V = clamp_nonnegative(c.second_moment, 0.0, "variance");
  const double cross = cross_term(rho, c.h0.matrix(), alpha);
  q.I_alpha = clamp_nonnegative(c.second_moment - cross, c.second_moment, "I_alpha");
  q.J_alpha = clamp_nonnegative(c.second_moment + cross, c.second_moment, "J_alpha");
  q.U_alpha = checked_U(q.V, q.I_alpha, q.J_alpha);
  q.K_alpha = K_alpha(rho, h, alpha);
  q.L_alpha = L_alpha(rho, h, alpha);
  q.W_alpha = std::sqrt(q.K_alpha * q.L_alpha);
  return q;
}

}  // namespace skewtrace
