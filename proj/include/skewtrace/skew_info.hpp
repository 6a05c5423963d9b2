#pragma once

#include "skewtrace/matrix.hpp"
#include "skewtrace/state.hpp"

namespace skewtrace {

/// Values in [-kNegativeClampTol * scale, 0) are rounding and clamp to 0;
/// anything more negative raises InconsistencyError.
inline constexpr double kNegativeClampTol = 1e-12;
/// Relative agreement required between the two routes to U_{rho,alpha}.
inline constexpr double kUAgreementTol = 1e-9;

/// Skew parameter alpha, validated to lie in [0, 1].
class SkewParams {
 public:
  explicit SkewParams(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Every uncertainty quantity of (rho, H) at one alpha.
struct SkewQuantities {
  double alpha = 0.0;
  double V = 0.0;
  double I_alpha = 0.0;
  double J_alpha = 0.0;
  double U_alpha = 0.0;
  double K_alpha = 0.0;
  double L_alpha = 0.0;
  double W_alpha = 0.0;
};

/// V_rho(H) = Tr[rho H0^2].
double variance(const DensityMatrix& rho, const Observable& h);

/// Cov_rho(A, B) = Tr[rho A0 B0].
Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Wigner-Yanase-Dyson skew information Tr[rho H0^2] - Tr[rho^a H0 rho^(1-a) H0].
double wyd_I(const DensityMatrix& rho, const Observable& h, double alpha);

/// The same quantity as wyd_I, summed over eigenpairs i < j of rho:
/// (l_i + l_j - l_i^a l_j^(1-a) - l_i^(1-a) l_j^a) |<i|H0|j>|^2.
double wyd_I_eigensum(const DensityMatrix& rho, const Observable& h, double alpha);

/// Tr[rho H0^2] + Tr[rho^a H0 rho^(1-a) H0].
double wyd_J(const DensityMatrix& rho, const Observable& h, double alpha);

/// Off-diagonal eigenpair sum that bounds wyd_J from below:
/// sum_{i<j} (l_i + l_j + l_i^a l_j^(1-a) + l_i^(1-a) l_j^a) |<i|H0|j>|^2.
double wyd_J_eigensum_lower(const DensityMatrix& rho, const Observable& h, double alpha);

/// U_{rho,alpha}(H), computed both as sqrt(V^2 - (V - I)^2) and sqrt(I J).
/// Throws InconsistencyError if the two radicands disagree by more than
/// 1e-9 relative, or the first is below -1e-12 (scaled by max(1, V^2)).
double wyd_U(const DensityMatrix& rho, const Observable& h, double alpha);

/// M = (rho^a + rho^(1-a)) / 2, the operator mean behind K, L and W.
ComplexMatrix mean_power(const DensityMatrix& rho, double alpha);

/// K = 1/2 Tr[(i[M, H0])^2].
double K_alpha(const DensityMatrix& rho, const Observable& h, double alpha);
/// L = 1/2 Tr[{M, H0}^2].
double L_alpha(const DensityMatrix& rho, const Observable& h, double alpha);
/// W = sqrt(K L).
double W_alpha(const DensityMatrix& rho, const Observable& h, double alpha);

SkewQuantities compute_all(const DensityMatrix& rho, const Observable& h, double alpha);

}  // namespace skewtrace
