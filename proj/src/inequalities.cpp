#include "skewtrace/inequalities.hpp"

#include <cmath>
#include <string>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

constexpr std::array<std::string_view, kAllInequalityIds.size()> kIdNames = {
    "HEISENBERG_2_1", "SCHRODINGER", "LUO_2_3",         "CHAIN_2_4",      "CHAIN_2_7",
    "CHAIN_2_9",      "CONJ_2_10",   "CONJ_W_RHS",      "THM_2_1",        "MAIN_3_1",
    "INTERMEDIATE_IJ", "LIEB_CONVEXITY", "LEMMA_3_3", "EIGEN_PAIR_3_6",
};

void require_tol(double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
}

double rho_commutator_weight(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return commutator_weight(rho.matrix(), a, b);
}

double mean_square_commutator_weight(const DensityMatrix& rho, const Observable& a,
                                     const Observable& b, double alpha) {
  const ComplexMatrix m = mean_power(rho, alpha);
  return commutator_weight(matmul(m, m), a, b);
}

}  // namespace

std::string_view to_string(InequalityId id) { return kIdNames[static_cast<std::size_t>(id)]; }

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
  for (InequalityId id : kAllInequalityIds) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_conjecture(InequalityId id) {
  return id == InequalityId::CONJ_2_10 || id == InequalityId::CONJ_W_RHS;
}

InequalityCheck InequalityCheck::make(InequalityId id, double lhs, double rhs, double tol,
                                      std::string detail) {
  require_tol(tol);
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw InconsistencyError(std::string(to_string(id)) + ": non-finite side");
  }
  InequalityCheck check;
  check.id = id;
  check.lhs = lhs;
  check.rhs = rhs;
  check.margin = lhs - rhs;
  check.holds = check.margin >= -tol;
  check.tol = tol;
  check.detail = std::move(detail);
  return check;
}

double commutator_weight(const ComplexMatrix& x, const Observable& a, const Observable& b) {
  require_same_dim(a.matrix(), b.matrix(), "commutator_weight");
  return std::norm(trace_product(x, commutator(a.matrix(), b.matrix())));
}

InequalityCheck heisenberg_check(const DensityMatrix& rho, const Observable& a,
                                 const Observable& b, double tol) {
  const double lhs = variance(rho, a) * variance(rho, b);
  const double rhs = 0.25 * rho_commutator_weight(rho, a, b);
  return InequalityCheck::make(InequalityId::HEISENBERG_2_1, lhs, rhs, tol);
}

InequalityCheck schrodinger_check(const DensityMatrix& rho, const Observable& a,
                                  const Observable& b, double tol) {
  // Symmetrised covariance: Im Cov is half the commutator term already on the right.
  const double re_cov = covariance(rho, a, b).real();
  const double lhs = variance(rho, a) * variance(rho, b) - re_cov * re_cov;
  const double rhs = 0.25 * rho_commutator_weight(rho, a, b);
  return InequalityCheck::make(InequalityId::SCHRODINGER, lhs, rhs, tol);
}

InequalityCheck luo_check(const DensityMatrix& rho, const Observable& a, const Observable& b,
                          double tol) {
  const double lhs = wyd_U(rho, a, 0.5) * wyd_U(rho, b, 0.5);
  const double rhs = 0.25 * rho_commutator_weight(rho, a, b);
  return InequalityCheck::make(InequalityId::LUO_2_3, lhs, rhs, tol);
}

InequalityCheck main_theorem_check(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double alpha, double tol) {
  const double lhs = wyd_U(rho, a, alpha) * wyd_U(rho, b, alpha);
  const double rhs = alpha * (1.0 - alpha) * rho_commutator_weight(rho, a, b);
  return InequalityCheck::make(InequalityId::MAIN_3_1, lhs, rhs, tol);
}

std::array<InequalityCheck, 2> intermediate_ij_check(const DensityMatrix& rho,
                                                     const Observable& a, const Observable& b,
                                                     double alpha, double tol) {
  const double rhs = SkewParams(alpha).alpha() * (1.0 - alpha) * rho_commutator_weight(rho, a, b);
  const double ia = wyd_I(rho, a, alpha);
  const double ja = wyd_J(rho, a, alpha);
  const double ib = wyd_I(rho, b, alpha);
  const double jb = wyd_J(rho, b, alpha);
  return {InequalityCheck::make(InequalityId::INTERMEDIATE_IJ, ia * jb, rhs, tol,
                                "I_alpha(A)*J_alpha(B)"),
          InequalityCheck::make(InequalityId::INTERMEDIATE_IJ, ib * ja, rhs, tol,
                                "I_alpha(B)*J_alpha(A)")};
}

InequalityCheck conjecture_2_10_check(const DensityMatrix& rho, const Observable& a,
                                      const Observable& b, double alpha, double tol) {
  const double lhs = wyd_U(rho, a, alpha) * wyd_U(rho, b, alpha);
  const double rhs = 0.25 * rho_commutator_weight(rho, a, b);
  return InequalityCheck::make(InequalityId::CONJ_2_10, lhs, rhs, tol);
}

InequalityCheck theorem_2_1_check(const DensityMatrix& rho, const Observable& a,
                                  const Observable& b, double alpha, double tol) {
  const double lhs = W_alpha(rho, a, alpha) * W_alpha(rho, b, alpha);
  const double rhs = 0.25 * mean_square_commutator_weight(rho, a, b, alpha);
  return InequalityCheck::make(InequalityId::THM_2_1, lhs, rhs, tol);
}

InequalityCheck conjecture_W_rhs_check(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b, double alpha, double tol) {
  const double lhs = wyd_U(rho, a, alpha) * wyd_U(rho, b, alpha);
  const double rhs = 0.25 * mean_square_commutator_weight(rho, a, b, alpha);
  return InequalityCheck::make(InequalityId::CONJ_W_RHS, lhs, rhs, tol);
}

std::vector<InequalityCheck> ordering_chain_check(const DensityMatrix& rho, const Observable& h,
                                                  double alpha, double tol) {
  const SkewQuantities half = compute_all(rho, h, 0.5);
  const SkewQuantities at = compute_all(rho, h, alpha);
  using enum InequalityId;
  return {
      InequalityCheck::make(CHAIN_2_4, half.I_alpha, 0.0, tol, "0 <= I"),
      InequalityCheck::make(CHAIN_2_4, half.U_alpha, half.I_alpha, tol, "I <= U"),
      InequalityCheck::make(CHAIN_2_4, half.V, half.U_alpha, tol, "U <= V"),
      InequalityCheck::make(CHAIN_2_7, half.I_alpha, at.I_alpha, tol, "I_alpha <= I"),
      InequalityCheck::make(CHAIN_2_7, half.J_alpha, half.I_alpha, tol, "I <= J"),
      InequalityCheck::make(CHAIN_2_7, at.J_alpha, half.J_alpha, tol, "J <= J_alpha"),
      InequalityCheck::make(CHAIN_2_9, at.I_alpha, 0.0, tol, "0 <= I_alpha"),
      InequalityCheck::make(CHAIN_2_9, at.U_alpha, at.I_alpha, tol, "I_alpha <= U_alpha"),
      InequalityCheck::make(CHAIN_2_9, half.U_alpha, at.U_alpha, tol, "U_alpha <= U"),
  };
}

double scalar_F(double t, double alpha) {
  if (!(t > 0.0)) throw DomainError("scalar_F requires t > 0");
  const double a = SkewParams(alpha).alpha();
  const double gap = std::pow(t, a) - std::pow(t, 1.0 - a);
  return (1.0 - 2.0 * a) * (1.0 - 2.0 * a) * (t - 1.0) * (t - 1.0) - gap * gap;
}

InequalityCheck eigen_pair_inequality(double lambda_i, double lambda_j, double alpha,
                                      double tol) {
  if (!(lambda_i >= 0.0 && lambda_j >= 0.0)) {
    throw DomainError("eigen_pair_inequality requires non-negative eigenvalues");
  }
  if (lambda_i == 0.0 && lambda_j == 0.0) {
    throw DomainError("eigen_pair_inequality requires a non-zero eigenvalue");
  }
  const double a = SkewParams(alpha).alpha();
  // 0^0 = 1, matching fractional_power.
  auto power = [](double x, double p) { return p == 0.0 ? 1.0 : std::pow(x, p); };
  const double sum = lambda_i + lambda_j;
  const double cross =
      power(lambda_i, a) * power(lambda_j, 1.0 - a) + power(lambda_i, 1.0 - a) * power(lambda_j, a);
  const double diff = lambda_i - lambda_j;
  return InequalityCheck::make(InequalityId::EIGEN_PAIR_3_6, sum * sum - cross * cross,
                               4.0 * a * (1.0 - a) * diff * diff, tol);
}

InequalityCheck lieb_convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                     double weight, const Observable& h, double alpha,
                                     double tol) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw DomainError("mixing weight out of range [0, 1]");
  }
  require_same_dim(rho1.matrix(), rho2.matrix(), "lieb_convexity_check");
  const DensityMatrix mixed =
      DensityMatrix::from_matrix(weight * rho1.matrix() + (1.0 - weight) * rho2.matrix());
  const double lhs =
      weight * wyd_I(rho1, h, alpha) + (1.0 - weight) * wyd_I(rho2, h, alpha);
  const double rhs = wyd_I(mixed, h, alpha);
  return InequalityCheck::make(InequalityId::LIEB_CONVEXITY, lhs, rhs, tol);
}

}  // namespace skewtrace
