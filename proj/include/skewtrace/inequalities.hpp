#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewtrace/skew_info.hpp"
#include "skewtrace/state.hpp"

namespace skewtrace {

inline constexpr double kDefaultMarginTol = 1e-9;

enum class InequalityId {
  HEISENBERG_2_1,
  SCHRODINGER,
  LUO_2_3,
  CHAIN_2_4,
  CHAIN_2_7,
  CHAIN_2_9,
  CONJ_2_10,
  CONJ_W_RHS,
  THM_2_1,
  MAIN_3_1,
  INTERMEDIATE_IJ,
  LIEB_CONVEXITY,
  LEMMA_3_3,
  EIGEN_PAIR_3_6,
};

inline constexpr std::array kAllInequalityIds = {
    InequalityId::HEISENBERG_2_1, InequalityId::SCHRODINGER,     InequalityId::LUO_2_3,
    InequalityId::CHAIN_2_4,      InequalityId::CHAIN_2_7,       InequalityId::CHAIN_2_9,
    InequalityId::CONJ_2_10,      InequalityId::CONJ_W_RHS,      InequalityId::THM_2_1,
    InequalityId::MAIN_3_1,       InequalityId::INTERMEDIATE_IJ, InequalityId::LIEB_CONVEXITY,
    InequalityId::LEMMA_3_3,      InequalityId::EIGEN_PAIR_3_6,
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);

/// Conjectures are expected to fail on some instances; everything else is a
/// proven inequality whose violation indicates a bug.
bool is_conjecture(InequalityId id);

/// Signed-margin verdict for lhs >= rhs.
struct InequalityCheck {
  InequalityId id{};
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = true;
  double tol = kDefaultMarginTol;
  /// Which link or ordering of the inequality this is, e.g. "I_alpha(A)*J_alpha(B)".
  std::string detail;

  static InequalityCheck make(InequalityId id, double lhs, double rhs, double tol,
                              std::string detail = {});
};

InequalityCheck heisenberg_check(const DensityMatrix& rho, const Observable& a,
                                 const Observable& b, double tol = kDefaultMarginTol);
/// V(A) V(B) - (Re Cov(A,B))^2 >= 1/4 |Tr[rho[A,B]]|^2.
InequalityCheck schrodinger_check(const DensityMatrix& rho, const Observable& a,
                                  const Observable& b, double tol = kDefaultMarginTol);
InequalityCheck luo_check(const DensityMatrix& rho, const Observable& a, const Observable& b,
                          double tol = kDefaultMarginTol);

/// U_a(A) U_a(B) >= a(1-a) |Tr[rho[A,B]]|^2
InequalityCheck main_theorem_check(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double alpha,
                                   double tol = kDefaultMarginTol);

/// I_a(A) J_a(B) >= a(1-a) |Tr[rho[A,B]]|^2, reported for (A,B) then (B,A).
std::array<InequalityCheck, 2> intermediate_ij_check(const DensityMatrix& rho,
                                                     const Observable& a, const Observable& b,
                                                     double alpha,
                                                     double tol = kDefaultMarginTol);

/// U_a(A) U_a(B) >= 1/4 |Tr[rho[A,B]]|^2; false in general.
InequalityCheck conjecture_2_10_check(const DensityMatrix& rho, const Observable& a,
                                      const Observable& b, double alpha,
                                      double tol = kDefaultMarginTol);

/// W_a(A) W_a(B) >= 1/4 |Tr[M^2 [A,B]]|^2 with M = (rho^a + rho^(1-a)) / 2.
InequalityCheck theorem_2_1_check(const DensityMatrix& rho, const Observable& a,
                                  const Observable& b, double alpha,
                                  double tol = kDefaultMarginTol);

/// U_a(A) U_a(B) >= 1/4 |Tr[M^2 [A,B]]|^2; false in general.
InequalityCheck conjecture_W_rhs_check(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b, double alpha,
                                       double tol = kDefaultMarginTol);

/// Every link of the three ordering chains
///   0 <= I <= U <= V,
///   I_a <= I <= J <= J_a,
///   0 <= I_a <= U_a <= U,
/// where unsubscripted I, J, U are taken at alpha = 1/2.
std::vector<InequalityCheck> ordering_chain_check(const DensityMatrix& rho, const Observable& h,
                                                  double alpha,
                                                  double tol = kDefaultMarginTol);

/// (1-2a)^2 (t-1)^2 - (t^a - t^(1-a))^2, non-negative for t > 0.
/// Throws DomainError for t <= 0 or alpha outside [0, 1].
double scalar_F(double t, double alpha);

/// (li+lj)^2 - (li^a lj^(1-a) + li^(1-a) lj^a)^2 >= 4a(1-a)(li-lj)^2.
/// Throws DomainError for negative eigenvalues or li = lj = 0.
InequalityCheck eigen_pair_inequality(double lambda_i, double lambda_j, double alpha,
                                      double tol = kDefaultMarginTol);

/// w I_{rho1,a}(H) + (1-w) I_{rho2,a}(H) >= I_{w rho1 + (1-w) rho2, a}(H).
InequalityCheck lieb_convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                     double weight, const Observable& h, double alpha,
                                     double tol = kDefaultMarginTol);

/// |Tr[X [A,B]]|^2
double commutator_weight(const ComplexMatrix& x, const Observable& a, const Observable& b);

}  // namespace skewtrace
