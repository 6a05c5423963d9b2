#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "skewtrace/inequalities.hpp"
#include "skewtrace/json_io.hpp"
#include "skewtrace/state.hpp"

namespace skewtrace {

enum class RankPolicy {
  full,   ///< rank = dim
  mixed,  ///< rank uniform in [1, dim]
  pure,   ///< rank = 1
};

enum class InstanceFamily {
  /// Ginibre state of the configured rank, Gaussian Hermitian A and B.
  ginibre,
  /// 2x2 diagonal rho, A and B with zero diagonal (the equality family of
  /// the W uncertainty relation).
  qubit_off_diagonal,
};

std::string_view to_string(RankPolicy policy);
std::optional<RankPolicy> parse_rank_policy(std::string_view text);
std::string_view to_string(InstanceFamily family);
std::optional<InstanceFamily> parse_instance_family(std::string_view text);

/// 0, 0.1, ..., 1.
std::vector<double> decile_alphas();

struct CampaignConfig {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  /// Explicit alpha values. A trial picks uniformly among these and
  /// `alpha_draws` additional slots, each of which yields a fresh U[0,1] draw.
  std::vector<double> alphas = decile_alphas();
  std::size_t alpha_draws = 11;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = kDefaultMarginTol;
  RankPolicy rank_policy = RankPolicy::full;
  InstanceFamily family = InstanceFamily::ginibre;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 0;
  /// Keep every per-trial check for CSV export.
  bool record_margins = false;

  /// Throws InvalidArgument naming the violated constraint.
  void validate() const;
};

/// One random (rho, A, B, alpha) instance plus the second state and weight
/// used by the convexity check.
struct Instance {
  std::size_t trial = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  double alpha = 0.0;
  DensityMatrix rho;
  Observable a;
  Observable b;
  DensityMatrix rho2;
  double weight = 0.0;
};

/// Deterministic in (config.seed, trial): draws from Rng::stream(seed, trial).
Instance draw_instance(const CampaignConfig& config, std::size_t trial);

/// Every checker on (rho, A, B, alpha); `only` restricts to one inequality.
/// Chain links are reported for A and B, prefixed "A: " / "B: " in `detail`.
std::vector<InequalityCheck> evaluate_checks(const DensityMatrix& rho, const Observable& a,
                                             const Observable& b, double alpha, double tol,
                                             std::optional<InequalityId> only = std::nullopt);

/// Eigenvalue-level checks on rho's spectrum: the eigenpair inequality for
/// every pair i < j and the scalar function at t = lambda_i / lambda_j.
std::vector<InequalityCheck> evaluate_spectrum_checks(const DensityMatrix& rho, double alpha,
                                                      double tol,
                                                      std::optional<InequalityId> only = std::nullopt);

/// evaluate_checks plus the instance-level checks (convexity and the scalar
/// eigenvalue inequalities).
std::vector<InequalityCheck> evaluate_instance(const Instance& instance, double tol,
                                               std::optional<InequalityId> only = std::nullopt);

struct InequalityStats {
  InequalityId id{};
  std::size_t trials = 0;      ///< trials in which the inequality was evaluated
  std::size_t checks = 0;      ///< individual checks (links, orderings, pairs)
  std::size_t violations = 0;  ///< trials with at least one check below -tol
  double worst_margin = 0.0;
  std::size_t worst_trial = 0;
  std::string worst_detail;
};

struct TrialError {
  std::size_t trial = 0;
  std::string message;
};

struct MarginRow {
  std::size_t trial = 0;
  std::size_t dim = 0;
  double alpha = 0.0;
  InequalityCheck check;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InequalityStats> stats;  ///< ids that were evaluated, in enum order
  std::vector<TrialError> errors;
  std::vector<MarginRow> margins;  ///< populated when config.record_margins
  double wall_seconds = 0.0;

  const InequalityStats* find(InequalityId id) const;
  /// True when any proven (non-conjecture) inequality was violated.
  bool theorem_violated() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

/// A concrete instance on which an inequality fails.
struct ViolationRecord {
  ComplexMatrix rho;
  ComplexMatrix a;
  ComplexMatrix b;
  double alpha = 0.0;
  InequalityCheck check;
  /// Trial index within the search, or -1 for the built-in fixture.
  std::int64_t trial = -1;
  std::uint64_t seed = 0;
};

/// Re-evaluates the record's inequality on its stored matrices and returns
/// the margin of the matching check.
double replay_margin(const ViolationRecord& record);

struct SearchResult {
  InequalityId id{};
  /// The inequality evaluated on the fixed regression instance.
  InequalityCheck fixture;
  /// Fixture violation first (if any), then search violations by margin.
  std::vector<ViolationRecord> violations;
  std::size_t trials = 0;
  std::vector<TrialError> errors;
};

/// Ids that can be searched: those evaluated on (rho, A, B, alpha) alone.
bool is_searchable(InequalityId id);

SearchResult search_violations(InequalityId id, const CampaignConfig& config);

struct WorstMarginReport {
  InequalityId id{};
  std::size_t trials = 0;
  std::optional<InequalityCheck> worst;
  std::optional<ViolationRecord> instance;  ///< the minimising instance
  std::vector<TrialError> errors;
};

WorstMarginReport worst_margin_scan(InequalityId id, const CampaignConfig& config);

/// rho = diag(3/4, 1/4), A = [[0, i], [-i, 0]], B = [[0, 1], [1, 0]], alpha = 1/3.
struct RegressionInstance {
  DensityMatrix rho;
  Observable a;
  Observable b;
  double alpha;
};
RegressionInstance published_instance();

struct PublishedValue {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct PublishedReport {
  std::vector<PublishedValue> values;
  std::vector<InequalityCheck> checks;
  bool all_pass() const;
};

/// Evaluates the regression instance against its four published values
/// (1e-6 absolute) and runs the related checks.
PublishedReport reproduce_published_instance();

json to_json(const CampaignConfig& config);
/// `include_timing` adds wall-clock seconds, which breaks byte-for-byte
/// reproducibility of the output.
json to_json(const CampaignReport& report, bool include_timing = false);
json to_json(const ViolationRecord& record);
ViolationRecord violation_from_json(const json& j);
json to_json(const SearchResult& result);
json to_json(const WorstMarginReport& report);
json to_json(const PublishedReport& report);

/// CSV with header trial,dim,alpha,ineq_id,lhs,rhs,margin.
void write_margins_csv(const CampaignReport& report, std::ostream& out);

}  // namespace skewtrace
