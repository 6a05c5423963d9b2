#include "skewtrace/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "skewtrace/errors.hpp"

namespace skewtrace {
namespace {

// Trials are evaluated in blocks; each block runs in parallel and is merged
// in trial order before the next starts.
constexpr std::size_t kBlockSize = 512;

struct TrialOutcome {
  std::size_t dim = 0;
  double alpha = 0.0;
  std::vector<InequalityCheck> checks;
  std::optional<std::string> error;
  std::optional<Instance> instance;
};

unsigned worker_count(const CampaignConfig& config, std::size_t work) {
  unsigned n = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

// Runs `evaluate(trial)` for every trial, calling `merge(trial, outcome)` in
// increasing trial order.
template <typename Evaluate, typename Merge>
void for_each_trial(const CampaignConfig& config, Evaluate evaluate, Merge merge) {
  for (std::size_t begin = 0; begin < config.trials; begin += kBlockSize) {
    const std::size_t end = std::min(config.trials, begin + kBlockSize);
    std::vector<TrialOutcome> outcomes(end - begin);
    std::atomic<std::size_t> next{begin};
    auto work = [&] {
      for (std::size_t t = next++; t < end; t = next++) outcomes[t - begin] = evaluate(t);
    };
    const unsigned workers = worker_count(config, end - begin);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (std::size_t t = begin; t < end; ++t) merge(t, std::move(outcomes[t - begin]));
  }
}

Observable off_diagonal_qubit_observable(Rng& rng) {
  const Complex z = rng.complex_normal();
  return Observable(ComplexMatrix::from_rows({{0.0, z}, {std::conj(z), 0.0}}));
}

// same support as a, entry rotated by i: the quadrature partner
Observable quadrature_partner(const Observable& a, Rng& rng) {
  const Complex z = a.matrix()(0, 1);
  const Complex w = Complex(0.0, rng.normal()) * z / std::abs(z);
  return Observable(ComplexMatrix::from_rows({{0.0, w}, {std::conj(w), 0.0}}));
}

DensityMatrix diagonal_qubit_state(Rng& rng) {
  const double p = rng.uniform_open_zero();
  return DensityMatrix::from_matrix(ComplexMatrix::diagonal({p, 1.0 - p}));
}

std::size_t draw_rank(RankPolicy policy, std::size_t dim, Rng& rng) {
  switch (policy) {
    case RankPolicy::full:
      return dim;
    case RankPolicy::pure:
      return 1;
    case RankPolicy::mixed:
      return static_cast<std::size_t>(rng.uniform_int(1, dim));
  }
  return dim;
}

double draw_alpha(const CampaignConfig& config, Rng& rng) {
  const std::size_t slots = config.alphas.size() + config.alpha_draws;
  const auto slot = static_cast<std::size_t>(rng.uniform_int(0, slots - 1));
  const double uniform = rng.uniform();
  return slot < config.alphas.size() ? config.alphas[slot] : uniform;
}

ViolationRecord make_record(const Instance& instance, InequalityCheck check,
                            std::uint64_t seed) {
  return ViolationRecord{instance.rho.matrix(),   instance.a.matrix(),
                         instance.b.matrix(),     instance.alpha,
                         std::move(check),        static_cast<std::int64_t>(instance.trial),
                         seed};
}

json instance_json(const Instance& instance) {
  return json{{"trial", instance.trial},
              {"dim", instance.dim},
              {"rank", instance.rank},
              {"alpha", instance.alpha},
              {"rho", matrix_to_json(instance.rho.matrix())},
              {"A", matrix_to_json(instance.a.matrix())},
              {"B", matrix_to_json(instance.b.matrix())},
              {"rho2", matrix_to_json(instance.rho2.matrix())},
              {"weight", instance.weight}};
}

json errors_json(const std::vector<TrialError>& errors) {
  json out = json::array();
  for (const TrialError& e : errors) out.push_back({{"trial", e.trial}, {"message", e.message}});
  return out;
}

}  // namespace

std::string_view to_string(RankPolicy policy) {
  switch (policy) {
    case RankPolicy::full:
      return "full-rank";
    case RankPolicy::mixed:
      return "mixed-rank";
    case RankPolicy::pure:
      return "pure";
  }
  return "full-rank";
}

std::optional<RankPolicy> parse_rank_policy(std::string_view text) {
  if (text == "full-rank" || text == "full") return RankPolicy::full;
  if (text == "mixed-rank" || text == "mixed") return RankPolicy::mixed;
  if (text == "pure") return RankPolicy::pure;
  return std::nullopt;
}

std::string_view to_string(InstanceFamily family) {
  return family == InstanceFamily::ginibre ? "ginibre" : "qubit-off-diagonal";
}

std::optional<InstanceFamily> parse_instance_family(std::string_view text) {
  if (text == "ginibre") return InstanceFamily::ginibre;
  if (text == "qubit-off-diagonal") return InstanceFamily::qubit_off_diagonal;
  return std::nullopt;
}

std::vector<double> decile_alphas() {
  std::vector<double> out;
  for (int k = 0; k <= 10; ++k) out.push_back(k / 10.0);
  return out;
}

void CampaignConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (dims.empty()) throw InvalidArgument("dims must be non-empty");
  for (std::size_t d : dims) {
    if (d < 2) throw InvalidArgument("every dim must be >= 2");
  }
  if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
  if (alphas.empty() && alpha_draws == 0) {
    throw InvalidArgument("need at least one explicit alpha or alpha draw");
  }
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("alpha out of range [0, 1]");
  }
  if (family == InstanceFamily::qubit_off_diagonal &&
      std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d != 2; })) {
    throw InvalidArgument("the qubit-off-diagonal family requires dims = {2}");
  }
}

Instance draw_instance(const CampaignConfig& config, std::size_t trial) {
  Rng rng = Rng::stream(config.seed, trial);
  const std::size_t dim =
      config.dims[static_cast<std::size_t>(rng.uniform_int(0, config.dims.size() - 1))];
  const double alpha = draw_alpha(config, rng);
  if (config.family == InstanceFamily::qubit_off_diagonal) {
    DensityMatrix rho = diagonal_qubit_state(rng);
    Observable a = off_diagonal_qubit_observable(rng);
    Observable b = quadrature_partner(a, rng);
    DensityMatrix rho2 = diagonal_qubit_state(rng);
    const double weight = rng.uniform();
    return Instance{trial, dim, 2, alpha, std::move(rho), std::move(a),
                    std::move(b), std::move(rho2), weight};
  }
  const std::size_t rank = draw_rank(config.rank_policy, dim, rng);
  DensityMatrix rho = random_density(dim, rank, rng);
  Observable a = random_observable(dim, rng);
  Observable b = random_observable(dim, rng);
  const std::size_t rank2 = draw_rank(config.rank_policy, dim, rng);
  DensityMatrix rho2 = random_density(dim, rank2, rng);
  const double weight = rng.uniform();
  return Instance{trial, dim, rank, alpha, std::move(rho), std::move(a),
                  std::move(b), std::move(rho2), weight};
}

std::vector<InequalityCheck> evaluate_checks(const DensityMatrix& rho, const Observable& a,
                                             const Observable& b, double alpha, double tol,
                                             std::optional<InequalityId> only) {
  using enum InequalityId;
  auto wanted = [&](InequalityId id) { return !only || *only == id; };
  std::vector<InequalityCheck> out;
  if (wanted(HEISENBERG_2_1)) out.push_back(heisenberg_check(rho, a, b, tol));
  if (wanted(SCHRODINGER)) out.push_back(schrodinger_check(rho, a, b, tol));
  if (wanted(LUO_2_3)) out.push_back(luo_check(rho, a, b, tol));
  if (wanted(MAIN_3_1)) out.push_back(main_theorem_check(rho, a, b, alpha, tol));
  if (wanted(INTERMEDIATE_IJ)) {
    for (InequalityCheck& c : intermediate_ij_check(rho, a, b, alpha, tol)) {
      out.push_back(std::move(c));
    }
  }
  if (wanted(CONJ_2_10)) out.push_back(conjecture_2_10_check(rho, a, b, alpha, tol));
  if (wanted(THM_2_1)) out.push_back(theorem_2_1_check(rho, a, b, alpha, tol));
  if (wanted(CONJ_W_RHS)) out.push_back(conjecture_W_rhs_check(rho, a, b, alpha, tol));
  if (wanted(CHAIN_2_4) || wanted(CHAIN_2_7) || wanted(CHAIN_2_9)) {
    for (const auto& [label, h] : {std::pair{"A: ", &a}, std::pair{"B: ", &b}}) {
      for (InequalityCheck& c : ordering_chain_check(rho, *h, alpha, tol)) {
        if (!wanted(c.id)) continue;
        c.detail = label + c.detail;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<InequalityCheck> evaluate_spectrum_checks(const DensityMatrix& rho, double alpha,
                                                      double tol,
                                                      std::optional<InequalityId> only) {
  using enum InequalityId;
  auto wanted = [&](InequalityId id) { return !only || *only == id; };
  std::vector<InequalityCheck> out;
  const auto lambda = rho.eigenvalues();
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      if (wanted(EIGEN_PAIR_3_6) && (lambda[i] > 0.0 || lambda[j] > 0.0)) {
        InequalityCheck c = eigen_pair_inequality(lambda[i], lambda[j], alpha, tol);
        c.detail = "pair " + std::to_string(i) + "," + std::to_string(j);
        out.push_back(std::move(c));
      }
      if (wanted(LEMMA_3_3) && lambda[i] > 0.0 && lambda[j] > 0.0) {
        out.push_back(InequalityCheck::make(
            LEMMA_3_3, scalar_F(lambda[i] / lambda[j], alpha), 0.0, tol,
            "t = lambda_" + std::to_string(i) + " / lambda_" + std::to_string(j)));
      }
    }
  }
  return out;
}

std::vector<InequalityCheck> evaluate_instance(const Instance& instance, double tol,
                                               std::optional<InequalityId> only) {
  using enum InequalityId;
  auto wanted = [&](InequalityId id) { return !only || *only == id; };
  std::vector<InequalityCheck> out;
  if (!only || is_searchable(*only)) {
    out = evaluate_checks(instance.rho, instance.a, instance.b, instance.alpha, tol, only);
  }
  if (wanted(LIEB_CONVEXITY)) {
    out.push_back(lieb_convexity_check(instance.rho, instance.rho2, instance.weight, instance.a,
                                       instance.alpha, tol));
  }
  for (InequalityCheck& c : evaluate_spectrum_checks(instance.rho, instance.alpha, tol, only)) {
    out.push_back(std::move(c));
  }
  return out;
}

const InequalityStats* CampaignReport::find(InequalityId id) const {
  for (const InequalityStats& s : stats) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

bool CampaignReport::theorem_violated() const {
  return std::any_of(stats.begin(), stats.end(), [](const InequalityStats& s) {
    return !is_conjecture(s.id) && s.violations > 0;
  });
}

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = config;
  std::vector<std::optional<InequalityStats>> by_id(kAllInequalityIds.size());

  auto evaluate = [&config](std::size_t trial) {
    TrialOutcome outcome;
    try {
      const Instance instance = draw_instance(config, trial);
      outcome.dim = instance.dim;
      outcome.alpha = instance.alpha;
      outcome.checks = evaluate_instance(instance, config.tol);
    } catch (const std::exception& e) {
      outcome.error = e.what();
    }
    return outcome;
  };

  auto merge = [&](std::size_t trial, TrialOutcome outcome) {
    if (outcome.error) {
      report.errors.push_back({trial, *outcome.error});
      return;
    }
    std::vector<bool> seen(kAllInequalityIds.size(), false);
    std::vector<bool> violated(kAllInequalityIds.size(), false);
    for (const InequalityCheck& c : outcome.checks) {
      const auto k = static_cast<std::size_t>(c.id);
      auto& slot = by_id[k];
      if (!slot) {
        slot = InequalityStats{c.id, 0, 0, 0, c.margin, trial, c.detail};
      } else if (c.margin < slot->worst_margin) {
        slot->worst_margin = c.margin;
        slot->worst_trial = trial;
        slot->worst_detail = c.detail;
      }
      ++slot->checks;
      seen[k] = true;
      if (!c.holds) violated[k] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (!seen[k]) continue;
      ++by_id[k]->trials;
      if (violated[k]) ++by_id[k]->violations;
    }
    if (config.record_margins) {
      for (InequalityCheck& c : outcome.checks) {
        report.margins.push_back({trial, outcome.dim, outcome.alpha, std::move(c)});
      }
    }
  };

  for_each_trial(config, evaluate, merge);
  for (auto& slot : by_id) {
    if (slot) report.stats.push_back(std::move(*slot));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool is_searchable(InequalityId id) {
  return id != InequalityId::LIEB_CONVEXITY && id != InequalityId::LEMMA_3_3 &&
         id != InequalityId::EIGEN_PAIR_3_6;
}

double replay_margin(const ViolationRecord& record) {
  if (!is_searchable(record.check.id)) {
    throw InvalidArgument("cannot replay " + std::string(to_string(record.check.id)));
  }
  const DensityMatrix rho = DensityMatrix::from_matrix(record.rho);
  const Observable a(record.a);
  const Observable b(record.b);
  for (const InequalityCheck& c :
       evaluate_checks(rho, a, b, record.alpha, record.check.tol, record.check.id)) {
    if (c.detail == record.check.detail) return c.margin;
  }
  throw InvalidArgument("replay: no check matching detail \"" + record.check.detail + "\"");
}

RegressionInstance published_instance() {
  const Complex i{0.0, 1.0};
  return RegressionInstance{
      DensityMatrix::from_matrix(ComplexMatrix::diagonal({0.75, 0.25})),
      Observable(ComplexMatrix::from_rows({{0.0, i}, {-i, 0.0}})),
      Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})),
      1.0 / 3.0,
  };
}

SearchResult search_violations(InequalityId id, const CampaignConfig& config) {
  if (!is_searchable(id)) {
    throw InvalidArgument(std::string(to_string(id)) + " is not searchable");
  }
  SearchResult result;
  result.id = id;

  const RegressionInstance fixture = published_instance();
  const std::vector<InequalityCheck> fixture_checks = evaluate_checks(
      fixture.rho, fixture.a, fixture.b, fixture.alpha, config.tol, id);
  result.fixture = *std::min_element(
      fixture_checks.begin(), fixture_checks.end(),
      [](const InequalityCheck& x, const InequalityCheck& y) { return x.margin < y.margin; });
  for (const InequalityCheck& c : fixture_checks) {
    if (!c.holds) {
      result.violations.push_back(ViolationRecord{fixture.rho.matrix(), fixture.a.matrix(),
                                                  fixture.b.matrix(), fixture.alpha, c, -1,
                                                  config.seed});
    }
  }
  const std::size_t fixture_count = result.violations.size();

  if (config.trials > 0) {
    config.validate();
    auto evaluate = [&config, id](std::size_t trial) {
      TrialOutcome outcome;
      try {
        Instance instance = draw_instance(config, trial);
        outcome.checks =
            evaluate_checks(instance.rho, instance.a, instance.b, instance.alpha, config.tol, id);
        if (std::any_of(outcome.checks.begin(), outcome.checks.end(),
                        [](const InequalityCheck& c) { return !c.holds; })) {
          outcome.instance = std::move(instance);
        }
      } catch (const std::exception& e) {
        outcome.error = e.what();
      }
      return outcome;
    };
    auto merge = [&](std::size_t trial, TrialOutcome outcome) {
      if (outcome.error) {
        result.errors.push_back({trial, *outcome.error});
        return;
      }
      ++result.trials;
      for (InequalityCheck& c : outcome.checks) {
        if (!c.holds) result.violations.push_back(make_record(*outcome.instance, c, config.seed));
      }
    };
    for_each_trial(config, evaluate, merge);
  }
  std::stable_sort(result.violations.begin() + static_cast<std::ptrdiff_t>(fixture_count),
                   result.violations.end(), [](const ViolationRecord& x, const ViolationRecord& y) {
                     return x.check.margin < y.check.margin;
                   });
  return result;
}

WorstMarginReport worst_margin_scan(InequalityId id, const CampaignConfig& config) {
  config.validate();
  WorstMarginReport report;
  report.id = id;
  auto evaluate = [&config, id](std::size_t trial) {
    TrialOutcome outcome;
    try {
      Instance instance = draw_instance(config, trial);
      outcome.checks = evaluate_instance(instance, config.tol, id);
      outcome.instance = std::move(instance);
    } catch (const std::exception& e) {
      outcome.error = e.what();
    }
    return outcome;
  };
  auto merge = [&](std::size_t trial, TrialOutcome outcome) {
    if (outcome.error) {
      report.errors.push_back({trial, *outcome.error});
      return;
    }
    ++report.trials;
    for (const InequalityCheck& c : outcome.checks) {
      if (!report.worst || c.margin < report.worst->margin) {
        report.worst = c;
        report.instance = make_record(*outcome.instance, c, config.seed);
      }
    }
  };
  for_each_trial(config, evaluate, merge);
  return report;
}

bool PublishedReport::all_pass() const {
  return std::all_of(values.begin(), values.end(), [](const PublishedValue& v) { return v.pass; });
}

PublishedReport reproduce_published_instance() {
  constexpr double kTol = 1e-6;
  const RegressionInstance fx = published_instance();
  const double alpha = fx.alpha;
  const double u_product = wyd_U(fx.rho, fx.a, alpha) * wyd_U(fx.rho, fx.b, alpha);
  const double rho_weight = commutator_weight(fx.rho.matrix(), fx.a, fx.b);
  const ComplexMatrix m = mean_power(fx.rho, alpha);
  const double mean_weight = commutator_weight(matmul(m, m), fx.a, fx.b);

  auto value = [](std::string name, double computed, double expected, double tol) {
    return PublishedValue{std::move(name), computed, expected, tol,
                          std::abs(computed - expected) <= tol};
  };
  PublishedReport report;
  report.values = {
      value("U_alpha(A)*U_alpha(B)", u_product, 0.22457296, kTol),
      value("1/4*|Tr[rho[A,B]]|^2", 0.25 * rho_weight, 0.25, 1e-12),
      value("alpha(1-alpha)*|Tr[rho[A,B]]|^2", alpha * (1.0 - alpha) * rho_weight, 0.2222222, kTol),
      value("1/4*|Tr[M^2[A,B]]|^2", 0.25 * mean_weight, 0.23828105995, kTol),
  };
  report.checks = {
      main_theorem_check(fx.rho, fx.a, fx.b, alpha),
      conjecture_2_10_check(fx.rho, fx.a, fx.b, alpha),
      conjecture_W_rhs_check(fx.rho, fx.a, fx.b, alpha),
      theorem_2_1_check(fx.rho, fx.a, fx.b, alpha),
      luo_check(fx.rho, fx.a, fx.b),
  };
  return report;
}

json to_json(const CampaignConfig& config) {
  return json{{"dims", config.dims},
              {"alphas", config.alphas},
              {"alpha_draws", config.alpha_draws},
              {"trials", config.trials},
              {"seed", config.seed},
              {"tol", config.tol},
              {"rank_policy", std::string(to_string(config.rank_policy))},
              {"family", std::string(to_string(config.family))}};
}

json to_json(const CampaignReport& report, bool include_timing) {
  json inequalities = json::array();
  for (const InequalityStats& s : report.stats) {
    json entry{{"id", std::string(to_string(s.id))},
               {"trials", s.trials},
               {"checks", s.checks},
               {"violations", s.violations},
               {"worst_margin", round_significant(s.worst_margin)},
               {"worst_trial", s.worst_trial},
               {"worst_detail", s.worst_detail}};
    entry["worst_instance"] = instance_json(draw_instance(report.config, s.worst_trial));
    inequalities.push_back(std::move(entry));
  }
  std::size_t total_violations = 0;
  for (const InequalityStats& s : report.stats) total_violations += s.violations;
  json j{{"config", to_json(report.config)},
         {"seed", report.config.seed},
         {"trials", report.config.trials},
         {"inequalities", std::move(inequalities)},
         {"total_violations", total_violations},
         {"theorem_violated", report.theorem_violated()},
         {"errors", errors_json(report.errors)}};
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

json to_json(const ViolationRecord& record) {
  json check = to_json(record.check);
  // Replay compares against these, so they keep full precision.
  check["lhs"] = record.check.lhs;
  check["rhs"] = record.check.rhs;
  check["margin"] = record.check.margin;
  return json{{"rho", matrix_to_json(record.rho)},
              {"A", matrix_to_json(record.a)},
              {"B", matrix_to_json(record.b)},
              {"alpha", record.alpha},
              {"inequality", std::move(check)},
              {"trial", record.trial},
              {"seed", record.seed}};
}

ViolationRecord violation_from_json(const json& j) {
  try {
    const json& c = j.at("inequality");
    const auto id = parse_inequality_id(c.at("id").get<std::string>());
    if (!id) throw InvalidArgument("unknown inequality id");
    ViolationRecord record{matrix_from_json(j.at("rho")), matrix_from_json(j.at("A")),
                           matrix_from_json(j.at("B")), j.at("alpha").get<double>(),
                           InequalityCheck{},           j.at("trial").get<std::int64_t>(),
                           j.at("seed").get<std::uint64_t>()};
    record.check.id = *id;
    record.check.lhs = c.at("lhs").get<double>();
    record.check.rhs = c.at("rhs").get<double>();
    record.check.margin = c.at("margin").get<double>();
    record.check.holds = c.at("holds").get<bool>();
    record.check.tol = c.at("tol").get<double>();
    record.check.detail = c.value("detail", std::string{});
    return record;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("violation record: ") + e.what());
  }
}

json to_json(const SearchResult& result) {
  json records = json::array();
  for (const ViolationRecord& r : result.violations) records.push_back(to_json(r));
  return json{{"id", std::string(to_string(result.id))},
              {"fixture", to_json(result.fixture)},
              {"trials", result.trials},
              {"violations_found", result.violations.size()},
              {"violations", std::move(records)},
              {"errors", errors_json(result.errors)}};
}

json to_json(const WorstMarginReport& report) {
  json j{{"id", std::string(to_string(report.id))},
         {"trials", report.trials},
         {"errors", errors_json(report.errors)}};
  j["worst"] = report.worst ? to_json(*report.worst) : json(nullptr);
  j["instance"] = report.instance ? to_json(*report.instance) : json(nullptr);
  return j;
}

json to_json(const PublishedReport& report) {
  json values = json::array();
  for (const PublishedValue& v : report.values) {
    values.push_back({{"name", v.name},
                      {"computed", round_significant(v.computed)},
                      {"expected", v.expected},
                      {"tol", v.tol},
                      {"pass", v.pass}});
  }
  json checks = json::array();
  for (const InequalityCheck& c : report.checks) checks.push_back(to_json(c));
  return json{{"values", std::move(values)}, {"checks", std::move(checks)},
              {"all_pass", report.all_pass()}};
}

void write_margins_csv(const CampaignReport& report, std::ostream& out) {
  out << "trial,dim,alpha,ineq_id,lhs,rhs,margin\n";
  char line[256];
  for (const MarginRow& row : report.margins) {
    std::snprintf(line, sizeof line, "%zu,%zu,%.12g,%s,%.12g,%.12g,%.12g\n", row.trial, row.dim,
                  row.alpha, std::string(to_string(row.check.id)).c_str(), row.check.lhs,
                  row.check.rhs, row.check.margin);
    out << line;
  }
}

}  // namespace skewtrace
