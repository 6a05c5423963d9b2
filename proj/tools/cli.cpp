#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "skewtrace/errors.hpp"
#include "skewtrace/harness.hpp"
#include "skewtrace/json_io.hpp"

namespace skewtrace::cli {
namespace {

constexpr double kReplayTol = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_alpha(const std::string& text) {
  const auto value = parse_number(text);
  if (!value) throw UsageError("cannot parse alpha \"" + text + "\"");
  if (!(*value >= 0.0 && *value <= 1.0)) throw UsageError("alpha out of range [0, 1]: " + text);
  return *value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const std::string& item : split_list(text)) {
    const auto value = parse_number(item);
    if (!value || *value < 2 || *value != static_cast<double>(static_cast<std::size_t>(*value))) {
      throw UsageError("dims must be integers >= 2, got \"" + item + "\"");
    }
    dims.push_back(static_cast<std::size_t>(*value));
  }
  if (dims.empty()) throw UsageError("dims must be non-empty");
  return dims;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_alpha(item));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SKEWTRACE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 0;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct ComputeArgs {
  std::string state;
  std::string observable;
  std::string alpha = "1/2";
};

struct CheckArgs {
  std::string state;
  std::string a;
  std::string b;
  std::string alpha = "1/2";
  double tol = kDefaultMarginTol;
};

struct FuzzArgs {
  std::string dims = "2,3,4,5,6,7,8";
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string alphas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  std::size_t alpha_draws = 11;
  double tol = kDefaultMarginTol;
  std::string out;
  std::string csv;
  std::string rank_policy = "full-rank";
  std::string family = "ginibre";
  unsigned threads = 0;
  bool timing = false;
};

struct CounterexampleArgs {
  std::string target;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::string dims = "2,3,4";
  double tol = kDefaultMarginTol;
  std::string out;
  unsigned threads = 0;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  const double alpha = parse_alpha(args.alpha);
  const DensityMatrix rho = read_density_file(args.state);
  const Observable h = read_observable_file(args.observable);
  emit(out, to_json(compute_all(rho, h, alpha)));
  return kSuccess;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const double alpha = parse_alpha(args.alpha);
  if (!(args.tol > 0.0)) throw UsageError("tol must be > 0");
  const DensityMatrix rho = read_density_file(args.state);
  const Observable a = read_observable_file(args.a);
  const Observable b = read_observable_file(args.b);
  std::vector<InequalityCheck> checks = evaluate_checks(rho, a, b, alpha, args.tol);
  for (InequalityCheck& c : evaluate_spectrum_checks(rho, alpha, args.tol)) {
    checks.push_back(std::move(c));
  }
  json list = json::array();
  bool theorem_failed = false;
  for (const InequalityCheck& c : checks) {
    list.push_back(to_json(c));
    if (!c.holds) {
      err << (is_conjecture(c.id) ? "conjecture fails: " : "THEOREM VIOLATED: ")
          << to_string(c.id) << (c.detail.empty() ? "" : " (" + c.detail + ")")
          << " margin " << c.margin << '\n';
      theorem_failed = theorem_failed || !is_conjecture(c.id);
    }
  }
  emit(out, list);
  return theorem_failed ? kTheoremViolated : kSuccess;
}

int cmd_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err) {
  CampaignConfig config;
  config.dims = parse_dims(args.dims);
  config.trials = args.trials;
  config.seed = args.seed;
  config.alphas = parse_alpha_list(args.alphas);
  config.alpha_draws = args.alpha_draws;
  config.tol = args.tol;
  const auto policy = parse_rank_policy(args.rank_policy);
  if (!policy) throw UsageError("unknown rank policy \"" + args.rank_policy + "\"");
  config.rank_policy = *policy;
  const auto family = parse_instance_family(args.family);
  if (!family) throw UsageError("unknown instance family \"" + args.family + "\"");
  config.family = *family;
  config.threads = args.threads;
  config.record_margins = !args.csv.empty();
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  const CampaignReport report = run_campaign(config);
  const std::string body = to_json(report, args.timing).dump(2) + "\n";
  if (args.out.empty()) {
    out << body;
  } else {
    write_text_file(args.out, body);
  }
  if (!args.csv.empty()) {
    std::ostringstream csv;
    write_margins_csv(report, csv);
    write_text_file(args.csv, csv.str());
  }
  for (const InequalityStats& s : report.stats) {
    err << to_string(s.id) << ": " << s.trials << " trials, " << s.violations
        << " violations, worst margin " << s.worst_margin << '\n';
  }
  if (!report.errors.empty()) err << report.errors.size() << " trials failed numerically\n";
  err << "wall clock " << report.wall_seconds << " s\n";
  return report.theorem_violated() ? kTheoremViolated : kSuccess;
}

int cmd_counterexample(const CounterexampleArgs& args, std::ostream& out, std::ostream& err) {
  InequalityId id{};
  if (args.target == "conj-2-10") {
    id = InequalityId::CONJ_2_10;
  } else if (args.target == "conj-w-rhs") {
    id = InequalityId::CONJ_W_RHS;
  } else {
    throw UsageError("--target must be conj-2-10 or conj-w-rhs");
  }
  CampaignConfig config;
  config.dims = parse_dims(args.dims);
  config.trials = args.budget;
  config.seed = args.seed;
  config.alphas = {};
  config.alpha_draws = 1;
  config.tol = args.tol;
  config.rank_policy = RankPolicy::mixed;
  config.threads = args.threads;
  if (!(args.tol > 0.0)) throw UsageError("tol must be > 0");

  const SearchResult result = search_violations(id, config);
  json summary{{"target", args.target},
               {"id", std::string(to_string(id))},
               {"fixture", to_json(result.fixture)},
               {"budget", args.budget},
               {"seed", args.seed},
               {"violations_found", result.violations.size()}};
  if (result.violations.empty()) {
    summary["worst_margin"] = nullptr;
  } else {
    double worst = result.violations.front().check.margin;
    for (const ViolationRecord& r : result.violations) worst = std::min(worst, r.check.margin);
    summary["worst_margin"] = round_significant(worst);
  }
  if (args.out.empty()) {
    summary["records"] = to_json(result)["violations"];
  } else {
    write_text_file(args.out, to_json(result).dump(2) + "\n");
    summary["out"] = args.out;
  }
  emit(out, summary);
  err << to_string(id) << ": fixture margin " << result.fixture.margin << ", "
      << result.violations.size() << " violation(s) over " << result.trials << " trials\n";
  return result.violations.empty() ? kNoCounterexample : kSuccess;
}

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  const json doc = read_json_file(path);
  const json& records = doc.is_object() && doc.contains("violations") ? doc.at("violations") : doc;
  if (!records.is_array()) throw UsageError("expected an array of violation records");
  json results = json::array();
  bool all_match = true;
  for (const json& r : records) {
    const ViolationRecord record = violation_from_json(r);
    const double margin = replay_margin(record);
    const double deviation = std::abs(margin - record.check.margin);
    const bool match = deviation <= kReplayTol;
    all_match = all_match && match;
    results.push_back({{"id", std::string(to_string(record.check.id))},
                       {"trial", record.trial},
                       {"stored_margin", record.check.margin},
                       {"replayed_margin", margin},
                       {"deviation", deviation},
                       {"match", match}});
  }
  emit(out, json{{"records", std::move(results)}, {"all_match", all_match}});
  if (!all_match) err << "replayed margins deviate by more than " << kReplayTol << '\n';
  return all_match ? kSuccess : kTheoremViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-information quantities and uncertainty-relation checks", "skewtrace"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Print V, I, J, U, K, L, W for a state and observable");
  compute_cmd->add_option("state", compute.state, "density matrix JSON")->required();
  compute_cmd->add_option("observable", compute.observable, "observable JSON")->required();
  compute_cmd->add_option("--alpha", compute.alpha, "alpha in [0,1], decimal or p/q");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run every inequality check on one instance");
  check_cmd->add_option("state", check.state, "density matrix JSON")->required();
  check_cmd->add_option("A", check.a, "observable JSON")->required();
  check_cmd->add_option("B", check.b, "observable JSON")->required();
  check_cmd->add_option("--alpha", check.alpha, "alpha in [0,1], decimal or p/q");
  check_cmd->add_option("--tol", check.tol, "margin tolerance");

  FuzzArgs fuzz;
  fuzz.seed = default_seed();
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomised verification campaign");
  fuzz_cmd->add_option("--dims", fuzz.dims, "comma-separated dimensions (>= 2)");
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of random instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "campaign seed (default $SKEWTRACE_SEED or 0)");
  fuzz_cmd->add_option("--alphas", fuzz.alphas, "comma-separated explicit alphas");
  fuzz_cmd->add_option("--alpha-draws", fuzz.alpha_draws, "uniform-alpha slots alongside --alphas");
  fuzz_cmd->add_option("--tol", fuzz.tol, "margin tolerance");
  fuzz_cmd->add_option("--out", fuzz.out, "report JSON path (stdout if omitted)");
  fuzz_cmd->add_option("--csv", fuzz.csv, "per-trial margins CSV path");
  fuzz_cmd->add_option("--rank-policy", fuzz.rank_policy, "full-rank | mixed-rank | pure");
  fuzz_cmd->add_option("--family", fuzz.family, "ginibre | qubit-off-diagonal");
  fuzz_cmd->add_option("--threads", fuzz.threads, "worker threads (0 = hardware)");
  fuzz_cmd->add_flag("--timing", fuzz.timing, "include wall-clock seconds in the report");

  CounterexampleArgs ce;
  ce.seed = default_seed();
  auto* ce_cmd = app.add_subcommand("counterexample", "Search for violations of a conjecture");
  ce_cmd->add_option("--target", ce.target, "conj-2-10 | conj-w-rhs")->required();
  ce_cmd->add_option("--budget", ce.budget, "random trials beyond the built-in fixture");
  ce_cmd->add_option("--seed", ce.seed, "search seed (default $SKEWTRACE_SEED or 0)");
  ce_cmd->add_option("--dims", ce.dims, "comma-separated dimensions (>= 2)");
  ce_cmd->add_option("--tol", ce.tol, "margin tolerance");
  ce_cmd->add_option("--out", ce.out, "violation records JSON path");
  ce_cmd->add_option("--threads", ce.threads, "worker threads (0 = hardware)");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-evaluate stored violation records");
  replay_cmd->add_option("records", replay_path, "violation records JSON")->required();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*compute_cmd) return cmd_compute(compute, out);
    if (*check_cmd) return cmd_check(check, out, err);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, out, err);
    if (*ce_cmd) return cmd_counterexample(ce, out, err);
    if (*replay_cmd) return cmd_replay(replay_path, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace skewtrace::cli
