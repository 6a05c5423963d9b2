// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "skewtrace/harness.hpp"
#include "skewtrace/json_io.hpp"
#include "skewtrace/skew_info.hpp"
#include "skewtrace/spectral.hpp"

using namespace skewtrace;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string summary;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const InequalityStats& stats_for(const CampaignReport& r, InequalityId id) {
  const InequalityStats* s = r.find(id);
  if (!s) throw std::runtime_error("no stats for " + std::string(to_string(id)));
  return *s;
}

CampaignConfig random_suite(std::size_t trials, std::uint64_t seed) {
  CampaignConfig c;
  c.dims = {2, 3, 4, 5, 6, 7, 8};
  c.trials = trials;
  c.seed = seed;
  return c;
}

Outcome published_values() {
  const auto t0 = std::chrono::steady_clock::now();
  const PublishedReport r = reproduce_published_instance();
  std::ostringstream s;
  bool pass = true;
  for (const PublishedValue& v : r.values) {
    pass = pass && v.pass;
    s << v.name << "=" << fmt(v.computed) << " ";
  }
  s << "in " << fmt(seconds_since(t0) * 1e3) << " ms";
  return {pass, s.str()};
}

Outcome main_theorem_suite() {
  const CampaignReport r = run_campaign(random_suite(10000, 101));
  const InequalityStats& s = stats_for(r, InequalityId::MAIN_3_1);
  const bool pass = r.errors.empty() && s.trials == 10000 && s.worst_margin >= -1e-9 &&
                    r.wall_seconds <= 60.0;
  return {pass, "10000 trials, worst margin " + fmt(s.worst_margin) + ", " +
                    fmt(r.wall_seconds) + " s, " + std::to_string(r.errors.size()) + " errors"};
}

// Shared by the oracle and identity criteria.
std::vector<Instance> identity_instances() {
  CampaignConfig c = random_suite(1000, 202);
  c.rank_policy = RankPolicy::mixed;
  std::vector<Instance> out;
  for (std::size_t t = 0; t < c.trials; ++t) out.push_back(draw_instance(c, t));
  return out;
}

Outcome eigensum_oracle(const std::vector<Instance>& instances) {
  double worst = 0.0;
  for (const Instance& in : instances) {
    worst = std::max(worst, std::abs(wyd_I(in.rho, in.a, in.alpha) -
                                     wyd_I_eigensum(in.rho, in.a, in.alpha)));
  }
  return {worst <= 1e-10, "max |I - eigensum| " + fmt(worst)};
}

Outcome internal_identities(const std::vector<Instance>& instances) {
  double worst_j = 0.0;
  double worst_rad = 0.0;
  for (const Instance& in : instances) {
    const double v = variance(in.rho, in.a);
    const double i = wyd_I(in.rho, in.a, in.alpha);
    const double j = wyd_J(in.rho, in.a, in.alpha);
    const double radicand = v * v - (v - i) * (v - i);
    worst_j = std::max(worst_j, std::abs(j - (2.0 * v - i)) / std::max(v, 1e-300));
    worst_rad = std::max(worst_rad, std::abs(i * j - radicand) / std::max(v * v, 1e-300));
  }
  return {worst_j <= 1e-9 && worst_rad <= 1e-9,
          "J vs 2V-I " + fmt(worst_j) + ", radicand vs I*J " + fmt(worst_rad) + " (relative)"};
}

Outcome scalar_sweep() {
  double worst = 0.0;
  for (int ti = 0; ti <= 600; ++ti) {
    const double t = std::pow(10.0, -6.0 + ti / 50.0);
    for (int ai = 0; ai <= 100; ++ai) worst = std::min(worst, scalar_F(t, ai / 100.0));
  }
  double equality = 0.0;
  for (const double a : {0.0, 0.5, 1.0}) equality = std::max(equality, std::abs(scalar_F(1.0, a)));
  return {worst >= -1e-12 && equality <= 1e-14,
          "min F " + fmt(worst) + " on 601x101 log-t grid, max |F(1, a)| " + fmt(equality)};
}

Outcome ordering_chains() {
  CampaignConfig c = random_suite(1000, 303);
  c.rank_policy = RankPolicy::mixed;
  const CampaignReport r = run_campaign(c);
  double worst = 0.0;
  std::size_t links = 0;
  for (const InequalityId id :
       {InequalityId::CHAIN_2_4, InequalityId::CHAIN_2_7, InequalityId::CHAIN_2_9}) {
    const InequalityStats& s = stats_for(r, id);
    worst = std::min(worst, s.worst_margin);
    links += s.checks;
  }
  return {r.errors.empty() && worst >= -1e-10,
          std::to_string(links) + " link checks on mixed-rank states, worst margin " + fmt(worst)};
}

Outcome theorem_w_suite() {
  const CampaignReport r = run_campaign(random_suite(10000, 404));
  const InequalityStats& s = stats_for(r, InequalityId::THM_2_1);
  CampaignConfig qubit = random_suite(1000, 405);
  qubit.dims = {2};
  qubit.family = InstanceFamily::qubit_off_diagonal;
  const WorstMarginReport eq = worst_margin_scan(InequalityId::THM_2_1, qubit);
  double equality = 0.0;
  CampaignConfig scan = qubit;
  scan.record_margins = true;
  for (const MarginRow& row : run_campaign(scan).margins) {
    if (row.check.id == InequalityId::THM_2_1) {
      equality = std::max(equality, std::abs(row.check.margin));
    }
  }
  const bool pass = r.errors.empty() && s.worst_margin >= -1e-9 && eq.worst.has_value() &&
                    equality <= 1e-9;
  return {pass, "worst margin " + fmt(s.worst_margin) + " over 10000 trials, max |margin| " +
                    fmt(equality) + " on 2x2 equality family"};
}

Outcome counterexample_soundness() {
  const fs::path dir = fs::temp_directory_path() / ("skewtrace_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool pass = true;
  std::ostringstream s;
  for (const std::string target : {"conj-2-10", "conj-w-rhs"}) {
    const std::string path = (dir / (target + ".json")).string();
    std::ostringstream out, err;
    const int code = cli::run({"skewtrace", "counterexample", "--target", target, "--budget",
                               "2000", "--seed", "505", "--out", path},
                              out, err);
    const json summary = json::parse(out.str());
    const bool fixture_fails = summary.at("fixture").at("holds") == false;
    const json doc = read_json_file(path);
    double deviation = 0.0;
    for (const json& r : doc.at("violations")) {
      const ViolationRecord v = violation_from_json(r);
      deviation = std::max(deviation, std::abs(replay_margin(v) - v.check.margin));
    }
    pass = pass && code == cli::kSuccess && fixture_fails && deviation <= 1e-12;
    s << target << ": " << doc.at("violations").size() << " records, replay deviation "
      << fmt(deviation) << "; ";
  }
  fs::remove_all(dir);
  return {pass, s.str()};
}

Outcome eigensolver() {
  Rng rng(606);
  double worst_rec = 0.0;
  double worst_unit = 0.0;
  for (std::size_t k = 0; k < 1000; ++k) {
    const std::size_t dim = 1 + k % 16;
    const ComplexMatrix h = random_observable(dim, rng).matrix();
    const SpectralDecomposition s = eigh(h);
    const ComplexMatrix& q = s.eigenvectors;
    const double scale = std::max(frobenius_norm(h), 1e-300);
    worst_rec = std::max(worst_rec, frobenius_norm(reconstruct(s, s.eigenvalues) - h) / scale);
    worst_unit = std::max(worst_unit, frobenius_norm(adjoint(q) * q - ComplexMatrix::identity(dim)));
  }
  return {worst_rec <= 1e-10 && worst_unit <= 1e-10,
          "reconstruction " + fmt(worst_rec) + ", unitarity " + fmt(worst_unit) + ", dims 1-16"};
}

Outcome lieb_convexity() {
  CampaignConfig c = random_suite(1000, 707);
  c.rank_policy = RankPolicy::mixed;
  const CampaignReport r = run_campaign(c);
  const InequalityStats& s = stats_for(r, InequalityId::LIEB_CONVEXITY);
  return {r.errors.empty() && s.trials == 1000 && s.worst_margin >= -1e-10,
          "worst margin " + fmt(s.worst_margin) + " over " + std::to_string(s.trials) + " trials"};
}

}  // namespace

int main() {
  const std::vector<Instance> instances = identity_instances();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"published instance values", published_values},
      {"main theorem, 10000 random trials", main_theorem_suite},
      {"skew information eigen-sum oracle", [&] { return eigensum_oracle(instances); }},
      {"J = 2V - I and U radicand identities", [&] { return internal_identities(instances); }},
      {"scalar F(t, alpha) sweep", scalar_sweep},
      {"ordering chains incl. mixed rank", ordering_chains},
      {"W-product theorem and 2x2 equality", theorem_w_suite},
      {"counterexample soundness and replay", counterexample_soundness},
      {"Jacobi eigensolver accuracy", eigensolver},
      {"convexity of I in the state", lieb_convexity},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first
              << ": " << o.summary << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
