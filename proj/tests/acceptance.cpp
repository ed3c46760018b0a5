// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "patrolgame/allocation.hpp"
#include "patrolgame/cli.hpp"
#include "patrolgame/oracles.hpp"
#include "patrolgame/strategy.hpp"

using namespace patrolgame;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string summarize(const SuiteReport& report) {
  std::ostringstream out;
  out << report.passed() << "/" << report.entries.size();
  int shown = 0;
  for (const auto& e : report.entries) {
    if (e.pass || shown == 3) continue;
    out << "; failed " << e.instance << " expected " << fmt(e.expected, 12) << " actual " << fmt(e.actual, 12);
    ++shown;
  }
  return out.str();
}

Outcome worked_example() {
  std::ostringstream out, err;
  const int code = cli::run({"allocate", "--family", "bipartite", "--np", "3", "--nq", "2", "--B", "20",
                             "--compare-uniform"},
                            out, err);
  if (code != 0) return {false, "allocate exited " + std::to_string(code) + ": " + err.str()};
  const auto doc = Json::parse(out.str());

  const bool split = doc["B_p"] == 14 && doc["B_q"] == 6;
  auto sorted = [](const Json& j) {
    auto v = j.get<std::vector<int>>();
    std::sort(v.rbegin(), v.rend());
    return v;
  };
  const bool multisets = sorted(doc["tau_p"]) == std::vector<int>{6, 4, 4} &&
                         sorted(doc["tau_q"]) == std::vector<int>{4, 2};
  const double gain = doc["mu_gain"].get<double>();
  const bool gain_ok = std::abs(gain - 0.045) <= 0.005;

  const auto graph = GraphTopology::complete_bipartite(3, 2);
  const double mu = doc["mu"].get<double>();
  const TransitionMatrix optimal(matrix_from_json(doc["strategy"]["P"]), graph);
  const double mu_recursion = capture_probability(optimal, AttackDurations({6, 4, 4, 4, 2})).mu;
  const auto uniform = synthesize_bipartite(graph, AttackDurations({4, 4, 4}), AttackDurations({4, 4}));
  const double mu_uniform = doc["uniform"]["mu"].get<double>();
  const double uniform_recursion = capture_probability(uniform.P, AttackDurations({4, 4, 4, 4, 4})).mu;
  const bool recursion_ok =
      std::abs(mu - mu_recursion) <= 1e-9 && std::abs(mu_uniform - uniform_recursion) <= 1e-9;
  const bool values_ok = std::abs(mu - 0.6007) <= 1e-4 && std::abs(mu_uniform - 5.0 / 9) <= 1e-9;

  return {split && multisets && gain_ok && recursion_ok && values_ok,
          "B_p=" + doc["B_p"].dump() + " B_q=" + doc["B_q"].dump() + " tau_p=" + doc["tau_p"].dump() +
              " tau_q=" + doc["tau_q"].dump() + " mu=" + fmt(mu, 10) + " uniform=" + fmt(mu_uniform, 10) +
              " gain=" + fmt(gain, 6) + " recursion_gap=" + fmt(std::abs(mu - mu_recursion), 3)};
}

Outcome closed_forms() {
  const auto report = closed_form_suite(200, 0, 1e-9);
  return {report.all_passed() && report.entries.size() == 200, summarize(report)};
}

Outcome allocation_oracle() {
  const auto report = allocation_oracle_suite(5, 4, 1e-10);
  return {report.all_passed(), summarize(report)};
}

Outcome bounds() {
  const auto report = bound_suite(BoundSuiteRanges{});
  return {report.all_passed(), summarize(report)};
}

Outcome star_optimality() {
  const auto stars = star_optimality_suite(200, 0);
  const auto graph = GraphTopology::complete_bipartite(3, 2);
  const AttackDurations tau({6, 4, 4, 4, 2});
  const auto synthesized = synthesize_bipartite(graph, AttackDurations({6, 4, 4}), AttackDurations({4, 2}));
  const auto search = local_search_strategy(graph, tau, 1000, 0, synthesized.mu, 0.02);
  return {stars.all_passed() && stars.entries.size() == 108 && search.agreement,
          "stars " + summarize(stars) + "; bipartite search mu=" + fmt(search.best_value, 8) +
              " synthesized=" + fmt(synthesized.mu, 8) + " gap=" + fmt(search.gap, 3)};
}

Outcome monte_carlo() {
  const auto report = monte_carlo_suite(20, 100'000, 7);
  return {report.all_passed(), summarize(report)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "worked bipartite allocation example", 1.0, worked_example},
      {"AC2", "closed-form capture equals recursion (200 instances)", 10.0, closed_forms},
      {"AC3", "allocation rules match exhaustive enumeration", 60.0, allocation_oracle},
      {"AC4", "bound suites", 30.0, bounds},
      {"AC5", "star optimality under local search", 60.0, star_optimality},
      {"AC6", "Monte Carlo within 3 sigma (20 instances, 1e5 trials, seed 7)", 30.0, monte_carlo},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    std::cout << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << fmt(seconds, 3)
              << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << "]  "
              << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
