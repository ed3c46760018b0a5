#include "patrolgame/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "patrolgame/error.hpp"

namespace patrolgame::cli {

namespace {

constexpr int kMaxOracleN = 6;
constexpr std::int64_t kMaxTrials = 10'000'000;
constexpr int kMaxRestarts = 10'000;
constexpr int kMaxInstances = 1'000;
constexpr std::size_t kMaxSweepRows = 10'000;

struct Options {
  std::string config;
  std::string family;
  int n = 0;
  int n_p = 0;
  int n_q = 0;
  std::string edges;
  std::string tau;
  int budget = 0;
  std::int64_t trials = 100'000;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool emit_cdf = false;
  bool compare_uniform = false;
  std::string suite = "all";
  std::string out_path;
  int nmax = 4;
  int restarts = 200;
  int instances = 20;
  std::string n_range;
  std::string np_range;
  std::string nq_range;
  std::string tau_range;
  std::string budget_range;
};

// Options whose presence on the command line must be known.
struct Presence {
  CLI::Option* family = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* n_p = nullptr;
  CLI::Option* n_q = nullptr;
  CLI::Option* tau = nullptr;
  CLI::Option* budget = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* tol = nullptr;

  static bool set(const CLI::Option* o) { return o != nullptr && o->count() > 0; }
};

// A failure that maps directly to an exit code.
struct CommandError {
  int code;
  std::string message;
};

// "1-2,2-1" with 1-based node labels.
std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> out;
  for (std::size_t start = 0; start < text.size();) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    start = end + 1;
    const auto dash = item.find('-');
    if (dash == std::string::npos || dash == 0) throw CommandError{kUsage, "bad edge '" + item + "'"};
    try {
      out.push_back({std::stoi(item.substr(0, dash)) - 1, std::stoi(item.substr(dash + 1)) - 1});
    } catch (const std::exception&) {
      throw CommandError{kUsage, "bad edge '" + item + "'"};
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CommandError{kUsage, "cannot parse integer list '" + text + "'"};
    }
  }
  return out;
}

// "lo:hi" or a single value; lo > hi yields an empty range.
std::pair<int, int> parse_range(const std::string& text) {
  if (text.empty()) throw CommandError{kUsage, "missing range"};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CommandError{kUsage, "cannot parse range '" + text + "'"};
  }
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const Options& opt, std::ostream& out, const std::string& document) {
  if (opt.out_path.empty()) {
    out << document;
    return;
  }
  std::ofstream file(opt.out_path);
  if (!file) throw CommandError{kUsage, "cannot open output file " + opt.out_path};
  file << document;
}

class Command {
 public:
  Command(const Options& opt, const Presence& present, std::ostream& out, std::ostream& err)
      : opt_(opt), present_(present), out_(out), err_(err) {
    if (!opt_.config.empty()) config_ = load_scenario(opt_.config);
  }

  // Graph descriptor from flags, falling back to the scenario file.
  FamilySpec graph_spec() const {
    if (Presence::set(present_.family)) {
      FamilySpec spec;
      spec.family = family_from_string(opt_.family);
      spec.n = opt_.n;
      spec.n_p = opt_.n_p;
      spec.n_q = opt_.n_q;
      if (spec.family == Family::CompleteBipartite && !Presence::set(present_.n))
        spec.n = spec.n_p + spec.n_q;
      if (spec.family == Family::General) {
        if (!opt_.edges.empty())
          spec.edges = parse_edge_list(opt_.edges);
        else if (config_.graph && config_.graph->family == Family::General)
          spec.edges = config_.graph->edges;
      }
      return spec;
    }
    if (config_.graph) return *config_.graph;
    throw CommandError{kUsage, "no graph given: use --family or --config"};
  }

  std::optional<std::vector<int>> tau() const {
    if (Presence::set(present_.tau)) return parse_int_list(opt_.tau);
    return config_.tau;
  }

  std::optional<int> budget() const {
    if (Presence::set(present_.budget)) return opt_.budget;
    return config_.budget;
  }

  std::int64_t trials() const {
    if (!Presence::set(present_.trials) && config_.trials) return *config_.trials;
    return opt_.trials;
  }

  std::uint64_t seed() const {
    if (!Presence::set(present_.seed) && config_.seed) return *config_.seed;
    return opt_.seed;
  }

  std::optional<double> tolerance() const {
    if (Presence::set(present_.tol)) return opt_.tol;
    return config_.tolerance;
  }

  const ScenarioConfig& config() const { return config_; }

  int solve() {
    const auto spec = graph_spec();
    if (spec.family == Family::General)
      throw CommandError{kUnsupportedFamily, "no strategy synthesizer for general graphs"};
    if (budget() && !Presence::set(present_.tau) && !config_.tau)
      throw CommandError{kUsage, "solve takes --tau, not --B"};
    const auto durations = tau();
    if (!durations) throw CommandError{kUsage, "solve needs --tau"};

    const auto graph = build_graph(spec);
    if (static_cast<int>(durations->size()) != graph.size())
      throw CommandError{kInfeasible, "tau has " + std::to_string(durations->size()) +
                                          " entries for " + std::to_string(graph.size()) + " nodes"};
    if (std::any_of(durations->begin(), durations->end(), [](int t) { return t < 1; }))
      throw CommandError{kInfeasible, "attack durations must be >= 1"};
    const AttackDurations tau_values(*durations);
    const auto feasibility = validate_attack_durations(graph, tau_values);
    if (!feasibility.condition1_violations.empty()) {
      err_ << to_json(feasibility).dump() << '\n';
      return kInfeasible;
    }
    if (!feasibility.condition2_holds) err_ << "note: " << feasibility.notes << '\n';

    StrategyResult result = [&] {
      try {
        return synthesize(graph, tau_values);
      } catch (const PatrolError& e) {
        if (e.code() != ErrorCode::InfeasibleTau) throw;
        err_ << to_json(feasibility).dump() << '\n';
        throw CommandError{kInfeasible, e.what()};
      }
    }();
    Json doc = to_json(result);
    if (opt_.emit_cdf) doc["capture"] = to_json(capture_probability(result.P, tau_values));
    emit(opt_, out_, doc.dump(2) + "\n");
    return kOk;
  }

  int allocate() {
    const auto spec = graph_spec();
    if (spec.family == Family::General)
      throw CommandError{kUnsupportedFamily, "no allocation rule for general graphs"};
    if (Presence::set(present_.tau) || (config_.tau && !config_.budget))
      throw CommandError{kUsage, "allocate takes --B, not --tau"};
    const auto b = budget();
    if (!b) throw CommandError{kUsage, "allocate needs --B"};

    Json doc;
    if (spec.family == Family::Complete) {
      const auto result = allocate_complete(spec.n, *b);
      doc = to_json(result);
      doc["strategy"] = to_json(synthesize_complete(AttackDurations(result.tau)));
      if (opt_.compare_uniform) {
        const auto uniform = uniform_complete_allocation(spec.n, *b);
        doc["uniform"] = Json{{"tau", uniform.tau}, {"mu", round_significant(uniform.mu)}};
        doc["mu_gain"] = round_significant(result.mu - uniform.mu);
      }
    } else {
      const auto graph = build_graph(spec);
      const auto result = co_optimize_bipartite(graph.side_p(), graph.side_q(), *b);
      doc = to_json(result);
      doc["strategy"] = to_json(synthesize_bipartite(graph, AttackDurations(result.side_p->tau),
                                                     AttackDurations(result.side_q->tau)));
      if (opt_.compare_uniform) {
        const auto uniform = uniform_bipartite_allocation(graph.side_p(), graph.side_q(), *b);
        doc["uniform"] = Json{{"tau_p", uniform.side_p->tau},
                              {"tau_q", uniform.side_q->tau},
                              {"mu", round_significant(uniform.mu)}};
        doc["mu_gain"] = round_significant(result.mu - uniform.mu);
      }
    }
    emit(opt_, out_, doc.dump(2) + "\n");
    return kOk;
  }

  int simulate() {
    const auto spec = graph_spec();
    const auto durations = tau();
    if (!durations) throw CommandError{kUsage, "simulate needs --tau"};
    if (trials() < 1 || trials() > kMaxTrials)
      throw CommandError{kGuardExceeded, "trials must be in [1, " + std::to_string(kMaxTrials) + "]"};
    const auto graph = build_graph(spec);
    const AttackDurations tau_values(*durations);
    if (static_cast<int>(tau_values.size()) != graph.size())
      throw CommandError{kInfeasible, "tau length differs from node count"};

    Json doc;
    std::optional<TransitionMatrix> p;
    if (config_.strategy) {
      p.emplace(*config_.strategy, graph);
    } else {
      if (spec.family == Family::General)
        throw CommandError{kUnsupportedFamily, "general graphs need an explicit strategy in --config"};
      auto s = synthesize(graph, tau_values);
      doc["strategy"] = to_json(s);
      p.emplace(s.P);
    }
    doc["exact"] = to_json(capture_probability(*p, tau_values));
    doc["simulation"] = to_json(simulate_capture(*p, tau_values, trials(), seed()));
    emit(opt_, out_, doc.dump(2) + "\n");
    return kOk;
  }

  int verify() {
    if (opt_.nmax < 2 || opt_.nmax > kMaxOracleN)
      throw CommandError{kGuardExceeded, "--nmax must be in [2, " + std::to_string(kMaxOracleN) + "]"};
    if (trials() < 1 || trials() > kMaxTrials)
      throw CommandError{kGuardExceeded, "trials must be in [1, " + std::to_string(kMaxTrials) + "]"};
    if (opt_.restarts < 1 || opt_.restarts > kMaxRestarts)
      throw CommandError{kGuardExceeded, "--restarts out of range"};
    if (opt_.instances < 1 || opt_.instances > kMaxInstances)
      throw CommandError{kGuardExceeded, "--instances out of range"};

    const std::vector<std::string> known = {"bounds", "alloc-oracle", "montecarlo", "closed-form", "star"};
    std::vector<std::string> suites;
    if (opt_.suite == "all")
      suites = known;
    else if (std::find(known.begin(), known.end(), opt_.suite) != known.end())
      suites = {opt_.suite};
    else
      throw CommandError{kUsage, "unknown suite '" + opt_.suite + "'"};

    Json doc = Json::object();
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const auto& name : suites) {
      SuiteReport report;
      if (name == "bounds") {
        BoundSuiteRanges ranges;
        ranges.seed = seed();
        report = bound_suite(ranges);
      } else if (name == "alloc-oracle") {
        report = allocation_oracle_suite(opt_.nmax + 1, opt_.nmax, tolerance().value_or(1e-10));
      } else if (name == "montecarlo") {
        report = monte_carlo_suite(opt_.instances, trials(), seed());
      } else if (name == "closed-form") {
        report = closed_form_suite(200, seed(), tolerance().value_or(1e-9));
      } else {
        report = star_optimality_suite(opt_.restarts, seed());
      }
      passed += report.passed();
      total += report.entries.size();
      if (suites.size() > 1)
        out_ << name << ": " << (report.all_passed() ? "PASS " : "FAIL ") << report.passed() << "/"
             << report.entries.size() << '\n';
      for (const auto& e : report.entries)
        if (!e.pass)
          err_ << name << " failed: " << e.instance << " expected " << format_number(e.expected)
               << " actual " << format_number(e.actual) << '\n';
      doc[name] = to_json(report);
    }
    out_ << (passed == total ? "PASS " : "FAIL ") << passed << "/" << total << '\n';
    if (!opt_.out_path.empty()) {
      std::ofstream file(opt_.out_path);
      if (!file) throw CommandError{kUsage, "cannot open output file " + opt_.out_path};
      file << doc.dump(2) << '\n';
    }
    return passed == total ? kOk : kVerificationFailed;
  }

  int sweep() {
    if (!Presence::set(present_.family)) throw CommandError{kUsage, "sweep needs --family"};
    const Family family = family_from_string(opt_.family);
    if (family == Family::General) throw CommandError{kUnsupportedFamily, "cannot sweep general graphs"};
    const bool by_budget = !opt_.budget_range.empty();
    if (by_budget == !opt_.tau_range.empty())
      throw CommandError{kUsage, "sweep needs exactly one of --tau-range, --B-range"};
    const auto [v_lo, v_hi] = parse_range(by_budget ? opt_.budget_range : opt_.tau_range);

    struct Shape {
      int n_p;  // 0 for complete
      int n_q;
    };
    std::vector<Shape> shapes;
    if (family == Family::CompleteBipartite) {
      const auto [p_lo, p_hi] = parse_range(opt_.np_range.empty() ? std::to_string(opt_.n_p) : opt_.np_range);
      const auto [q_lo, q_hi] = parse_range(opt_.nq_range.empty() ? std::to_string(opt_.n_q) : opt_.nq_range);
      for (int a = p_lo; a <= p_hi; ++a)
        for (int b = q_lo; b <= q_hi; ++b) shapes.push_back({a, b});
    } else {
      const auto [n_lo, n_hi] = parse_range(opt_.n_range.empty() ? std::to_string(opt_.n) : opt_.n_range);
      for (int n = n_lo; n <= n_hi; ++n)
        shapes.push_back(family == Family::Star ? Shape{1, n - 1} : Shape{0, n});
    }
    const std::size_t values = v_hi >= v_lo ? static_cast<std::size_t>(v_hi - v_lo + 1) : 0;
    if (shapes.size() * values > kMaxSweepRows)
      throw CommandError{kGuardExceeded, "sweep grid exceeds " + std::to_string(kMaxSweepRows) + " rows"};

    std::ostringstream csv;
    csv << "family,sizes,tau,B,mu,w,bound,ratio\n";
    for (const auto& shape : shapes) {
      const int n = shape.n_p + shape.n_q;
      const std::string sizes =
          family == Family::CompleteBipartite ? std::to_string(shape.n_p) + "x" + std::to_string(shape.n_q)
                                              : std::to_string(n);
      for (int v = v_lo; v <= v_hi; ++v) {
        double mu = 0.0;
        double w = 0.0;
        int tau_max = v;
        try {
          if (by_budget) {
            const auto a = family == Family::Complete ? allocate_complete(n, v)
                                                      : co_optimize_bipartite(shape.n_p, shape.n_q, v);
            mu = a.mu;
            w = a.w;
            tau_max = *std::max_element(a.tau.begin(), a.tau.end());
          } else {
            if (n < 1) continue;
            const auto graph = family == Family::Complete ? GraphTopology::complete(n)
                               : family == Family::Star   ? GraphTopology::star(n)
                                                          : GraphTopology::complete_bipartite(shape.n_p, shape.n_q);
            const auto s = synthesize(graph, AttackDurations(std::vector<int>(static_cast<std::size_t>(n), v)));
            mu = s.mu;
            w = s.w;
          }
        } catch (const PatrolError&) {
          continue;  // instance outside the family's valid range
        }
        const double bound = std::min(1.0, static_cast<double>(tau_max) / n);
        csv << to_string(family) << ',' << sizes << ',' << (by_budget ? "" : std::to_string(v)) << ','
            << (by_budget ? std::to_string(v) : "") << ',' << format_number(mu) << ',' << format_number(w)
            << ',' << format_number(bound) << ',' << format_number(mu / bound) << '\n';
      }
    }
    emit(opt_, out_, csv.str());
    return kOk;
  }

 private:
  const Options& opt_;
  const Presence& present_;
  std::ostream& out_;
  std::ostream& err_;
  ScenarioConfig config_;
};

void add_graph_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.family, "complete | bipartite | star | general");
  cmd->add_option("--n", opt.n, "node count");
  cmd->add_option("--np", opt.n_p, "bipartite side P size");
  cmd->add_option("--nq", opt.n_q, "bipartite side Q size");
  cmd->add_option("--edges", opt.edges, "general graph edges as 1-2,2-1,...");
  cmd->add_option("--config", opt.config, "scenario JSON file");
  cmd->add_option("--out", opt.out_path, "write the document to this path");
}

int exit_code_for(const PatrolError& e) {
  switch (e.code()) {
    case ErrorCode::SearchSpaceExceeded: return kGuardExceeded;
    case ErrorCode::InvalidSpec: return kUsage;
    default: return kInfeasible;
  }
}

}  // namespace

ScenarioConfig scenario_from_json(const Json& j) {
  ScenarioConfig cfg;
  if (j.contains("graph")) cfg.graph = graph_spec_from_json(j.at("graph"));
  if (j.contains("tau")) cfg.tau = j.at("tau").get<std::vector<int>>();
  if (j.contains("B")) cfg.budget = j.at("B").get<int>();
  cfg.mode = j.value("mode", std::string{});
  if (j.contains("trials")) cfg.trials = j.at("trials").get<std::int64_t>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tol")) cfg.tolerance = j.at("tol").get<double>();
  if (j.contains("P")) cfg.strategy = matrix_from_json(j.at("P"));

  if ((cfg.mode == "solve" || cfg.mode == "simulate") && (!cfg.tau || cfg.budget))
    throw PatrolError(ErrorCode::InvalidSpec, cfg.mode + " scenarios take tau and no B");
  if ((cfg.mode == "allocate" || cfg.mode == "co-optimize") && (!cfg.budget || cfg.tau))
    throw PatrolError(ErrorCode::InvalidSpec, cfg.mode + " scenarios take B and no tau");
  if (cfg.mode == "co-optimize") {
    if (!cfg.graph || cfg.graph->family != Family::CompleteBipartite)
      throw PatrolError(ErrorCode::InvalidSpec, "co-optimize needs a bipartite graph");
    if (*cfg.budget % 2 != 0) throw PatrolError(ErrorCode::ParityError, "co-optimize needs an even B");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandError{kUsage, "cannot read config " + path};
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw CommandError{kUsage, std::string("invalid config JSON: ") + e.what()};
  }
  return scenario_from_json(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic patrol strategies and defense allocation"};
  app.require_subcommand(1);
  Options opt;

  auto* solve = app.add_subcommand("solve", "synthesize a patrol strategy for given attack durations");
  add_graph_options(solve, opt);
  solve->add_option("--tau", opt.tau, "comma-separated attack durations");
  solve->add_flag("--emit-cdf", opt.emit_cdf, "include the capture CDF matrix");

  auto* allocate = app.add_subcommand("allocate", "split a defense budget across nodes");
  add_graph_options(allocate, opt);
  allocate->add_option("--B", opt.budget, "total defense budget");
  allocate->add_flag("--compare-uniform", opt.compare_uniform, "also report the uniform allocation");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo capture estimates");
  add_graph_options(simulate, opt);
  simulate->add_option("--tau", opt.tau, "comma-separated attack durations");
  simulate->add_option("--trials", opt.trials, "walks per ordered pair");
  simulate->add_option("--seed", opt.seed, "random seed");

  auto* verify = app.add_subcommand("verify", "run oracle and bound suites");
  verify->add_option("--suite", opt.suite, "bounds | alloc-oracle | montecarlo | closed-form | star | all");
  verify->add_option("--nmax", opt.nmax, "largest side size for the allocation oracle");
  verify->add_option("--trials", opt.trials, "Monte Carlo trials per pair");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--tol", opt.tol, "comparison tolerance override");
  verify->add_option("--restarts", opt.restarts, "local search restarts");
  verify->add_option("--instances", opt.instances, "Monte Carlo instances");
  verify->add_option("--config", opt.config, "scenario JSON file");
  verify->add_option("--out", opt.out_path, "write the JSON suite report here");

  auto* sweep = app.add_subcommand("sweep", "CSV rows over a parameter grid");
  sweep->add_option("--family", opt.family, "complete | bipartite | star");
  sweep->add_option("--n", opt.n, "node count");
  sweep->add_option("--np", opt.n_p, "side P size");
  sweep->add_option("--nq", opt.n_q, "side Q size");
  sweep->add_option("--n-range", opt.n_range, "lo:hi node counts");
  sweep->add_option("--np-range", opt.np_range, "lo:hi side P sizes");
  sweep->add_option("--nq-range", opt.nq_range, "lo:hi side Q sizes");
  sweep->add_option("--tau-range", opt.tau_range, "lo:hi uniform attack durations");
  sweep->add_option("--B-range", opt.budget_range, "lo:hi budgets");
  sweep->add_option("--out", opt.out_path, "write CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // Each option pointer is only meaningful for the subcommand that owns it.
  Presence active;
  auto pick = [](CLI::App* cmd, const char* name) -> CLI::Option* {
    try {
      return cmd->get_option(name);
    } catch (const CLI::OptionNotFound&) {
      return nullptr;
    }
  };
  CLI::App* chosen = app.get_subcommands().front();
  active.family = pick(chosen, "--family");
  active.n = pick(chosen, "--n");
  active.n_p = pick(chosen, "--np");
  active.n_q = pick(chosen, "--nq");
  active.tau = pick(chosen, "--tau");
  active.budget = pick(chosen, "--B");
  active.trials = pick(chosen, "--trials");
  active.seed = pick(chosen, "--seed");
  active.tol = pick(chosen, "--tol");

  try {
    Command command(opt, active, out, err);
    if (chosen == solve) return command.solve();
    if (chosen == allocate) return command.allocate();
    if (chosen == simulate) return command.simulate();
    if (chosen == verify) return command.verify();
    return command.sweep();
  } catch (const CommandError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const PatrolError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace patrolgame::cli
