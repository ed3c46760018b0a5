#include "patrolgame/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "patrolgame/error.hpp"

namespace patrolgame {

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(round_significant(v(i)));
  return out;
}

Json pair_to_json(std::pair<int, int> p) { return Json::array({p.first + 1, p.second + 1}); }

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(round_significant(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw PatrolError(ErrorCode::InvalidSpec, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw PatrolError(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

Family family_from_string(const std::string& name) {
  if (name == "complete") return Family::Complete;
  if (name == "bipartite") return Family::CompleteBipartite;
  if (name == "star") return Family::Star;
  if (name == "general") return Family::General;
  throw PatrolError(ErrorCode::InvalidSpec, "unknown family '" + name + "'");
}

FamilySpec graph_spec_from_json(const Json& j) {
  FamilySpec spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  spec.n = j.value("n", 0);
  spec.n_p = j.value("n_p", 0);
  spec.n_q = j.value("n_q", 0);
  if (spec.family == Family::CompleteBipartite && spec.n == 0) spec.n = spec.n_p + spec.n_q;
  if (spec.family == Family::General) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw PatrolError(ErrorCode::InvalidSpec, "edges must be [i, j] pairs");
      spec.edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1});
    }
  }
  return spec;
}

Json graph_spec_to_json(const GraphTopology& graph) {
  Json out;
  out["family"] = to_string(graph.family());
  out["n"] = graph.size();
  if (graph.family() == Family::CompleteBipartite) {
    out["n_p"] = graph.side_p();
    out["n_q"] = graph.side_q();
  }
  if (graph.family() == Family::General) {
    Json edges = Json::array();
    for (const auto& e : graph.edges()) edges.push_back({e.from + 1, e.to + 1});
    out["edges"] = std::move(edges);
  }
  return out;
}

Json to_json(const FeasibilityReport& report) {
  Json violations = Json::array();
  for (int v : report.condition1_violations) violations.push_back(v + 1);
  return Json{{"nontrivial", report.nontrivial},
              {"condition1_violations", std::move(violations)},
              {"condition2_holds", report.condition2_holds},
              {"condition2_checked", report.condition2_checked},
              {"notes", report.notes}};
}

Json to_json(const CaptureReport& report) {
  return Json{{"mu", round_significant(report.mu)},
              {"worst_pair", pair_to_json(report.worst_pair)},
              {"cdf", matrix_to_json(report.cdf)}};
}

Json to_json(const SimulationReport& report) {
  return Json{{"estimate", round_significant(report.overall)},
              {"worst_pair", pair_to_json(report.worst_pair)},
              {"trials", report.trials},
              {"seed", report.seed},
              {"estimates", matrix_to_json(report.estimates)}};
}

Json to_json(const StrategyResult& result) {
  Json out;
  out["P"] = matrix_to_json(result.P.matrix());
  out["pi"] = vector_to_json(result.pi.pi);
  out["mu"] = round_significant(result.mu);
  out["w"] = round_significant(result.w);
  if (result.w_p) out["w_p"] = round_significant(*result.w_p);
  if (result.w_q) out["w_q"] = round_significant(*result.w_q);
  out["subopt_lb"] = round_significant(result.subopt_lb);
  out["optimality"] = to_string(result.optimality);
  return out;
}

Json to_json(const AllocationResult& result) {
  Json out;
  out["tau"] = result.tau;
  out["B"] = result.budget;
  if (result.side_p && result.side_q) {
    out["B_p"] = result.side_p->budget;
    out["B_q"] = result.side_q->budget;
    out["tau_p"] = result.side_p->tau;
    out["tau_q"] = result.side_q->tau;
    out["w_p"] = round_significant(result.side_p->w);
    out["w_q"] = round_significant(result.side_q->w);
  }
  out["w"] = round_significant(result.w);
  out["mu"] = round_significant(result.mu);
  return out;
}

Json to_json(const SuiteReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    out.push_back(Json{{"instance", e.instance},
                       {"expected", round_significant(e.expected)},
                       {"actual", round_significant(e.actual)},
                       {"pass", e.pass}});
  }
  return out;
}

}  // namespace patrolgame
