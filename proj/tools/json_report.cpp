#include "json_report.hpp"

#include "cycsub/artifacts.hpp"

namespace cycsub::report {

json RunManifest::to_json() const {
  json in = json::array();
  for (const auto& d : inputs) {
    in.push_back({{"path", d.path}, {"fnv1a64", hex64(d.fnv1a64)}, {"bytes", d.bytes}});
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return {{"subcommand", subcommand}, {"args", args},   {"seed", seed},
          {"workers", workers},       {"tool_version", kToolVersion}, {"inputs", in},
          {"wall_time_seconds", wall}};
}

json envelope(const RunManifest& m, json result) {
  return {{"schema", kSchemaVersion}, {"manifest", m.to_json()}, {"result", std::move(result)}};
}

json vertex_list(const VertexSet& s) { return s.to_vector(); }

std::string rational(const mpq_class& q) { return q.get_str(); }

json to_json(const CycReport& r) {
  const mpq_class p = r.p_exact();
  return {{"vertices", r.vertices},
          {"total_subsets", r.total_subsets},
          {"cyclic_count", r.cyclic_count},
          {"per_size", r.per_size},
          {"p_exact", rational(p)},
          {"p", p.get_d()}};
}

json to_json(const EstimateReport& r) {
  return {{"samples", r.samples},
          {"successes", r.successes},
          {"undecided", r.undecided},
          {"seed", r.seed},
          {"p_retention", r.p_retention},
          {"p_hat", r.p_hat},
          {"ci_low", r.ci_low},
          {"ci_high", r.ci_high},
          {"std_error", r.std_error},
          {"undecided_fraction", r.undecided_fraction},
          {"lower_bound", r.lower_bound},
          {"decider", r.decider}};
}

json to_json(const EdgeConcentration& r) {
  return {{"samples", r.samples},
          {"edges", r.edges},
          {"expected", r.expected},
          {"mean", r.mean},
          {"variance", r.variance},
          {"std_error", r.std_error},
          {"deviation_fraction", r.deviation_fraction},
          {"mean_within_3se", r.mean_within_3se}};
}

json to_json(const BiDenseResult& r) {
  return {{"bi_dense", r.bi_dense},
          {"a", vertex_list(r.a)},
          {"b", vertex_list(r.b)},
          {"min_edges", r.min_edges},
          {"threshold", r.threshold},
          {"confidence", to_string(r.confidence)}};
}

json to_json(const Classification& c) {
  json j = {{"kind", to_string(c.kind)}, {"confidence", to_string(c.confidence)}, {"bidense", to_json(c.bidense)}};
  if (c.kind == CaseKind::two_cliques || c.kind == CaseKind::near_bipartite) {
    j["a"] = vertex_list(c.a);
    j["cut_edges"] = c.cut_edges;
    j["crossing_min_degree"] = c.crossing_min_degree;
    j["inside_min_degree"] = c.inside_min_degree;
    j["inside_max_degree_a"] = c.inside_max_degree_a;
  }
  return j;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json values = json::object();
    for (const auto& [k, v] : c.values) values[k] = v;
    json row = {{"name", c.name}, {"pass", c.pass}, {"values", values}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(row);
  }
  return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

}  // namespace cycsub::report
