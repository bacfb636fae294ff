#include "stairbound/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stairbound/errors.hpp"

namespace stairbound {

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw ValidationError("graph JSON requires fields n and edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return build_graph(j.at("n").get<int>(), std::move(edges));
}

Json path_system_to_json(const PathSystem& ps) {
  Json j;
  j["n"] = ps.n;
  Json paths = Json::array();
  for (int u = 1; u <= ps.n; ++u)
    for (int v = 1; v <= ps.n; ++v) {
      Json p;
      p["from"] = u;
      p["to"] = v;
      p["vertices"] = ps.at(u, v).vertices;
      paths.push_back(std::move(p));
    }
  j["paths"] = std::move(paths);
  return j;
}

PathSystem path_system_from_json(const Json& j) {
  PathSystem ps;
  ps.n = j.at("n").get<int>();
  if (ps.n < 1) throw ValidationError("path system JSON: n must be positive");
  ps.paths.resize(static_cast<std::size_t>(ps.n) * ps.n);
  std::vector<char> seen(ps.paths.size(), 0);
  for (const auto& p : j.at("paths")) {
    int u = p.at("from").get<int>();
    int v = p.at("to").get<int>();
    if (u < 1 || u > ps.n || v < 1 || v > ps.n)
      throw ValidationError("path system JSON: pair out of range");
    std::size_t idx = static_cast<std::size_t>(u - 1) * ps.n + (v - 1);
    if (seen[idx]) throw ValidationError("path system JSON: duplicate pair");
    seen[idx] = 1;
    ps.at(u, v).vertices = p.at("vertices").get<std::vector<int>>();
  }
  for (char s : seen)
    if (!s) throw ValidationError("path system JSON: missing ordered pair");
  return ps;
}

Json instance_to_json(const HardInstance& inst) {
  Json j;
  j["graph"] = graph_to_json(inst.graph);
  j["paths"] = path_system_to_json(inst.paths);
  j["milestones"] = inst.milestones.entries;
  if (inst.hidden_bit)
    j["b"] = *inst.hidden_bit;
  else
    j["b"] = nullptr;
  return j;
}

HardInstance instance_from_json(const Json& j) {
  Graph g = graph_from_json(j.at("graph"));
  PathSystem ps = path_system_from_json(j.at("paths"));
  validate_path_system(g, ps);
  MilestoneSequence ms =
      make_milestones(j.at("milestones").get<std::vector<int>>(), g.n);
  std::optional<int> b;
  if (j.contains("b") && !j.at("b").is_null()) b = j.at("b").get<int>();
  return make_instance(g, ps, ms, b);
}

Json congestion_report_to_json(const CongestionReport& r) {
  Json j;
  j["g"] = r.g;
  j["g_e"] = r.g_e;
  Json loads = Json::array();
  for (std::size_t v = 1; v < r.vertex_load.size(); ++v)
    loads.push_back(r.vertex_load[v]);
  j["vertex_load"] = std::move(loads);
  Json edge_loads = Json::array();
  for (const auto& [e, load] : r.edge_load)
    edge_loads.push_back(Json::array({e.first, e.second, load}));
  j["edge_load"] = std::move(edge_loads);
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["detail"] = r.detail;
  return j;
}

Json solve_result_to_json(const std::string& algorithm, std::uint64_t seed,
                          const SolveResult& r) {
  Json j;
  j["algorithm"] = algorithm;
  j["seed"] = seed;
  if (r.answer)
    j["answer"] = *r.answer;
  else
    j["answer"] = nullptr;
  if (r.bit)
    j["bit"] = *r.bit;
  j["distinct_queries"] = r.distinct_queries;
  j["total_queries"] = r.total_queries;
  j["trace"] = r.trace;
  return j;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write file: " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ValidationError("cannot rename " + tmp + " to " + path);
}

}  // namespace stairbound
