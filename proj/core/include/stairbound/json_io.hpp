#pragma once

#include <json.hpp>

#include <string>

#include "stairbound/adversary.hpp"
#include "stairbound/solvers.hpp"

namespace stairbound {

using Json = nlohmann::ordered_json;

// Graph JSON: {"n": <int>, "edges": [[u,v], ...]} with 1-based labels and
// u < v, sorted; byte-stable so reports are diffable.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// PathSystem JSON: all n^2 ordered pairs sorted by (from, to).
Json path_system_to_json(const PathSystem& ps);
PathSystem path_system_from_json(const Json& j);

// Instance JSON: {"graph":..., "paths":..., "milestones":[..], "b":0|1|null}.
Json instance_to_json(const HardInstance& inst);
HardInstance instance_from_json(const Json& j);

Json congestion_report_to_json(const CongestionReport& r);
Json check_report_to_json(const CheckReport& r);
Json solve_result_to_json(const std::string& algorithm, std::uint64_t seed,
                          const SolveResult& r);

/// Stable serialization: 2-space indent, trailing newline.
std::string dump_stable(const Json& j);

std::string read_file(const std::string& path);
/// Writes via a temp file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace stairbound
