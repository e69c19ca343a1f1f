#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycsub/analysis.hpp"
#include "cycsub/counting.hpp"
#include "cycsub/numerics.hpp"
#include "cycsub/suites.hpp"

namespace cycsub::report {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

struct InputDigest {
  std::string path;
  std::uint64_t fnv1a64 = 0;
  std::uint64_t bytes = 0;
};

struct RunManifest {
  std::string subcommand;
  std::vector<std::string> args;  // argv without the program name
  std::uint64_t seed = 0;
  int workers = 1;
  std::vector<InputDigest> inputs;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  json to_json() const;  // stamps wall_time_seconds at call time
};

// {"schema": ..., "manifest": ..., "result": ...}
json envelope(const RunManifest& m, json result);

json vertex_list(const VertexSet& s);
std::string rational(const mpq_class& q);

json to_json(const CycReport& r);
json to_json(const EstimateReport& r);
json to_json(const EdgeConcentration& r);
json to_json(const BiDenseResult& r);
json to_json(const Classification& c);
json to_json(const SuiteReport& r);

}  // namespace cycsub::report
