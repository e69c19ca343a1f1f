#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cycsub {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, double>> values;
  std::string detail;  // failure context, empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool pass() const;
};

// Scale knobs. Zero means "use the suite's default".
struct SuiteOptions {
  int n = 0;          // gncriterion: only this n; balancedcut: largest random n
  int instances = 0;  // balancedcut random graphs; builders instances per builder
  int m = 0;          // builders: order of the cycle-builder instances
  std::uint64_t seed = 0;
  int workers = 1;
};

const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

SuiteReport suite_balancedcut(const SuiteOptions& opts);
SuiteReport suite_chernoff(const SuiteOptions& opts);
SuiteReport suite_bindiff(const SuiteOptions& opts);
SuiteReport suite_pn(const SuiteOptions& opts);
SuiteReport suite_fnsecond(const SuiteOptions& opts);
SuiteReport suite_calculus(const SuiteOptions& opts);
SuiteReport suite_gncriterion(const SuiteOptions& opts);
SuiteReport suite_builders(const SuiteOptions& opts);

}  // namespace cycsub
