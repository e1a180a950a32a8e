#ifndef CYLIE_CHECKS_HPP
#define CYLIE_CHECKS_HPP

#include <functional>

#include "cylie/json_io.hpp"

namespace cylie {

// One registered verification: a deterministic computation reproducing a
// published identity (or a randomized property suite under a fixed seed).
struct CheckDef {
  std::string id;
  std::string citation;
  std::function<bool(uint64_t seed, json& details)> run;
};

// The compiled-in registry, sorted by id. Every verified identity appears
// exactly once.
const std::vector<CheckDef>& check_registry();

struct CheckResult {
  std::string id;
  std::string status;  // pass | fail | error
  std::string citation;
  json details;
  int64_t elapsed_ms = 0;
};

// Runs every check whose id starts with the selector ("all" runs the full
// registry). UnknownSelector when nothing matches. Deterministic order by
// id; `seed` feeds the randomized suites.
std::vector<CheckResult> run_checks(const std::string& selector, uint64_t seed = 12345);

// {"results": [...], "summary": {"pass": n, "fail": n, "error": n},
//  "seed": n} - byte-identical across runs except the elapsed fields.
json report_to_json(const std::vector<CheckResult>& results, uint64_t seed);

std::string report_to_text(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cylie

#endif
