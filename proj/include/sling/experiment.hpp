#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace sling {

// Flat key=value experiment config ('#' comments, blank lines ignored).
// Documented keys:
//   solver     mpcgs | mpscgs | spfw            (required)
//   problem    synthetic | robust_mc            (required)
//   iters      outer iterations                 (required, > 0)
//   seed       rng seed                         (default 1)
//   out        trace path                       (required)
//   format     csv | json                       (default csv)
//   scale      batch-size multiplier            (default 1, mpscgs only)
//   warm_start 0 | 1                            (default 0, mpcgs only)
//   data       libsvm file                      (robust_mc)
//   tau        nuclear-ball radius              (robust_mc, default 10)
//   lambda     regularization or `auto` = 1/n   (robust_mc, default auto)
//   dx dy      dimensions                       (synthetic, defaults 20/10)
//   kappa      target condition number          (synthetic, default 10, >= 1)
//   sigma      gradient noise bound             (synthetic, default 0)
struct RunConfig {
  std::map<std::string, std::string> values;

  static RunConfig parse(const std::string& text);
  static RunConfig parse_file(const std::string& path);

  std::string get(const std::string& key, const std::string& fallback = "") const;
  double get_num(const std::string& key, double fallback) const;
};

// Executes the configured run: builds the problem, resolves the schedule,
// solves, writes the trace and a replay manifest (<out>.manifest.json).
// Returns 0 on success, 2 on config/data errors, 3 on solver numeric errors,
// with a diagnostic on `log`.
int run_experiment(const std::string& config_path, bool verbose, std::ostream& log);

// Reads a trace and prints measured FW-gap against the recorded rate bound
// per iteration with a PASS n/m summary ("no bound recorded" when the trace
// has none; the FW-gap upper-bounds the primal-dual gap the theorem speaks
// about, so a FAIL row is a flag to investigate, not a proof of violation).
// Returns 0, or 2 on a malformed trace.
int bound_table(const std::string& trace_path, std::ostream& out);

}  // namespace sling
