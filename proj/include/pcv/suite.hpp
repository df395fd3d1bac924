#ifndef PCV_SUITE_HPP
#define PCV_SUITE_HPP

#include <pcv/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pcv {

inline constexpr const char* kToolVersion = "pcv 1.0.0";

// Batch sweep configuration. `checks` holds family names; "all" is expanded
// by the CLI before validation.
struct SweepConfig {
  int n_min = 3;
  int n_max = 8;
  unsigned long p_max = 151;
  std::vector<std::string> checks;
  std::map<std::string, int> precision_overrides;
  unsigned long derivative_prime_cap = 67;
  int jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool perturb_theorem1 = false;  // negative-control hook
  bool timing = true;             // false zeroes elapsed_ms for byte-stable output
};

// One verified instance. For congruence rows, lhs/rhs are canonical least
// residues mod p^k as decimal strings. Property-style rows (identity
// families checked at random points) use k = 0 with lhs = points checked
// and rhs = points passed.
struct CaseResult {
  std::string check;
  int n = 0;
  unsigned long p = 0;
  int k = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool error = false;
  std::string message;
  long elapsed_ms = 0;
};

struct SuiteReport {
  SweepConfig config;
  std::vector<CaseResult> results;  // sorted by (check, n, p)
  long total = 0;
  long passed = 0;
  long failed = 0;
  std::string version = kToolVersion;
};

// Family names accepted in SweepConfig::checks.
const std::vector<std::string>& known_checks();

// Throws std::invalid_argument on a bad configuration.
void validate_config(const SweepConfig& cfg);

// All (n, p) with n_min <= n <= n_max, p <= p_max prime, p > 3,
// p == 1 (mod n); sorted.
std::vector<std::pair<int, unsigned long>> enumerate_cases(const SweepConfig& cfg);

// Runs every selected check over its admissible cases. Failed congruences
// and internal errors become result rows, never aborts.
SuiteReport run_suite(const SweepConfig& cfg);

void render_report(const SuiteReport& report, const std::string& format,
                   std::ostream& out);

// 0 = all pass, 1 = at least one failure or case-level error.
int suite_exit_code(const SuiteReport& report);

}  // namespace pcv

#endif
