#pragma once

#include <optional>
#include <vector>

#include "dobinski.hpp"
#include "stirling.hpp"

namespace stirmode {

// Range over which K_n ∈ {k_*-1, k_*} is treated as pass/fail; beyond it the
// membership is reported as informational only, since only this finite range
// is established.
inline constexpr long kCpVerifiedMax = 1200;

struct CheckReport {
  long n = 0;
  long k_n = 0;
  bool ties_right = false;
  long k_star = 0;
  long corollary_lo = 0;
  long corollary_hi = 0;
  bool branch_greater = false;
  bool theorem1_ok = false;       // k_*-2 <= K_n <= k_*+1
  bool cp_membership_ok = false;  // K_n in {k_*-1, k_*}
  std::optional<bool> wegner_upper_ok;       // n >= 3
  std::optional<bool> wegner_lower_ok;       // n >= 31
  std::optional<bool> implication_upper_ok;  // n >= 7: k_*+1 < n/(ln n - ln ln n)
  std::optional<bool> implication_lower_ok;  // n >= 34: k_*-2 > lower bound
  bool equality_event = false;               // S(n,K_n) == S(n,K_n+1)
};

CheckReport verify_n(long n);
CheckReport verify_row(const StirlingRow& row);

struct VerifySummary {
  long from = 0;
  long to = 0;
  long theorem1_failures = 0;
  long corollary_failures = 0;
  long cp_failures = 0;  // counted for n <= kCpVerifiedMax only
  std::vector<long> cp_informational_misses;
  long wegner_upper_failures = 0;
  long wegner_lower_failures = 0;
  long implication_upper_failures = 0;
  long implication_lower_failures = 0;
  std::vector<long> equality_ns;

  bool equality_only_at_2() const {
    for (long n : equality_ns) {
      if (n != 2) return false;
    }
    return true;
  }
  bool all_pass() const {
    return theorem1_failures == 0 && corollary_failures == 0 && cp_failures == 0 &&
           wegner_upper_failures == 0 && wegner_lower_failures == 0 &&
           implication_upper_failures == 0 && implication_lower_failures == 0 &&
           equality_only_at_2();
  }
};

struct VerifyResult {
  VerifySummary summary;
  std::vector<CheckReport> reports;
};

// Scans [from, to] on one rolling row. Requires 2 <= from <= to <= max_row_n().
VerifyResult verify_range(long from, long to);

// Row-free scan of the two implication inequalities. The pass/fail windows
// are n >= 7 (upper) and n >= 34 (lower); results below those are reported
// but not counted. No Stirling rows are built, so the row maximum does not
// apply; a wide sanity bound does.
struct ImplicationCheck {
  long n = 0;
  long k_star = 0;
  std::optional<bool> upper_ok;  // computed for n >= 3
  std::optional<bool> lower_ok;  // computed for n >= 3
  bool upper_counted = false;
  bool lower_counted = false;
};

struct ImplicationsResult {
  long from = 0;
  long to = 0;
  long upper_failures = 0;  // within counted windows
  long lower_failures = 0;
  std::vector<long> upper_informational_failures;
  std::vector<long> lower_informational_failures;
  std::vector<ImplicationCheck> checks;
};

ImplicationsResult verify_implications(long from, long to);

}  // namespace stirmode
