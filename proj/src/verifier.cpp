#include "verifier.hpp"

#include <algorithm>
#include <string>

#include "certified.hpp"
#include "config.hpp"
#include "errors.hpp"

namespace stirmode {

CheckReport verify_row(const StirlingRow& row) {
  const long n = row.n();
  if (n < 2) throw UsageError("verify_row: n >= 2 required");
  CheckReport r;
  r.n = n;

  const ModeLocation m = locate_mode(row);
  r.k_n = m.index;
  r.ties_right = m.ties_right;
  r.equality_event = m.ties_right;

  const BranchWindow bw = branch_window(n);
  r.k_star = bw.k_star;
  r.branch_greater = bw.branch_greater;
  r.corollary_lo = bw.interval.lo;
  r.corollary_hi = bw.interval.hi;

  r.theorem1_ok = bw.k_star - 2 <= r.k_n && r.k_n <= bw.k_star + 1;
  r.cp_membership_ok = r.k_n == bw.k_star - 1 || r.k_n == bw.k_star;
  if (n >= 3) r.wegner_upper_ok = wegner_upper_holds(r.k_n, n);
  if (n >= 31) r.wegner_lower_ok = wegner_lower_holds(r.k_n, n);
  if (n >= 7) r.implication_upper_ok = wegner_upper_holds(bw.k_star + 1, n);
  if (n >= 34) r.implication_lower_ok = wegner_lower_holds(bw.k_star - 2, n);
  return r;
}

CheckReport verify_n(long n) {
  if (n < 2) throw UsageError("verify_n: n >= 2 required");
  return verify_row(StirlingRow(n));
}

VerifyResult verify_range(long from, long to) {
  if (from < 2 || from > to) throw UsageError("verify_range: need 2 <= from <= to");
  if (to > max_row_n()) {
    throw LimitError("verify_range: to=" + std::to_string(to) + " past max n " +
                     std::to_string(max_row_n()));
  }
  VerifyResult res;
  res.summary.from = from;
  res.summary.to = to;
  res.reports.reserve(static_cast<size_t>(to - from + 1));

  StirlingRow row(from);
  for (long n = from;;) {
    CheckReport r = verify_row(row);
    VerifySummary& s = res.summary;
    if (!r.theorem1_ok) ++s.theorem1_failures;
    if (!(r.corollary_lo <= r.k_n && r.k_n <= r.corollary_hi)) ++s.corollary_failures;
    if (!r.cp_membership_ok) {
      if (n <= kCpVerifiedMax) {
        ++s.cp_failures;
      } else {
        s.cp_informational_misses.push_back(n);
      }
    }
    if (r.wegner_upper_ok && !*r.wegner_upper_ok) ++s.wegner_upper_failures;
    if (r.wegner_lower_ok && !*r.wegner_lower_ok) ++s.wegner_lower_failures;
    if (r.implication_upper_ok && !*r.implication_upper_ok) ++s.implication_upper_failures;
    if (r.implication_lower_ok && !*r.implication_lower_ok) ++s.implication_lower_failures;
    if (r.equality_event) s.equality_ns.push_back(n);
    res.reports.push_back(std::move(r));
    if (++n > to) break;
    row.advance();
  }
  return res;
}

ImplicationsResult verify_implications(long from, long to) {
  if (from < 2 || from > to) {
    throw UsageError("verify_implications: need 2 <= from <= to");
  }
  if (to > 1000000000L) {
    throw LimitError("verify_implications: to=" + std::to_string(to) +
                     " past sanity bound 10^9");
  }
  ImplicationsResult res;
  res.from = from;
  res.to = to;
  for (long n = std::max(from, 3L); n <= to; ++n) {
    ImplicationCheck c;
    c.n = n;
    c.k_star = floor_exp_w(n).value;
    c.upper_ok = wegner_upper_holds(c.k_star + 1, n);
    c.lower_ok = wegner_lower_holds(std::max(c.k_star - 2, 0L), n);
    c.upper_counted = n >= 7;
    c.lower_counted = n >= 34;
    if (!*c.upper_ok) {
      if (c.upper_counted) {
        ++res.upper_failures;
      } else {
        res.upper_informational_failures.push_back(n);
      }
    }
    if (!*c.lower_ok) {
      if (c.lower_counted) {
        ++res.lower_failures;
      } else {
        res.lower_informational_failures.push_back(n);
      }
    }
    res.checks.push_back(c);
  }
  return res;
}

}  // namespace stirmode
