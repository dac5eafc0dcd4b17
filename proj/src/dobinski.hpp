#pragma once

#include "lambert.hpp"

namespace stirmode {

// Above this n, ratio comparisons switch from exact big-integer powers to
// certified log enclosures; k^n bit-length grows past a couple of MB near
// n = 10^6 while enclosures stay cheap, and equality is impossible either way.
inline constexpr long kDefaultExactRatioThreshold = 10000;

// Sign of (k+1)^{n-1} - k^n, i.e. of f(k) - 1 where f(k) is the term ratio
// ((k+1)^n/(k+1)!) / (k^n/k!). Never zero for n >= 2, k >= 1: k and k+1 are
// coprime, so the powers cannot coincide.
int ratio_sign(long n, long k, long exact_threshold = kDefaultExactRatioThreshold);
int ratio_sign_exact(long n, long k);
int ratio_sign_interval(long n, long k, unsigned* bits_out = nullptr);

struct IntegerInterval {
  long lo = 0;
  long hi = 0;
  bool contains(long x) const { return lo <= x && x <= hi; }
};

// k_star = floor(e^{w(n)}) together with the branch test
// k_*^n/k_*! > (k_*+1)^n/(k_*+1)!  (equivalent to ratio_sign(n, k_star) < 0)
// and the branch-refined window for K_n.
struct BranchWindow {
  long k_star = 0;
  bool branch_greater = false;
  IntegerInterval interval;
  unsigned kstar_bits = 0;
};
BranchWindow branch_window(long n, long exact_threshold = kDefaultExactRatioThreshold);

// Window for K_n: [k_*-2, k_*] when the branch test holds, else
// [k_*-1, k_*+1]; lower end clamped at 1.
IntegerInterval corollary_bounds(long n);

// Unique mode of the positive sequence k^n/k!, k >= 1.
struct DobinskiMode {
  long n = 0;
  long mode = 0;
  long k_star = 0;
  bool branch_greater = false;
};
DobinskiMode dobinski_mode(long n, long exact_threshold = kDefaultExactRatioThreshold);

// Truncated-series check of e * B_n = sum_{k>=1} k^n/k!. Terms are summed in
// high-precision floating arithmetic until the observed term ratio drops
// below 1/2 (it only decreases from there) and the current term is below
// rel_tol * partial_sum / 2, bounding the tail by a geometric series inside
// half the budget.
struct DobinskiSumReport {
  bool ok = false;
  double rel_diff = 0.0;
  long terms = 0;
  unsigned precision_bits = 0;
};
DobinskiSumReport dobinski_sum_check(long n, double rel_tol = 1e-9);

}  // namespace stirmode
