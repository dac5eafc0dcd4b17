#pragma once

#include <gmpxx.h>

#include <vector>

namespace stirmode {

// One row of Stirling numbers of the second kind, S(n, 0..n), built by the
// additive recurrence S(n,k) = S(n-1,k-1) + k*S(n-1,k) and advanced in
// place, so a scan over n needs only the current row.
class StirlingRow {
 public:
  // Builds row n. Requires 1 <= n <= max_row_n(); throws LimitError outside.
  explicit StirlingRow(long n);

  // Row n -> row n+1. Throws LimitError past max_row_n().
  void advance();

  long n() const { return n_; }

  // S(n, k); zero for k <= 0 or k > n.
  const mpz_class& at(long k) const;

  // Row sum = Bell number B_n.
  mpz_class bell() const;

 private:
  long n_;
  std::vector<mpz_class> v_;  // v_[k] = S(n_, k); v_[0] == 0
  static const mpz_class kZero;
};

// Leftmost maximizing index of a row, K_n, with the equality event
// S(n, K_n) == S(n, K_n + 1) flagged explicitly.
struct ModeLocation {
  long index = 0;
  bool ties_right = false;
};

mpz_class stirling(long n, long k);
mpz_class bell_number(long n);
ModeLocation locate_mode(const StirlingRow& row);

// Newton's inequality over the row coefficients c_i = S(n, i), i = 0..n:
//   c_{i+1}^2 * (i+1)(n-i-1) >= c_i * c_{i+2} * (i+2)(n-i),  0 <= i <= n-2,
// plus strict log-concavity of the interior entries. Exact integer
// cross-multiplication only.
struct NewtonRowReport {
  bool newton_ok = false;
  bool strictly_log_concave = false;
  bool ok() const { return newton_ok && strictly_log_concave; }
};
NewtonRowReport check_newton_row(const StirlingRow& row);

}  // namespace stirmode
