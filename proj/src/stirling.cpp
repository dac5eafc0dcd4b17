#include "stirling.hpp"

#include <string>

#include "config.hpp"
#include "errors.hpp"

namespace stirmode {

const mpz_class StirlingRow::kZero = 0;

namespace {

void check_row_n(long n) {
  if (n < 1 || n > max_row_n()) {
    throw LimitError("stirling row n=" + std::to_string(n) +
                     " outside 1..=" + std::to_string(max_row_n()));
  }
}

}  // namespace

StirlingRow::StirlingRow(long n) : n_(1), v_{mpz_class(0), mpz_class(1)} {
  check_row_n(n);
  while (n_ < n) advance();
}

void StirlingRow::advance() {
  check_row_n(n_ + 1);
  ++n_;
  v_.resize(static_cast<size_t>(n_) + 1);
  // Descending k reads only not-yet-updated entries of the previous row.
  for (long k = n_; k >= 1; --k) {
    mpz_ptr cur = v_[static_cast<size_t>(k)].get_mpz_t();
    mpz_mul_ui(cur, cur, static_cast<unsigned long>(k));
    mpz_add(cur, cur, v_[static_cast<size_t>(k - 1)].get_mpz_t());
  }
}

const mpz_class& StirlingRow::at(long k) const {
  if (k <= 0 || k > n_) return kZero;
  return v_[static_cast<size_t>(k)];
}

mpz_class StirlingRow::bell() const {
  mpz_class sum = 0;
  for (long k = 1; k <= n_; ++k) sum += v_[static_cast<size_t>(k)];
  return sum;
}

mpz_class stirling(long n, long k) {
  check_row_n(n);
  if (k <= 0 || k > n) return 0;
  return StirlingRow(n).at(k);
}

mpz_class bell_number(long n) {
  check_row_n(n);
  return StirlingRow(n).bell();
}

ModeLocation locate_mode(const StirlingRow& row) {
  const long n = row.n();
  long best = 1;
  for (long k = 2; k <= n; ++k) {
    if (row.at(k) > row.at(best)) best = k;  // strict: keeps the leftmost
  }
  const bool tie = best < n && row.at(best) == row.at(best + 1);
  return {best, tie};
}

NewtonRowReport check_newton_row(const StirlingRow& row) {
  const long n = row.n();
  if (n < 2) throw UsageError("check_newton_row: n >= 2 required");
  NewtonRowReport rep{true, true};
  mpz_class lhs, rhs;
  for (long i = 0; i + 2 <= n; ++i) {
    lhs = row.at(i + 1) * row.at(i + 1);
    lhs *= (i + 1) * (n - i - 1);
    rhs = row.at(i) * row.at(i + 2);
    rhs *= (i + 2) * (n - i);
    if (lhs < rhs) {
      rep.newton_ok = false;
      break;
    }
  }
  for (long k = 2; k + 1 <= n; ++k) {
    lhs = row.at(k) * row.at(k);
    rhs = row.at(k - 1) * row.at(k + 1);
    if (lhs <= rhs) {
      rep.strictly_log_concave = false;
      break;
    }
  }
  return rep;
}

}  // namespace stirmode
