#include "dobinski.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "certified.hpp"
#include "errors.hpp"
#include "stirling.hpp"

namespace stirmode {

namespace {

void check_ratio_args(long n, long k) {
  if (n < 2) throw UsageError("ratio_sign: n >= 2 required");
  if (k < 1) throw UsageError("ratio_sign: k >= 1 required");
}

}  // namespace

int ratio_sign_exact(long n, long k) {
  check_ratio_args(n, k);
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(k + 1),
                static_cast<unsigned long>(n - 1));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(n));
  const int c = cmp(a, b);
  if (c == 0) {
    throw TheoremViolation("ratio_sign_exact: (k+1)^(n-1) == k^n at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  }
  return c > 0 ? 1 : -1;
}

int ratio_sign_interval(long n, long k, unsigned* bits_out) {
  check_ratio_args(n, k);
  if (k == 1) return 1;  // (n-1)*ln 2 > 0 = n*ln 1
  // sign of (n-1)*ln(k+1) - n*ln(k)
  return certified_sign(
      [n, k](mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
        MpFloat ad(p), au(p), bd(p), bu(p);
        mpfr_set_si(ad.get(), k + 1, MPFR_RNDD);
        mpfr_log(ad.get(), ad.get(), MPFR_RNDD);
        mpfr_mul_si(ad.get(), ad.get(), n - 1, MPFR_RNDD);
        mpfr_set_si(au.get(), k + 1, MPFR_RNDU);
        mpfr_log(au.get(), au.get(), MPFR_RNDU);
        mpfr_mul_si(au.get(), au.get(), n - 1, MPFR_RNDU);
        mpfr_set_si(bd.get(), k, MPFR_RNDD);
        mpfr_log(bd.get(), bd.get(), MPFR_RNDD);
        mpfr_mul_si(bd.get(), bd.get(), n, MPFR_RNDD);
        mpfr_set_si(bu.get(), k, MPFR_RNDU);
        mpfr_log(bu.get(), bu.get(), MPFR_RNDU);
        mpfr_mul_si(bu.get(), bu.get(), n, MPFR_RNDU);
        mpfr_sub(lo, ad.get(), bu.get(), MPFR_RNDD);
        mpfr_sub(hi, au.get(), bd.get(), MPFR_RNDU);
      },
      bits_out);
}

int ratio_sign(long n, long k, long exact_threshold) {
  check_ratio_args(n, k);
  if (n <= exact_threshold) return ratio_sign_exact(n, k);
  return ratio_sign_interval(n, k);
}

BranchWindow branch_window(long n, long exact_threshold) {
  if (n < 2) throw UsageError("branch_window: n >= 2 required");
  BranchWindow bw;
  const CertifiedInt ks = floor_exp_w(n);
  bw.k_star = ks.value;
  bw.kstar_bits = ks.decision_precision_bits;
  bw.branch_greater = ratio_sign(n, bw.k_star, exact_threshold) < 0;
  bw.interval.lo = std::max(1L, bw.branch_greater ? bw.k_star - 2 : bw.k_star - 1);
  bw.interval.hi = bw.branch_greater ? bw.k_star : bw.k_star + 1;
  return bw;
}

IntegerInterval corollary_bounds(long n) { return branch_window(n).interval; }

DobinskiMode dobinski_mode(long n, long exact_threshold) {
  if (n < 2) throw UsageError("dobinski_mode: n >= 2 required");
  const CertifiedInt ks = floor_exp_w(n);
  const long k_star = ks.value;

  // The sign change is adjacent to k_star; starting two below keeps the scan
  // self-validating (a -1 before k_star would fail the membership assert).
  const long start = std::max(1L, k_star - 2);
  long mode = -1;
  int sign_at_kstar = 0;
  for (long k = start; k <= k_star + 8; ++k) {
    const int s = ratio_sign(n, k, exact_threshold);
    if (k == k_star) sign_at_kstar = s;
    if (s < 0) {
      mode = k;
      break;
    }
  }
  if (mode != k_star && mode != k_star + 1) {
    throw TheoremViolation("dobinski_mode: mode of k^n/k! outside {k_*, k_*+1} at n=" +
                           std::to_string(n) + ": mode=" + std::to_string(mode) +
                           ", k_star=" + std::to_string(k_star));
  }
  if (sign_at_kstar == 0) sign_at_kstar = ratio_sign(n, k_star, exact_threshold);
  DobinskiMode dm;
  dm.n = n;
  dm.mode = mode;
  dm.k_star = k_star;
  dm.branch_greater = sign_at_kstar < 0;
  if (dm.branch_greater != (mode == k_star)) {
    throw TheoremViolation("dobinski_mode: branch test disagrees with mode at n=" +
                           std::to_string(n));
  }
  return dm;
}

DobinskiSumReport dobinski_sum_check(long n, double rel_tol) {
  if (n < 1) throw UsageError("dobinski_sum_check: n >= 1 required");
  if (!(rel_tol > 0)) throw UsageError("dobinski_sum_check: rel_tol must be > 0");
  const mpz_class bn = bell_number(n);  // also enforces row limits

  const mpfr_prec_t p = std::max<mpfr_prec_t>(
      128, 64 + static_cast<mpfr_prec_t>(std::ceil(-std::log2(rel_tol))));
  MpFloat sum(p), term(p), prev(p), fact(p), twice(p), budget(p);
  mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
  mpfr_set_ui(fact.get(), 1, MPFR_RNDN);
  mpfr_set_ui(prev.get(), 0, MPFR_RNDN);

  long terms = 0;
  bool settled = false;
  for (long k = 1; k <= 10000000; ++k) {
    mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_ui_pow_ui(term.get(), static_cast<unsigned long>(k),
                   static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), fact.get(), MPFR_RNDN);  // k^n / k!
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    ++terms;
    if (k >= 2) {
      mpfr_mul_2ui(twice.get(), term.get(), 1, MPFR_RNDN);
      if (mpfr_cmp(twice.get(), prev.get()) < 0) {  // observed ratio < 1/2
        mpfr_mul_d(budget.get(), sum.get(), rel_tol, MPFR_RNDN);
        if (mpfr_cmp(twice.get(), budget.get()) < 0) {  // term < rel_tol*sum/2
          settled = true;
          break;
        }
      }
    }
    mpfr_set(prev.get(), term.get(), MPFR_RNDN);
  }
  if (!settled) throw PrecisionError("dobinski_sum_check: series did not settle");

  MpFloat target(p), diff(p);
  mpfr_set_ui(target.get(), 1, MPFR_RNDN);
  mpfr_exp(target.get(), target.get(), MPFR_RNDN);
  {
    MpFloat bnf(p);
    mpfr_set_z(bnf.get(), bn.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(target.get(), target.get(), bnf.get(), MPFR_RNDN);  // e * B_n
  }
  mpfr_sub(diff.get(), sum.get(), target.get(), MPFR_RNDN);
  mpfr_div(diff.get(), diff.get(), target.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  const double rd = mpfr_get_d(diff.get(), MPFR_RNDN);

  DobinskiSumReport rep;
  rep.ok = rd <= rel_tol;
  rep.rel_diff = rd;
  rep.terms = terms;
  rep.precision_bits = static_cast<unsigned>(p);
  return rep;
}

}  // namespace stirmode
