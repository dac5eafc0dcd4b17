#include "lambert.hpp"

#include <algorithm>
#include <cmath>

#include "certified.hpp"
#include "errors.hpp"

namespace stirmode {

double lambert_w(double x, double tolerance) {
  if (std::isnan(x) || x < 0) throw UsageError("lambert_w: x must be >= 0");
  if (!(tolerance > 0)) throw UsageError("lambert_w: tolerance must be > 0");
  if (x == 0) return 0.0;

  const double tol_bits = -std::log2(std::min(tolerance, 1.0));
  const mpfr_prec_t p =
      std::max<mpfr_prec_t>(96, static_cast<mpfr_prec_t>(tol_bits) + 48);
  MpFloat w(p), ew(p), f(p), t(p), num(p), den(p), goal(p);

  // Converge to half the budget; the other half absorbs the final rounding
  // of w to double.
  mpfr_set_d(goal.get(), std::max(1.0, x), MPFR_RNDD);
  mpfr_mul_d(goal.get(), goal.get(), tolerance, MPFR_RNDD);
  mpfr_div_2ui(goal.get(), goal.get(), 1, MPFR_RNDD);

  mpfr_set_d(w.get(), x, MPFR_RNDN);
  mpfr_log1p(w.get(), w.get(), MPFR_RNDN);

  bool converged = false;
  for (int it = 0; it < 500; ++it) {
    mpfr_exp(ew.get(), w.get(), MPFR_RNDN);
    mpfr_mul(f.get(), w.get(), ew.get(), MPFR_RNDN);
    mpfr_sub_d(f.get(), f.get(), x, MPFR_RNDN);  // f = w e^w - x
    mpfr_abs(t.get(), f.get(), MPFR_RNDN);
    if (mpfr_cmp(t.get(), goal.get()) <= 0) {
      converged = true;
      break;
    }
    // Halley: w <- w - f / (e^w (w+1) - (w+2) f / (2(w+1)))
    mpfr_add_ui(t.get(), w.get(), 1, MPFR_RNDN);
    mpfr_mul(den.get(), ew.get(), t.get(), MPFR_RNDN);
    mpfr_add_ui(num.get(), w.get(), 2, MPFR_RNDN);
    mpfr_mul(num.get(), num.get(), f.get(), MPFR_RNDN);
    mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_div(num.get(), num.get(), t.get(), MPFR_RNDN);
    mpfr_sub(den.get(), den.get(), num.get(), MPFR_RNDN);
    mpfr_div(t.get(), f.get(), den.get(), MPFR_RNDN);
    mpfr_sub(w.get(), w.get(), t.get(), MPFR_RNDN);
  }
  if (!converged) throw PrecisionError("lambert_w: iteration did not settle");

  const double wd = mpfr_get_d(w.get(), MPFR_RNDN);

  // Re-check the rounded result against the full budget with an enclosure of
  // |wd e^{wd} - x|; wd >= 0 keeps the directions valid.
  MpFloat rlo(p), rhi(p);
  mpfr_set_d(rlo.get(), wd, MPFR_RNDD);
  mpfr_exp(rlo.get(), rlo.get(), MPFR_RNDD);
  mpfr_mul_d(rlo.get(), rlo.get(), wd, MPFR_RNDD);
  mpfr_sub_d(rlo.get(), rlo.get(), x, MPFR_RNDD);
  mpfr_set_d(rhi.get(), wd, MPFR_RNDU);
  mpfr_exp(rhi.get(), rhi.get(), MPFR_RNDU);
  mpfr_mul_d(rhi.get(), rhi.get(), wd, MPFR_RNDU);
  mpfr_sub_d(rhi.get(), rhi.get(), x, MPFR_RNDU);
  mpfr_abs(rlo.get(), rlo.get(), MPFR_RNDU);
  mpfr_abs(rhi.get(), rhi.get(), MPFR_RNDU);
  mpfr_mul_2ui(goal.get(), goal.get(), 1, MPFR_RNDD);  // full tolerance
  if (mpfr_cmp(rlo.get(), goal.get()) > 0 || mpfr_cmp(rhi.get(), goal.get()) > 0) {
    throw PrecisionError("lambert_w: tolerance finer than a double result");
  }
  return wd;
}

CertifiedInt floor_exp_w(long n) {
  if (n < 1) throw UsageError("floor_exp_w: n must be >= 1");

  long k = std::llround(std::exp(lambert_w(static_cast<double>(n), 1e-9)));
  if (k < 1) k = 1;

  unsigned max_bits = 0;
  const auto le_n = [&](long kk) {
    unsigned b = 0;
    const bool r = sign_n_minus_k_ln_k(kk, n, &b) > 0;
    max_bits = std::max(max_bits, b);
    return r;
  };
  while (le_n(k + 1)) ++k;
  while (k > 1 && !le_n(k)) --k;
  return {k, max_bits};
}

}  // namespace stirmode
