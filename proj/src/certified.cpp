#include "certified.hpp"

#include <string>

#include "errors.hpp"

namespace stirmode {

int certified_sign(const EncloseFn& enclose, unsigned* bits_out,
                   mpfr_prec_t start, mpfr_prec_t cap) {
  for (mpfr_prec_t p = start; p <= cap; p *= 2) {
    MpFloat lo(p), hi(p);
    enclose(p, lo.get(), hi.get());
    if (mpfr_sgn(lo.get()) > 0) {
      if (bits_out) *bits_out = static_cast<unsigned>(p);
      return 1;
    }
    if (mpfr_sgn(hi.get()) < 0) {
      if (bits_out) *bits_out = static_cast<unsigned>(p);
      return -1;
    }
  }
  throw PrecisionError("certified_sign: enclosure still straddles zero at " +
                       std::to_string(cap) + " bits");
}

namespace {

// [lo, hi] enclosing ln(m) for an integer m >= 1.
void enclose_ln(long m, mpfr_ptr lo, mpfr_ptr hi) {
  mpfr_set_si(lo, m, MPFR_RNDD);
  mpfr_log(lo, lo, MPFR_RNDD);
  mpfr_set_si(hi, m, MPFR_RNDU);
  mpfr_log(hi, hi, MPFR_RNDU);
}

}  // namespace

int sign_n_minus_k_ln_k(long k, long n, unsigned* bits_out) {
  if (k < 1 || n < 1) throw UsageError("sign_n_minus_k_ln_k: k, n must be >= 1");
  if (k == 1) {
    // k*ln k = 0 exactly
    if (bits_out) *bits_out = static_cast<unsigned>(kStartPrecisionBits);
    return 1;
  }
  return certified_sign(
      [k, n](mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
        MpFloat a(p), b(p);
        enclose_ln(k, a.get(), b.get());
        mpfr_mul_si(a.get(), a.get(), k, MPFR_RNDD);  // ln k > 0, k > 0
        mpfr_mul_si(b.get(), b.get(), k, MPFR_RNDU);
        mpfr_si_sub(lo, n, b.get(), MPFR_RNDD);
        mpfr_si_sub(hi, n, a.get(), MPFR_RNDU);
      },
      bits_out);
}

bool wegner_upper_holds(long K, long n, unsigned* bits_out) {
  if (K < 0 || n < 2) throw UsageError("wegner_upper_holds: need K >= 0, n >= 2");
  // sign of n - K * (ln n - ln ln n)
  return certified_sign(
             [K, n](mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
               MpFloat l1d(p), l1u(p), l2d(p), l2u(p), dd(p), du(p);
               enclose_ln(n, l1d.get(), l1u.get());
               mpfr_log(l2d.get(), l1d.get(), MPFR_RNDD);  // ln is increasing
               mpfr_log(l2u.get(), l1u.get(), MPFR_RNDU);
               mpfr_sub(dd.get(), l1d.get(), l2u.get(), MPFR_RNDD);
               mpfr_sub(du.get(), l1u.get(), l2d.get(), MPFR_RNDU);
               mpfr_mul_si(dd.get(), dd.get(), K, MPFR_RNDD);  // K >= 0
               mpfr_mul_si(du.get(), du.get(), K, MPFR_RNDU);
               mpfr_si_sub(lo, n, du.get(), MPFR_RNDD);
               mpfr_si_sub(hi, n, dd.get(), MPFR_RNDU);
             },
             bits_out) > 0;
}

bool wegner_lower_holds(long K, long n, unsigned* bits_out) {
  if (K < 0 || n < 2) throw UsageError("wegner_lower_holds: need K >= 0, n >= 2");
  // sign of K * (ln n)^2 - n * (ln n + ln ln n - 1)
  return certified_sign(
             [K, n](mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
               MpFloat l1d(p), l1u(p), l2d(p), l2u(p);
               MpFloat ad(p), au(p), bd(p), bu(p);
               enclose_ln(n, l1d.get(), l1u.get());
               mpfr_log(l2d.get(), l1d.get(), MPFR_RNDD);
               mpfr_log(l2u.get(), l1u.get(), MPFR_RNDU);
               // A = K * (ln n)^2; ln n > 0 for n >= 2
               mpfr_mul(ad.get(), l1d.get(), l1d.get(), MPFR_RNDD);
               mpfr_mul(au.get(), l1u.get(), l1u.get(), MPFR_RNDU);
               mpfr_mul_si(ad.get(), ad.get(), K, MPFR_RNDD);
               mpfr_mul_si(au.get(), au.get(), K, MPFR_RNDU);
               // B = n * (ln n + ln ln n - 1); n > 0
               mpfr_add(bd.get(), l1d.get(), l2d.get(), MPFR_RNDD);
               mpfr_sub_ui(bd.get(), bd.get(), 1, MPFR_RNDD);
               mpfr_mul_si(bd.get(), bd.get(), n, MPFR_RNDD);
               mpfr_add(bu.get(), l1u.get(), l2u.get(), MPFR_RNDU);
               mpfr_sub_ui(bu.get(), bu.get(), 1, MPFR_RNDU);
               mpfr_mul_si(bu.get(), bu.get(), n, MPFR_RNDU);
               mpfr_sub(lo, ad.get(), bu.get(), MPFR_RNDD);
               mpfr_sub(hi, au.get(), bd.get(), MPFR_RNDU);
             },
             bits_out) > 0;
}

}  // namespace stirmode
