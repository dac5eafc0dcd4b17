#pragma once

#include <mpfr.h>

#include <functional>

namespace stirmode {

inline constexpr mpfr_prec_t kStartPrecisionBits = 64;
inline constexpr mpfr_prec_t kMaxPrecisionBits = 4096;

// RAII mpfr_t. Value is unset after construction; assign before reading.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpFloat() { mpfr_clear(v_); }
  MpFloat(const MpFloat&) = delete;
  MpFloat& operator=(const MpFloat&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

using EncloseFn = std::function<void(mpfr_prec_t, mpfr_ptr lo, mpfr_ptr hi)>;

// Sign of an expression known to be nonzero. `enclose` fills [lo, hi] with a
// directed-rounding enclosure at the given precision; the precision doubles
// until the enclosure excludes zero. Throws PrecisionError at the cap.
// bits_out, when non-null, receives the deciding precision.
int certified_sign(const EncloseFn& enclose, unsigned* bits_out = nullptr,
                   mpfr_prec_t start = kStartPrecisionBits,
                   mpfr_prec_t cap = kMaxPrecisionBits);

// Sign of n - k*ln(k) for k >= 1, n >= 1. Never zero: k*ln k is irrational
// for k >= 2 and equals 0 for k = 1.
int sign_n_minus_k_ln_k(long k, long n, unsigned* bits_out = nullptr);

// K < n / (ln n - ln ln n), the classical upper bound shape. K >= 0, n >= 2.
bool wegner_upper_holds(long K, long n, unsigned* bits_out = nullptr);

// K > (n / ln n) * (1 + (ln ln n - 1) / ln n), the lower bound shape,
// decided as K * (ln n)^2 > n * (ln n + ln ln n - 1). K >= 0, n >= 2.
bool wegner_lower_holds(long K, long n, unsigned* bits_out = nullptr);

}  // namespace stirmode
