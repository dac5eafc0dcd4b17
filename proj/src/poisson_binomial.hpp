#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace stirmode {

using Rational = mpq_class;

// Random draws use numerators over this denominator, so every downstream
// pmf stays exact and small.
inline constexpr long kRandomDenominator = 10000;

// Success probabilities of independent Bernoulli variables, each in [0,1].
class BernoulliVector {
 public:
  explicit BernoulliVector(std::vector<Rational> probs);
  const std::vector<Rational>& probs() const { return p_; }
  long size() const { return static_cast<long>(p_.size()); }

 private:
  std::vector<Rational> p_;
};

// Finitely supported pmf with exact rational weights summing to 1.
class RationalPMF {
 public:
  explicit RationalPMF(std::vector<Rational> weights);
  // For internal producers whose output is valid by construction.
  static RationalPMF unchecked(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return w_; }
  long support_max() const { return static_cast<long>(w_.size()) - 1; }
  bool log_concave() const;  // w_{i+1}^2 >= w_i * w_{i+2} for interior i

 private:
  RationalPMF() = default;
  std::vector<Rational> w_;
};

// Exact pmf of the sum of independent Bernoullis, by iterated two-point
// convolution; length probs.size() + 1.
RationalPMF pb_pmf(const BernoulliVector& b);

Rational pb_mean(const BernoulliVector& b);

// All indices attaining the exact maximum weight, ascending.
std::vector<long> modes_of(const RationalPMF& pmf);

// Darroch's rule: every mode m of the sum satisfies |m - mean| < 1.
struct DarrochReport {
  bool ok = false;
  Rational mean;
  std::vector<long> modes;
};
DarrochReport darroch_check(const BernoulliVector& b);

// g(k) = e * Pr(S + Z = k) = sum_{j<=min(k,n)} c_j / (k-j)! for Z ~ Poisson(1)
// independent of S; the dropped factor 1/e does not move the argmax.
std::vector<Rational> poisson1_shift_weights(const RationalPMF& pmf, long k_max);

// Leftmost mode of S + Z. Requires a log-concave pmf (then g is log-concave,
// so the scan may stop at the first strict decrease).
struct M1Result {
  long m1 = 0;
  bool unique = false;
};
M1Result shifted_mode(const RationalPMF& pmf);

struct ShiftedModeReport {
  long m0 = 0;
  long m1 = 0;
  bool m1_unique = false;
  long shift = 0;  // m1 - m0
};

// m0, m1 and their gap; asserts 0 <= shift <= 2 whenever m1 is unique and
// throws TheoremViolation with the witness otherwise.
ShiftedModeReport prop1_check(const BernoulliVector& b);

// e[Pr(S+Z=m0+1) - Pr(S+Z=m0+2)] == sum_{k<=m0} c_k/((m0-k)!(m0+2-k)) - c_{m0+2},
// exactly.
bool section3_identity_check(const BernoulliVector& b);

// Newton's inequality on c_i = Pr(S=i):
//   c_{i+1}^2 >= ((i+2)(n-i))/((i+1)(n-i-1)) * c_i * c_{i+2},
// cross-multiplied exactly; for n <= 5 additionally the factor-2 chain
// c_{i+1}^2 >= 2 c_i c_{i+2} and c_{m0} >= 2 c_{m0+2}.
struct NewtonCoefficientReport {
  bool newton_ok = false;
  bool small_n_factor2_ok = false;  // vacuously true for n > 5
  bool ok() const { return newton_ok && small_n_factor2_ok; }
};
NewtonCoefficientReport newton_coefficient_check(const BernoulliVector& b);

// Randomized (and optionally gridded) search for a mode shift of 2, which
// would contradict the conjectured bound m1 <= m0 + 1. Each trial's stream
// derives from (seed, trial index), so results do not depend on evaluation
// order. The grid sweep enumerates nondecreasing tuples over {0..grid}/grid:
// the pmf is permutation-invariant, so unordered tuples cover all of them.
struct ConjectureSearchReport {
  long n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  long grid = 0;  // 0 = no grid sweep
  long evaluated_trials = 0;
  long evaluated_grid = 0;
  long skipped_nonunique = 0;
  long shift_counts[3] = {0, 0, 0};
  int max_shift = 0;  // over unique-m1 evaluations
  std::optional<std::vector<Rational>> witness;  // probs reaching shift 2
};
ConjectureSearchReport conjecture_search(long n, long trials, std::uint64_t seed,
                                         long grid = 0);

}  // namespace stirmode
