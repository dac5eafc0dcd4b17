#include "poisson_binomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace stirmode {

namespace {

std::string format_probs(const std::vector<Rational>& probs) {
  std::ostringstream os;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (i) os << ",";
    os << probs[i];
  }
  return os.str();
}

}  // namespace

BernoulliVector::BernoulliVector(std::vector<Rational> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw UsageError("BernoulliVector: at least one probability");
  for (auto& p : p_) {
    p.canonicalize();
    if (p < 0 || p > 1) {
      throw UsageError("BernoulliVector: probability outside [0,1]: " +
                       p.get_str());
    }
  }
}

RationalPMF::RationalPMF(std::vector<Rational> weights) {
  if (weights.empty()) throw UsageError("RationalPMF: empty weights");
  Rational sum = 0;
  for (auto& w : weights) {
    w.canonicalize();
    if (w < 0) throw UsageError("RationalPMF: negative weight");
    sum += w;
  }
  if (sum != 1) throw UsageError("RationalPMF: weights must sum to exactly 1");
  w_ = std::move(weights);
}

RationalPMF RationalPMF::unchecked(std::vector<Rational> weights) {
  RationalPMF pmf;
  pmf.w_ = std::move(weights);
  return pmf;
}

bool RationalPMF::log_concave() const {
  for (size_t i = 0; i + 2 < w_.size(); ++i) {
    if (w_[i + 1] * w_[i + 1] < w_[i] * w_[i + 2]) return false;
  }
  return true;
}

RationalPMF pb_pmf(const BernoulliVector& b) {
  std::vector<Rational> c{Rational(1)};
  std::vector<Rational> next;
  for (const auto& p : b.probs()) {
    const Rational q = 1 - p;
    next.assign(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * q;
      next[i + 1] += c[i] * p;
    }
    c.swap(next);
  }
  return RationalPMF::unchecked(std::move(c));
}

Rational pb_mean(const BernoulliVector& b) {
  Rational sum = 0;
  for (const auto& p : b.probs()) sum += p;
  return sum;
}

std::vector<long> modes_of(const RationalPMF& pmf) {
  const auto& w = pmf.weights();
  size_t best = 0;
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[best]) best = i;
  }
  std::vector<long> modes;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == w[best]) modes.push_back(static_cast<long>(i));
  }
  return modes;
}

DarrochReport darroch_check(const BernoulliVector& b) {
  DarrochReport rep;
  rep.mean = pb_mean(b);
  rep.modes = modes_of(pb_pmf(b));
  rep.ok = true;
  for (long m : rep.modes) {
    Rational d = Rational(m) - rep.mean;
    if (d < 0) d = -d;
    if (!(d < 1)) {
      rep.ok = false;
      break;
    }
  }
  return rep;
}

std::vector<Rational> poisson1_shift_weights(const RationalPMF& pmf, long k_max) {
  if (k_max < 0) throw UsageError("poisson1_shift_weights: k_max >= 0 required");
  const auto& c = pmf.weights();
  const long n = pmf.support_max();
  std::vector<mpz_class> fact(static_cast<size_t>(k_max) + 1);
  fact[0] = 1;
  for (long j = 1; j <= k_max; ++j) fact[j] = fact[j - 1] * j;
  std::vector<Rational> g(static_cast<size_t>(k_max) + 1, Rational(0));
  for (long k = 0; k <= k_max; ++k) {
    Rational s = 0;
    for (long j = 0; j <= std::min(k, n); ++j) {
      if (sgn(c[j]) == 0) continue;
      s += c[j] / Rational(fact[k - j]);
    }
    g[k] = s;
  }
  return g;
}

M1Result shifted_mode(const RationalPMF& pmf) {
  if (!pmf.log_concave()) {
    throw UsageError("shifted_mode: pmf must be log-concave");
  }
  const auto& c = pmf.weights();
  const long n = pmf.support_max();
  const long cap = n + 64;
  std::vector<mpz_class> fact{mpz_class(1)};
  const auto g_at = [&](long k) {
    while (static_cast<long>(fact.size()) <= k) {
      fact.push_back(fact.back() * static_cast<long>(fact.size()));
    }
    Rational s = 0;
    for (long j = 0; j <= std::min(k, n); ++j) {
      if (sgn(c[j]) == 0) continue;
      s += c[j] / Rational(fact[k - j]);
    }
    return s;
  };

  Rational best = g_at(0);
  Rational prev = best;
  long best_k = 0;
  bool unique = true;
  for (long k = 1; k <= cap; ++k) {
    Rational cur = g_at(k);
    if (cur > best) {
      best = cur;
      best_k = k;
      unique = true;
    } else if (cur == best) {
      unique = false;
    }
    // g is log-concave: once strictly decreasing it stays strictly
    // decreasing, so the maximum is behind us.
    if (cur < prev) return {best_k, unique};
    prev = std::move(cur);
  }
  throw PrecisionError("shifted_mode: no strict decrease within scan cap");
}

namespace {

ShiftedModeReport eval_modes(const RationalPMF& pmf, const std::vector<Rational>* probs) {
  const long m0 = modes_of(pmf).front();
  const M1Result m1r = shifted_mode(pmf);
  const long shift = m1r.m1 - m0;
  if (m1r.unique && (shift < 0 || shift > 2)) {
    std::string msg = "mode shift outside [0,2]: m0=" + std::to_string(m0) +
                      ", m1=" + std::to_string(m1r.m1);
    if (probs) msg += ", probs=" + format_probs(*probs);
    throw TheoremViolation(msg);
  }
  ShiftedModeReport rep;
  rep.m0 = m0;
  rep.m1 = m1r.m1;
  rep.m1_unique = m1r.unique;
  rep.shift = shift;
  return rep;
}

}  // namespace

ShiftedModeReport prop1_check(const BernoulliVector& b) {
  return eval_modes(pb_pmf(b), &b.probs());
}

bool section3_identity_check(const BernoulliVector& b) {
  const RationalPMF pmf = pb_pmf(b);
  const auto& c = pmf.weights();
  const long n = pmf.support_max();
  const long m0 = modes_of(pmf).front();
  const auto g = poisson1_shift_weights(pmf, m0 + 2);
  const Rational lhs = g[m0 + 1] - g[m0 + 2];
  Rational rhs = 0;
  for (long k = 0; k <= m0; ++k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m0 - k));
    rhs += c[k] / Rational(f * (m0 + 2 - k));
  }
  if (m0 + 2 <= n) rhs -= c[m0 + 2];
  return lhs == rhs;
}

NewtonCoefficientReport newton_coefficient_check(const BernoulliVector& b) {
  const long n = b.size();
  if (n < 2) throw UsageError("newton_coefficient_check: n >= 2 required");
  const RationalPMF pmf = pb_pmf(b);
  const auto& c = pmf.weights();
  NewtonCoefficientReport rep{true, true};
  for (long i = 0; i + 2 <= n; ++i) {
    const Rational lhs = c[i + 1] * c[i + 1] * Rational((i + 1) * (n - i - 1));
    const Rational rhs = c[i] * c[i + 2] * Rational((i + 2) * (n - i));
    if (lhs < rhs) {
      rep.newton_ok = false;
      break;
    }
  }
  if (n <= 5) {
    for (long i = 0; i + 2 <= n; ++i) {
      if (c[i + 1] * c[i + 1] < 2 * c[i] * c[i + 2]) {
        rep.small_n_factor2_ok = false;
        break;
      }
    }
    const long m0 = modes_of(pmf).front();
    const Rational cm2 = (m0 + 2 <= n) ? c[m0 + 2] : Rational(0);
    if (c[m0] < 2 * cm2) rep.small_n_factor2_ok = false;
  }
  return rep;
}

namespace {

// SplitMix64; every trial stream is a pure function of (seed, index).
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

std::uint64_t trial_state(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g{seed ^ (0xD1B54A32D192ED03ull * (index + 1))};
  return g.next();
}

}  // namespace

ConjectureSearchReport conjecture_search(long n, long trials, std::uint64_t seed,
                                         long grid) {
  if (n < 1) throw UsageError("conjecture_search: n >= 1 required");
  if (trials < 1) throw UsageError("conjecture_search: trials >= 1 required");
  if (grid < 0) throw UsageError("conjecture_search: grid resolution >= 1 required");

  ConjectureSearchReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.grid = grid;

  const auto tally = [&rep](const ShiftedModeReport& r,
                            const std::vector<Rational>& probs) {
    if (!r.m1_unique) {
      ++rep.skipped_nonunique;
      return;
    }
    ++rep.shift_counts[r.shift];
    if (static_cast<int>(r.shift) > rep.max_shift) rep.max_shift = static_cast<int>(r.shift);
    if (r.shift == 2 && !rep.witness) rep.witness = probs;
  };

  std::vector<Rational> probs(static_cast<size_t>(n));
  for (long t = 0; t < trials; ++t) {
    SplitMix64 g{trial_state(seed, static_cast<std::uint64_t>(t))};
    for (auto& p : probs) {
      const long num = static_cast<long>(g.next() % (kRandomDenominator + 1));
      p = Rational(num, kRandomDenominator);
      p.canonicalize();
    }
    tally(eval_modes(pb_pmf(BernoulliVector(probs)), &probs), probs);
    ++rep.evaluated_trials;
  }

  if (grid > 0) {
    double points = 1;  // multisets: C(grid + n, n)
    for (long i = 1; i <= n; ++i) points *= static_cast<double>(grid + i) / i;
    if (points > 2.0e9) {
      throw UsageError("conjecture_search: grid sweep of ~" +
                       std::to_string(static_cast<long long>(points)) +
                       " points is too large");
    }
    std::vector<Rational> chosen;
    chosen.reserve(static_cast<size_t>(n));
    // pmfs[d] = pmf of the first d chosen probabilities
    std::vector<std::vector<Rational>> pmfs{{Rational(1)}};
    std::function<void(long)> sweep = [&](long lo) {
      if (static_cast<long>(chosen.size()) == n) {
        tally(eval_modes(RationalPMF::unchecked(pmfs.back()), &chosen), chosen);
        ++rep.evaluated_grid;
        return;
      }
      for (long a = lo; a <= grid; ++a) {
        Rational p(a, grid);
        p.canonicalize();
        const Rational q = 1 - p;
        const auto& c = pmfs.back();
        std::vector<Rational> d(c.size() + 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i) {
          d[i] += c[i] * q;
          d[i + 1] += c[i] * p;
        }
        pmfs.push_back(std::move(d));
        chosen.push_back(std::move(p));
        sweep(a);
        chosen.pop_back();
        pmfs.pop_back();
      }
    };
    sweep(0);
  }

  return rep;
}

}  // namespace stirmode
