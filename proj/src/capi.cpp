#include "stirmode.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "dobinski.hpp"
#include "errors.hpp"
#include "lambert.hpp"
#include "poisson_binomial.hpp"
#include "stirling.hpp"
#include "verifier.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
sm_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SM_OK;
  } catch (const stirmode::UsageError& e) {
    g_last_error = e.what();
    return SM_ERR_USAGE;
  } catch (const stirmode::LimitError& e) {
    g_last_error = e.what();
    return SM_ERR_LIMIT;
  } catch (const stirmode::PrecisionError& e) {
    g_last_error = e.what();
    return SM_ERR_PRECISION;
  } catch (const stirmode::TheoremViolation& e) {
    g_last_error = e.what();
    return SM_ERR_THEOREM;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SM_ERR_INTERNAL;
  }
}

int tri(const std::optional<bool>& v) { return v ? (*v ? 1 : 0) : -1; }

sm_check_report to_c(const stirmode::CheckReport& r) {
  sm_check_report c;
  c.n = r.n;
  c.k_n = r.k_n;
  c.ties_right = r.ties_right ? 1 : 0;
  c.k_star = r.k_star;
  c.corollary_lo = r.corollary_lo;
  c.corollary_hi = r.corollary_hi;
  c.branch_greater = r.branch_greater ? 1 : 0;
  c.theorem1_ok = r.theorem1_ok ? 1 : 0;
  c.cp_membership_ok = r.cp_membership_ok ? 1 : 0;
  c.wegner_upper_ok = tri(r.wegner_upper_ok);
  c.wegner_lower_ok = tri(r.wegner_lower_ok);
  c.implication_upper_ok = tri(r.implication_upper_ok);
  c.implication_lower_ok = tri(r.implication_lower_ok);
  c.equality_event = r.equality_event ? 1 : 0;
  return c;
}

}  // namespace

struct sm_row {
  stirmode::StirlingRow row;
};

struct sm_verify_run {
  stirmode::VerifyResult result;
  std::vector<sm_check_report> c_reports;
};

struct sm_implications_run {
  stirmode::ImplicationsResult result;
  std::vector<sm_implication_report> c_reports;
};

extern "C" {

const char* sm_version(void) { return "1.0.0"; }

const char* sm_last_error(void) { return g_last_error.c_str(); }

long sm_max_row_n(void) { return stirmode::max_row_n(); }

sm_status sm_set_max_row_n(long n) {
  return guarded([&] { stirmode::set_max_row_n(n); });
}

void sm_string_free(char* s) { std::free(s); }

sm_status sm_row_compute(long n, sm_row** out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_row_compute: null output");
    *out = new sm_row{stirmode::StirlingRow(n)};
  });
}

void sm_row_free(sm_row* row) { delete row; }

long sm_row_n(const sm_row* row) { return row ? row->row.n() : 0; }

char* sm_row_entry(const sm_row* row, long k) {
  if (!row) return nullptr;
  return dup_string(row->row.at(k).get_str());
}

char* sm_row_bell(const sm_row* row) {
  if (!row) return nullptr;
  return dup_string(row->row.bell().get_str());
}

sm_status sm_row_mode(const sm_row* row, long* index, int* ties_right) {
  return guarded([&] {
    if (!row || !index) throw stirmode::UsageError("sm_row_mode: null argument");
    const stirmode::ModeLocation m = stirmode::locate_mode(row->row);
    *index = m.index;
    if (ties_right) *ties_right = m.ties_right ? 1 : 0;
  });
}

sm_status sm_stirling(long n, long k, char** out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_stirling: null output");
    *out = dup_string(stirmode::stirling(n, k).get_str());
  });
}

sm_status sm_bell(long n, char** out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_bell: null output");
    *out = dup_string(stirmode::bell_number(n).get_str());
  });
}

sm_status sm_lambert_w(double x, double tolerance, double* out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_lambert_w: null output");
    *out = stirmode::lambert_w(x, tolerance);
  });
}

sm_status sm_floor_exp_w(long n, long* value, unsigned* decision_bits) {
  return guarded([&] {
    if (!value) throw stirmode::UsageError("sm_floor_exp_w: null output");
    const stirmode::CertifiedInt c = stirmode::floor_exp_w(n);
    *value = c.value;
    if (decision_bits) *decision_bits = c.decision_precision_bits;
  });
}

sm_status sm_kn(long n, sm_kn_info* out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_kn: null output");
    if (n < 2) throw stirmode::UsageError("sm_kn: n >= 2 required");
    const stirmode::StirlingRow row(n);
    const stirmode::ModeLocation m = stirmode::locate_mode(row);
    const stirmode::BranchWindow bw = stirmode::branch_window(n);
    out->n = n;
    out->k_n = m.index;
    out->ties_right = m.ties_right ? 1 : 0;
    out->k_star = bw.k_star;
    out->corollary_lo = bw.interval.lo;
    out->corollary_hi = bw.interval.hi;
    out->branch_greater = bw.branch_greater ? 1 : 0;
  });
}

sm_status sm_verify_range(long from, long to, sm_verify_run** out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_verify_range: null output");
    auto run = std::make_unique<sm_verify_run>();
    run->result = stirmode::verify_range(from, to);
    run->c_reports.reserve(run->result.reports.size());
    for (const auto& r : run->result.reports) run->c_reports.push_back(to_c(r));
    *out = run.release();
  });
}

void sm_verify_run_free(sm_verify_run* run) { delete run; }

size_t sm_verify_run_size(const sm_verify_run* run) {
  return run ? run->c_reports.size() : 0;
}

const sm_check_report* sm_verify_run_report(const sm_verify_run* run, size_t i) {
  if (!run || i >= run->c_reports.size()) return nullptr;
  return &run->c_reports[i];
}

sm_status sm_verify_run_summary(const sm_verify_run* run, sm_verify_summary* out) {
  return guarded([&] {
    if (!run || !out) throw stirmode::UsageError("sm_verify_run_summary: null argument");
    const stirmode::VerifySummary& s = run->result.summary;
    out->from = s.from;
    out->to = s.to;
    out->theorem1_failures = s.theorem1_failures;
    out->corollary_failures = s.corollary_failures;
    out->cp_failures = s.cp_failures;
    out->cp_informational_misses = static_cast<long>(s.cp_informational_misses.size());
    out->wegner_upper_failures = s.wegner_upper_failures;
    out->wegner_lower_failures = s.wegner_lower_failures;
    out->implication_upper_failures = s.implication_upper_failures;
    out->implication_lower_failures = s.implication_lower_failures;
    out->equality_count = static_cast<long>(s.equality_ns.size());
    out->equality_only_at_2 = s.equality_only_at_2() ? 1 : 0;
  });
}

size_t sm_verify_run_equality_ns(const sm_verify_run* run, long* out, size_t cap) {
  if (!run) return 0;
  const auto& ns = run->result.summary.equality_ns;
  if (out) {
    for (size_t i = 0; i < ns.size() && i < cap; ++i) out[i] = ns[i];
  }
  return ns.size();
}

size_t sm_verify_run_cp_misses(const sm_verify_run* run, long* out, size_t cap) {
  if (!run) return 0;
  const auto& ns = run->result.summary.cp_informational_misses;
  if (out) {
    for (size_t i = 0; i < ns.size() && i < cap; ++i) out[i] = ns[i];
  }
  return ns.size();
}

sm_status sm_verify_implications(long from, long to, sm_implications_run** out) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_verify_implications: null output");
    auto run = std::make_unique<sm_implications_run>();
    run->result = stirmode::verify_implications(from, to);
    run->c_reports.reserve(run->result.checks.size());
    for (const auto& c : run->result.checks) {
      sm_implication_report r;
      r.n = c.n;
      r.k_star = c.k_star;
      r.upper_ok = tri(c.upper_ok);
      r.lower_ok = tri(c.lower_ok);
      r.upper_counted = c.upper_counted ? 1 : 0;
      r.lower_counted = c.lower_counted ? 1 : 0;
      run->c_reports.push_back(r);
    }
    *out = run.release();
  });
}

void sm_implications_run_free(sm_implications_run* run) { delete run; }

size_t sm_implications_run_size(const sm_implications_run* run) {
  return run ? run->c_reports.size() : 0;
}

const sm_implication_report* sm_implications_run_report(const sm_implications_run* run,
                                                        size_t i) {
  if (!run || i >= run->c_reports.size()) return nullptr;
  return &run->c_reports[i];
}

long sm_implications_upper_failures(const sm_implications_run* run) {
  return run ? run->result.upper_failures : 0;
}

long sm_implications_lower_failures(const sm_implications_run* run) {
  return run ? run->result.lower_failures : 0;
}

sm_status sm_conjecture_search(long n, long trials, unsigned long long seed,
                               long grid, sm_conjecture_report* out, char** witness) {
  return guarded([&] {
    if (!out) throw stirmode::UsageError("sm_conjecture_search: null output");
    const stirmode::ConjectureSearchReport rep =
        stirmode::conjecture_search(n, trials, seed, grid);
    out->n = rep.n;
    out->trials = rep.trials;
    out->seed = rep.seed;
    out->grid = rep.grid;
    out->evaluated_trials = rep.evaluated_trials;
    out->evaluated_grid = rep.evaluated_grid;
    out->skipped_nonunique = rep.skipped_nonunique;
    for (int i = 0; i < 3; ++i) out->shift_counts[i] = rep.shift_counts[i];
    out->max_shift = rep.max_shift;
    out->witness_found = rep.witness ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (rep.witness) {
        std::ostringstream os;
        for (size_t i = 0; i < rep.witness->size(); ++i) {
          if (i) os << ",";
          os << (*rep.witness)[i];
        }
        *witness = dup_string(os.str());
      }
    }
  });
}

}  // extern "C"
