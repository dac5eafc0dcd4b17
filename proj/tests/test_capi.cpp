// Exercises the shared-library surface exactly as an external C consumer
// would: only stirmode.h, no internal headers.
#include "stirmode.h"

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string r = s;
  sm_string_free(s);
  return r;
}

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::strlen(sm_version()) > 0);
  CHECK(sm_max_row_n() == 5000);
}

TEST_CASE("rows through the C boundary") {
  sm_row* row = nullptr;
  REQUIRE(sm_row_compute(4, &row) == SM_OK);
  CHECK(sm_row_n(row) == 4);
  CHECK(take(sm_row_entry(row, 1)) == "1");
  CHECK(take(sm_row_entry(row, 2)) == "7");
  CHECK(take(sm_row_entry(row, 3)) == "6");
  CHECK(take(sm_row_entry(row, 4)) == "1");
  CHECK(take(sm_row_entry(row, 0)) == "0");
  CHECK(take(sm_row_entry(row, 9)) == "0");
  CHECK(take(sm_row_bell(row)) == "15");
  long idx = 0;
  int ties = -1;
  REQUIRE(sm_row_mode(row, &idx, &ties) == SM_OK);
  CHECK(idx == 2);  // S(4,2) = 7 is the maximum
  CHECK(ties == 0);
  sm_row_free(row);
}

TEST_CASE("error codes and last_error") {
  sm_row* row = nullptr;
  CHECK(sm_row_compute(0, &row) == SM_ERR_LIMIT);
  CHECK(std::strlen(sm_last_error()) > 0);
  CHECK(sm_row_compute(sm_max_row_n() + 1, &row) == SM_ERR_LIMIT);
  CHECK(sm_set_max_row_n(0) == SM_ERR_USAGE);

  char* out = nullptr;
  CHECK(sm_stirling(0, 1, &out) == SM_ERR_LIMIT);
  CHECK(sm_stirling(5, 2, nullptr) == SM_ERR_USAGE);

  double w = 0;
  CHECK(sm_lambert_w(-1.0, 1e-9, &w) == SM_ERR_USAGE);
  CHECK(sm_lambert_w(1.0, 0.0, &w) == SM_ERR_USAGE);

  sm_kn_info info;
  CHECK(sm_kn(1, &info) == SM_ERR_USAGE);

  sm_verify_run* run = nullptr;
  CHECK(sm_verify_range(1, 5, &run) == SM_ERR_USAGE);
}

TEST_CASE("max row override") {
  REQUIRE(sm_set_max_row_n(64) == SM_OK);
  sm_row* row = nullptr;
  CHECK(sm_row_compute(65, &row) == SM_ERR_LIMIT);
  REQUIRE(sm_row_compute(64, &row) == SM_OK);
  sm_row_free(row);
  REQUIRE(sm_set_max_row_n(5000) == SM_OK);
}

TEST_CASE("single values") {
  char* out = nullptr;
  REQUIRE(sm_stirling(10, 5, &out) == SM_OK);
  CHECK(take(out) == "42525");
  REQUIRE(sm_stirling(7, 0, &out) == SM_OK);
  CHECK(take(out) == "0");
  REQUIRE(sm_bell(10, &out) == SM_OK);
  CHECK(take(out) == "115975");
}

TEST_CASE("lambert and floor") {
  double w = 0;
  REQUIRE(sm_lambert_w(10.0, 1e-12, &w) == SM_OK);
  CHECK(w == doctest::Approx(1.7455280027).epsilon(1e-9));
  long v = 0;
  unsigned bits = 0;
  REQUIRE(sm_floor_exp_w(100, &v, &bits) == SM_OK);
  CHECK(v == 29);
  CHECK(bits >= 64);
}

TEST_CASE("kn info") {
  sm_kn_info info;
  REQUIRE(sm_kn(10, &info) == SM_OK);
  CHECK(info.k_n == 5);
  CHECK(info.ties_right == 0);
  CHECK(info.k_star == 5);
  CHECK(info.corollary_lo == 4);
  CHECK(info.corollary_hi == 6);
  CHECK(info.branch_greater == 0);

  REQUIRE(sm_kn(2, &info) == SM_OK);
  CHECK(info.k_n == 1);
  CHECK(info.ties_right == 1);
  CHECK(info.k_star == 2);
  CHECK(info.corollary_lo == 1);
  CHECK(info.corollary_hi == 2);
}

TEST_CASE("verify run") {
  sm_verify_run* run = nullptr;
  REQUIRE(sm_verify_range(2, 80, &run) == SM_OK);
  REQUIRE(sm_verify_run_size(run) == 79);
  const sm_check_report* first = sm_verify_run_report(run, 0);
  REQUIRE(first != nullptr);
  CHECK(first->n == 2);
  CHECK(first->equality_event == 1);
  CHECK(first->wegner_upper_ok == -1);
  const sm_check_report* last = sm_verify_run_report(run, 78);
  REQUIRE(last != nullptr);
  CHECK(last->n == 80);
  CHECK(last->theorem1_ok == 1);
  CHECK(last->wegner_lower_ok == 1);
  CHECK(sm_verify_run_report(run, 79) == nullptr);

  sm_verify_summary s;
  REQUIRE(sm_verify_run_summary(run, &s) == SM_OK);
  CHECK(s.theorem1_failures == 0);
  CHECK(s.cp_failures == 0);
  CHECK(s.equality_count == 1);
  CHECK(s.equality_only_at_2 == 1);

  long eq[4] = {0, 0, 0, 0};
  CHECK(sm_verify_run_equality_ns(run, eq, 4) == 1);
  CHECK(eq[0] == 2);
  sm_verify_run_free(run);
}

TEST_CASE("implications run") {
  sm_implications_run* run = nullptr;
  REQUIRE(sm_verify_implications(3, 50, &run) == SM_OK);
  CHECK(sm_implications_run_size(run) == 48);
  CHECK(sm_implications_upper_failures(run) == 0);
  CHECK(sm_implications_lower_failures(run) == 0);
  const sm_implication_report* r = sm_implications_run_report(run, 0);
  REQUIRE(r != nullptr);
  CHECK(r->n == 3);
  CHECK(r->upper_counted == 0);
  sm_implications_run_free(run);
}

TEST_CASE("conjecture search") {
  sm_conjecture_report rep;
  char* witness = reinterpret_cast<char*>(0x1);  // must be cleared by the call
  REQUIRE(sm_conjecture_search(3, 300, 11, 12, &rep, &witness) == SM_OK);
  CHECK(rep.evaluated_trials == 300);
  CHECK(rep.evaluated_grid > 0);
  CHECK(rep.max_shift <= 1);
  CHECK(rep.witness_found == 0);
  CHECK(witness == nullptr);

  CHECK(sm_conjecture_search(0, 10, 1, 0, &rep, nullptr) == SM_ERR_USAGE);
}
