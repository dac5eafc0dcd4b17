// stirmode command-line front end. Talks to the core strictly through the
// C API in stirmode.h; data goes to stdout (or --out), diagnostics to stderr.
//
// Exit codes: 0 all selected checks pass; 1 a mathematical check failed or a
// counterexample was found; 2 usage error; 3 internal precision diagnostic.
#include "stirmode.h"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDiagnostic = 3;

int exit_code_for(sm_status st) {
  switch (st) {
    case SM_OK:
      return kExitPass;
    case SM_ERR_USAGE:
    case SM_ERR_LIMIT:
      return kExitUsage;
    case SM_ERR_THEOREM:
      return kExitCheckFailed;
    case SM_ERR_PRECISION:
    case SM_ERR_INTERNAL:
    default:
      return kExitDiagnostic;
  }
}

[[nodiscard]] int fail(sm_status st, const std::string& context) {
  std::cerr << "stirmode: " << context << ": " << sm_last_error() << "\n";
  return exit_code_for(st);
}

// RFC 3339 UTC; honors SOURCE_DATE_EPOCH so identical invocations can
// produce identical bytes.
std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(e, &end, 10);
    if (end && *end == '\0') t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_document(const std::string& command, json parameters) {
  json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["generated_at"] = timestamp_utc();
  return doc;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "stirmode: cannot open output file " << out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitPass;
}

json tri_json(int v) {
  if (v < 0) return nullptr;
  return v != 0;
}

std::string tri_csv(int v) { return v < 0 ? "" : (v ? "true" : "false"); }

std::string owned_string(char* s) {
  std::string r = s ? s : "";
  sm_string_free(s);
  return r;
}

// ---------------------------------------------------------------- stirling

int cmd_stirling(long n, std::optional<long> k, const std::string& format,
                 const std::string& out_path) {
  if (format == "json") {
    json result;
    result["n"] = n;
    if (k) {
      char* v = nullptr;
      if (sm_status st = sm_stirling(n, *k, &v); st != SM_OK) return fail(st, "stirling");
      result["k"] = *k;
      result["value"] = owned_string(v);
    } else {
      sm_row* row = nullptr;
      if (sm_status st = sm_row_compute(n, &row); st != SM_OK) return fail(st, "stirling");
      json values = json::array();
      for (long i = 1; i <= sm_row_n(row); ++i) {
        values.push_back(owned_string(sm_row_entry(row, i)));
      }
      result["row"] = std::move(values);
      result["bell"] = owned_string(sm_row_bell(row));
      sm_row_free(row);
    }
    json doc = make_document("stirling", {{"n", n}, {"k", k ? json(*k) : json(nullptr)}});
    doc["results"] = json::array({std::move(result)});
    return write_output(doc.dump(2) + "\n", out_path);
  }

  std::ostringstream os;
  if (k) {
    char* v = nullptr;
    if (sm_status st = sm_stirling(n, *k, &v); st != SM_OK) return fail(st, "stirling");
    os << owned_string(v) << "\n";
  } else {
    sm_row* row = nullptr;
    if (sm_status st = sm_row_compute(n, &row); st != SM_OK) return fail(st, "stirling");
    for (long i = 1; i <= sm_row_n(row); ++i) {
      if (i > 1) os << " ";
      os << owned_string(sm_row_entry(row, i));
    }
    os << "\n";
    sm_row_free(row);
  }
  return write_output(os.str(), out_path);
}

// ---------------------------------------------------------------------- kn

int cmd_kn(long n, const std::string& format, const std::string& out_path) {
  sm_kn_info info;
  if (sm_status st = sm_kn(n, &info); st != SM_OK) return fail(st, "kn");

  if (format == "json") {
    json result = {
        {"n", info.n},
        {"K_n", info.k_n},
        {"ties_right", info.ties_right != 0},
        {"k_star", info.k_star},
        {"corollary_lo", info.corollary_lo},
        {"corollary_hi", info.corollary_hi},
        {"branch_greater", info.branch_greater != 0},
    };
    json doc = make_document("kn", {{"n", n}});
    doc["results"] = json::array({std::move(result)});
    return write_output(doc.dump(2) + "\n", out_path);
  }

  std::ostringstream os;
  os << "K_n=" << info.k_n << ", k_star=" << info.k_star << ", interval=["
     << info.corollary_lo << "," << info.corollary_hi << "], ties="
     << (info.ties_right ? "true" : "false") << "\n";
  return write_output(os.str(), out_path);
}

// ------------------------------------------------------------------ verify

const std::set<std::string> kRowChecks = {"theorem1", "cp",           "corollary",
                                          "equality", "wegner_upper", "wegner_lower"};
const std::set<std::string> kImplicationChecks = {"implication_upper",
                                                  "implication_lower"};

std::optional<std::set<std::string>> parse_checks(const std::string& list) {
  std::set<std::string> checks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      checks.insert(kRowChecks.begin(), kRowChecks.end());
      checks.insert(kImplicationChecks.begin(), kImplicationChecks.end());
    } else if (kRowChecks.count(item) || kImplicationChecks.count(item)) {
      checks.insert(item);
    } else {
      return std::nullopt;
    }
  }
  if (checks.empty()) return std::nullopt;
  return checks;
}

json report_to_json(const sm_check_report& r) {
  return {
      {"n", r.n},
      {"K_n", r.k_n},
      {"ties_right", r.ties_right != 0},
      {"k_star", r.k_star},
      {"corollary_lo", r.corollary_lo},
      {"corollary_hi", r.corollary_hi},
      {"branch_greater", r.branch_greater != 0},
      {"theorem1_ok", r.theorem1_ok != 0},
      {"cp_membership_ok", r.cp_membership_ok != 0},
      {"wegner_upper_ok", tri_json(r.wegner_upper_ok)},
      {"wegner_lower_ok", tri_json(r.wegner_lower_ok)},
      {"implication_upper_ok", tri_json(r.implication_upper_ok)},
      {"implication_lower_ok", tri_json(r.implication_lower_ok)},
      {"equality_event", r.equality_event != 0},
  };
}

const char* kCsvHeader =
    "n,K_n,ties_right,k_star,corollary_lo,corollary_hi,branch_greater,"
    "theorem1_ok,cp_membership_ok,wegner_upper_ok,wegner_lower_ok,"
    "implication_upper_ok,implication_lower_ok,equality_event\n";

void report_to_csv(std::ostringstream& os, const sm_check_report& r) {
  os << r.n << "," << r.k_n << "," << (r.ties_right ? "true" : "false") << ","
     << r.k_star << "," << r.corollary_lo << "," << r.corollary_hi << ","
     << (r.branch_greater ? "true" : "false") << ","
     << (r.theorem1_ok ? "true" : "false") << ","
     << (r.cp_membership_ok ? "true" : "false") << ","
     << tri_csv(r.wegner_upper_ok) << "," << tri_csv(r.wegner_lower_ok) << ","
     << tri_csv(r.implication_upper_ok) << "," << tri_csv(r.implication_lower_ok)
     << "," << (r.equality_event ? "true" : "false") << "\n";
}

int cmd_verify(long from, long to, const std::string& checks_arg,
               const std::string& format, const std::string& out_path) {
  const auto checks = parse_checks(checks_arg);
  if (!checks) {
    std::cerr << "stirmode: unknown check in --checks \"" << checks_arg << "\"\n";
    return kExitUsage;
  }
  bool needs_rows = false;
  for (const auto& c : *checks) {
    if (kRowChecks.count(c)) needs_rows = true;
  }

  json params = {{"from", from}, {"to", to}, {"checks", checks_arg}, {"format", format}};
  bool any_failure = false;
  json doc = make_document("verify", std::move(params));
  std::ostringstream csv;
  csv << kCsvHeader;

  if (needs_rows) {
    sm_verify_run* run = nullptr;
    if (sm_status st = sm_verify_range(from, to, &run); st != SM_OK) {
      return fail(st, "verify");
    }
    sm_verify_summary s;
    sm_verify_run_summary(run, &s);

    json results = json::array();
    for (size_t i = 0; i < sm_verify_run_size(run); ++i) {
      const sm_check_report* r = sm_verify_run_report(run, i);
      if (format == "csv") {
        report_to_csv(csv, *r);
      } else {
        results.push_back(report_to_json(*r));
      }
    }

    std::vector<long> eq(static_cast<size_t>(s.equality_count));
    sm_verify_run_equality_ns(run, eq.data(), eq.size());
    std::vector<long> misses(static_cast<size_t>(s.cp_informational_misses));
    sm_verify_run_cp_misses(run, misses.data(), misses.size());

    json summary;
    summary["theorem1_failures"] = s.theorem1_failures;
    summary["corollary_failures"] = s.corollary_failures;
    summary["cp_failures"] = s.cp_failures;
    summary["cp_informational_misses"] = misses;
    summary["wegner_upper_failures"] = s.wegner_upper_failures;
    summary["wegner_lower_failures"] = s.wegner_lower_failures;
    summary["implication_upper_failures"] = s.implication_upper_failures;
    summary["implication_lower_failures"] = s.implication_lower_failures;
    summary["equality_ns"] = eq;

    if (checks->count("theorem1") && s.theorem1_failures > 0) any_failure = true;
    if (checks->count("corollary") && s.corollary_failures > 0) any_failure = true;
    if (checks->count("cp") && s.cp_failures > 0) any_failure = true;
    if (checks->count("wegner_upper") && s.wegner_upper_failures > 0) any_failure = true;
    if (checks->count("wegner_lower") && s.wegner_lower_failures > 0) any_failure = true;
    if (checks->count("implication_upper") && s.implication_upper_failures > 0)
      any_failure = true;
    if (checks->count("implication_lower") && s.implication_lower_failures > 0)
      any_failure = true;
    if (checks->count("equality") && !s.equality_only_at_2) any_failure = true;

    summary["all_selected_pass"] = !any_failure;
    doc["results"] = std::move(results);
    doc["summary"] = std::move(summary);
    sm_verify_run_free(run);
  } else {
    // implication checks only: row-free scan, no row maximum involved
    sm_implications_run* run = nullptr;
    if (sm_status st = sm_verify_implications(from, to, &run); st != SM_OK) {
      return fail(st, "verify");
    }
    json results = json::array();
    for (size_t i = 0; i < sm_implications_run_size(run); ++i) {
      const sm_implication_report* r = sm_implications_run_report(run, i);
      if (format == "csv") {
        csv << r->n << ",,," << r->k_star << ",,,,,,,,"
            << tri_csv(r->upper_ok) << "," << tri_csv(r->lower_ok) << ",\n";
      } else {
        results.push_back({{"n", r->n},
                           {"k_star", r->k_star},
                           {"implication_upper_ok", tri_json(r->upper_ok)},
                           {"implication_lower_ok", tri_json(r->lower_ok)},
                           {"upper_counted", r->upper_counted != 0},
                           {"lower_counted", r->lower_counted != 0}});
      }
    }
    const long up_fail = sm_implications_upper_failures(run);
    const long low_fail = sm_implications_lower_failures(run);
    if (checks->count("implication_upper") && up_fail > 0) any_failure = true;
    if (checks->count("implication_lower") && low_fail > 0) any_failure = true;
    json summary;
    summary["implication_upper_failures"] = up_fail;
    summary["implication_lower_failures"] = low_fail;
    summary["all_selected_pass"] = !any_failure;
    doc["results"] = std::move(results);
    doc["summary"] = std::move(summary);
    sm_implications_run_free(run);
  }

  const std::string text = (format == "csv") ? csv.str() : doc.dump(2) + "\n";
  if (int rc = write_output(text, out_path); rc != kExitPass) return rc;
  return any_failure ? kExitCheckFailed : kExitPass;
}

// -------------------------------------------------------------- conjecture

int cmd_conjecture(long n, long trials, unsigned long long seed,
                   std::optional<long> grid, const std::string& out_path) {
  sm_conjecture_report rep;
  char* witness = nullptr;
  const sm_status st = sm_conjecture_search(n, trials, seed, grid.value_or(0), &rep,
                                            &witness);
  if (st != SM_OK) return fail(st, "conjecture");

  json params = {{"n", n}, {"trials", trials}, {"seed", seed},
                 {"grid", grid ? json(*grid) : json(nullptr)}};
  json doc = make_document("conjecture", std::move(params));
  json result;
  result["evaluated_trials"] = rep.evaluated_trials;
  result["evaluated_grid"] = rep.evaluated_grid;
  result["skipped_nonunique"] = rep.skipped_nonunique;
  result["shift_counts"] = {rep.shift_counts[0], rep.shift_counts[1], rep.shift_counts[2]};
  result["max_shift"] = rep.max_shift;
  result["witness_found"] = rep.witness_found != 0;
  if (rep.witness_found) {
    result["witness"] = owned_string(witness);
  } else {
    sm_string_free(witness);
    result["witness"] = nullptr;
  }
  doc["results"] = json::array({std::move(result)});

  if (rep.witness_found) {
    std::cerr << "stirmode: COUNTEREXAMPLE: shift-2 witness found: "
              << result["witness"].get<std::string>() << "\n";
  }
  if (int rc = write_output(doc.dump(2) + "\n", out_path); rc != kExitPass) return rc;
  return rep.witness_found ? kExitCheckFailed : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stirling-number mode location and bound verification"};
  app.require_subcommand(1);

  // stirling
  long st_n = 0;
  std::optional<long> st_k;
  std::string st_format = "text", st_out;
  auto* stirling_cmd = app.add_subcommand("stirling", "print S(n,k) or the whole row n");
  stirling_cmd->add_option("n", st_n, "row index, n >= 1")->required();
  stirling_cmd->add_option("k", st_k, "optional column; out-of-range prints 0");
  stirling_cmd->add_option("--format", st_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  stirling_cmd->add_option("--out", st_out, "write output to this file");

  // kn
  long kn_n = 0;
  std::string kn_format = "text", kn_out;
  auto* kn_cmd = app.add_subcommand("kn", "K_n, k_star, window and tie flag for one n");
  kn_cmd->add_option("n", kn_n, "n >= 2")->required();
  kn_cmd->add_option("--format", kn_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  kn_cmd->add_option("--out", kn_out, "write output to this file");

  // verify
  long v_from = 0, v_to = 0;
  std::string v_checks = "all", v_format = "json", v_out;
  auto* verify_cmd = app.add_subcommand("verify", "scan a range of n and check every claim");
  verify_cmd->add_option("--from", v_from, "first n (>= 2)")->required();
  verify_cmd->add_option("--to", v_to, "last n")->required();
  verify_cmd->add_option("--checks", v_checks,
                         "comma list: theorem1,cp,corollary,equality,wegner_upper,"
                         "wegner_lower,implication_upper,implication_lower,all");
  verify_cmd->add_option("--format", v_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", v_out, "write the report to this file");

  // conjecture
  long c_n = 0, c_trials = 1000;
  unsigned long long c_seed = 1;
  std::optional<long> c_grid;
  std::string c_out;
  auto* conj_cmd = app.add_subcommand(
      "conjecture", "search for a mode-shift-2 counterexample (exit 1 if found)");
  conj_cmd->add_option("--n", c_n, "number of Bernoulli terms, n >= 1")->required();
  conj_cmd->add_option("--trials", c_trials, "seeded random draws (default 1000)");
  conj_cmd->add_option("--seed", c_seed, "random seed (default 1)");
  conj_cmd->add_option("--grid", c_grid, "also sweep the full grid at resolution 1/R");
  conj_cmd->add_option("--out", c_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env = std::getenv("STIRMODE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 1) {
      std::cerr << "stirmode: invalid STIRMODE_MAX_N value \"" << env << "\"\n";
      return kExitUsage;
    }
    if (sm_status st = sm_set_max_row_n(v); st != SM_OK) {
      return fail(st, "STIRMODE_MAX_N");
    }
  }

  if (stirling_cmd->parsed()) {
    if (st_n < 1) {
      std::cerr << "stirmode: stirling requires n >= 1\n";
      return kExitUsage;
    }
    return cmd_stirling(st_n, st_k, st_format, st_out);
  }
  if (kn_cmd->parsed()) {
    if (kn_n < 2) {
      std::cerr << "stirmode: kn requires n >= 2\n";
      return kExitUsage;
    }
    return cmd_kn(kn_n, kn_format, kn_out);
  }
  if (verify_cmd->parsed()) {
    if (v_from < 2 || v_from > v_to) {
      std::cerr << "stirmode: verify requires 2 <= from <= to\n";
      return kExitUsage;
    }
    return cmd_verify(v_from, v_to, v_checks, v_format, v_out);
  }
  if (conj_cmd->parsed()) {
    if (c_n < 1 || c_trials < 1 || (c_grid && *c_grid < 1)) {
      std::cerr << "stirmode: conjecture requires n >= 1, trials >= 1, grid >= 1\n";
      return kExitUsage;
    }
    return cmd_conjecture(c_n, c_trials, c_seed, c_grid, c_out);
  }
  return kExitUsage;
}
