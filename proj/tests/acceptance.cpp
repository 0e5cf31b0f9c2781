// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 1-8 drive the library directly; criterion 9
// shells out to the CLI binary given as argv[1].

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hoplattice/metrics.hpp"
#include "hoplattice/oracle.hpp"

using namespace hoplattice;
using json = nlohmann::ordered_json;

namespace {

std::string g_cli;

Pattern canonical_companion(std::int64_t p, int k, int r) {
  const Field F(p, k);
  return Pattern::companion(F, r, find_primitive(F, r + 1));
}

// The seven (q, r) cells with pinned optimal values; q = 4 lives in the
// quadratic extension of F_2.
const std::vector<std::tuple<std::int64_t, int, int>> kOptimalityGrid = {
    {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 1}, {3, 1, 2}, {2, 2, 1}, {5, 1, 1}};

// The full test grid: every (q, r) with q in {2, 3, 4, 5}, r in {1, 2, 3}.
const std::vector<std::pair<std::int64_t, int>> kGridFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}};

std::string describe(std::int64_t q, int r) {
  return "q=" + std::to_string(q) + " r=" + std::to_string(r);
}

// ---- criterion bodies: nullopt = pass, otherwise failure detail ----

std::optional<std::string> optimality_grid() {
  for (const auto& [p, k, r] : kOptimalityGrid) {
    const Pattern P = canonical_companion(p, k, r);
    const std::int64_t q = P.frame().n;
    const std::int64_t m = P.frame().m;
    const std::int64_t L = P.state_period();
    const MetricsReport rep = evaluate(P);
    if (rep.column_period != (checked_pow(q, r + 1) - 1) / (q - 1)) {
      return "column period " + std::to_string(rep.column_period) + " at " +
             describe(q, r);
    }
    if (rep.max_collision_ratio != Ratio::reduced(m - 1, m * q - 1) ||
        rep.max_collision_ratio != Ratio::reduced(checked_pow(q, r) - 1, L)) {
      return "collision ratio " + std::to_string(rep.max_collision_ratio.num) +
             "/" + std::to_string(rep.max_collision_ratio.den) + " at " +
             describe(q, r);
    }
    if (!(rep.max_continual == ContinualCount{r, false})) {
      return "continual count " + std::to_string(rep.max_continual.value) +
             " at " + describe(q, r);
    }
  }
  return std::nullopt;
}

std::optional<std::string> bound_compliance() {
  std::vector<Pattern> patterns;
  for (const auto& [p, k, r] : kOptimalityGrid) {
    patterns.push_back(canonical_companion(p, k, r));
  }
  for (std::int64_t n : {2, 3, 5, 7}) patterns.push_back(Pattern::linear(n, n));
  for (const Pattern& P : patterns) {
    const MetricsReport rep = evaluate(P);
    const std::string where = std::to_string(P.frame().m) + "x" +
                              std::to_string(P.frame().n) +
                              (P.kind() == Pattern::Kind::linear ? " linear"
                                                                 : " companion");
    if (rep.max_collision_ratio < rep.bounds.ratio) {
      return "ratio below bound on " + where;
    }
    if (rep.max_continual.cap_exceeded ||
        rep.max_continual.value < rep.bounds.continual.ceil_value) {
      return "continual count below bound on " + where;
    }
  }
  return std::nullopt;
}

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) {
    result.output = "popen failed";
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string cli_command(const std::string& env_prefix, const std::string& args) {
  return "env " + (env_prefix.empty() ? "-u HOPLATTICE_CAP" : env_prefix) +
         " \"" + g_cli + "\" " + args;
}

std::optional<std::string> baseline_non_optimality() {
  for (std::int64_t n : {2, 3, 5}) {
    const Pattern lin = Pattern::linear(n, n);
    const MetricsReport rep = evaluate(lin);
    if (!(rep.max_collision_ratio == Ratio{1, n})) {
      return "linear(" + std::to_string(n) + ") ratio is not 1/n";
    }
    if (!(rep.bounds.ratio == Ratio::reduced(1, n + 1)) ||
        !(rep.bounds.ratio < rep.max_collision_ratio) ||
        meets_ratio_bound(rep)) {
      return "linear(" + std::to_string(n) + ") bound comparison failed";
    }
    const std::string args = "compare --a-kind companion --a-p " +
                             std::to_string(n) +
                             " --a-k 1 --a-r 1 --b-kind linear --b-m " +
                             std::to_string(n) + " --b-n " + std::to_string(n);
    const RunResult run = run_shell(cli_command("", args));
    if (run.code != 0) {
      return "compare exited " + std::to_string(run.code) + " for n=" +
             std::to_string(n);
    }
    const json j = json::parse(run.output, nullptr, false);
    if (j.is_discarded() || j["attains_bound"]["ratio"]["a"] != true ||
        j["attains_bound"]["ratio"]["b"] != false) {
      return "compare did not flag the baseline for n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

std::optional<std::string> oracle_suite() {
  std::int64_t swept = 0;
  for (const auto& [p, k] : kGridFields) {
    const Field F(p, k);
    for (int r = 1; r <= 3; ++r) {
      for (const MonicPoly& f : all_primitive(F, r + 1)) {
        ++swept;
        for (const oracle::Verdict& v : oracle::run_all_checks(f)) {
          if (!v.pass) {
            return v.check + " failed at " + describe(F.size(), r) + ": " +
                   v.counterexample;
          }
        }
      }
    }
  }
  if (swept != 139) {
    return "swept " + std::to_string(swept) + " polynomials, expected 139";
  }
  const Field F2(2, 1);
  const MonicPoly reducible(
      F2, {F2.one(), F2.zero(), F2.one()});  // x^2 + 1 = (x+1)^2
  if (oracle::check_transitivity_columns(companion_matrix(reducible)).pass) {
    return "reducible negative control passed transitivity";
  }
  return std::nullopt;
}

std::optional<std::string> partition_bound() {
  for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const oracle::Verdict v = oracle::check_partition_bound(m, n);
    if (!v.pass) {
      return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
             v.counterexample;
    }
  }
  return std::nullopt;
}

std::optional<std::string> engine_equivalence() {
  std::vector<Pattern> patterns;
  for (const auto& [p, k] : kGridFields) {
    for (int r = 1; r <= 3; ++r) patterns.push_back(canonical_companion(p, k, r));
  }
  for (std::int64_t n : {2, 3, 5, 7}) patterns.push_back(Pattern::linear(n, n));
  for (const Pattern& P : patterns) {
    if (!(oracle::naive_metrics(P) == evaluate(P))) {
      return "engines disagree on " + std::to_string(P.frame().m) + "x" +
             std::to_string(P.frame().n) +
             (P.kind() == Pattern::Kind::linear ? " linear" : " companion");
    }
  }
  return std::nullopt;
}

std::optional<std::string> occupancy_balance() {
  for (const auto& [p, k] : kGridFields) {
    for (int r = 1; r <= 3; ++r) {
      const Pattern P = canonical_companion(p, k, r);
      if (!evaluate(P).occupancy_balanced) {
        return "unbalanced occupancy at " + describe(P.frame().n, r);
      }
    }
  }
  // Direct recount on the pinned cells.
  for (const auto& [p, k, r] : kOptimalityGrid) {
    const Pattern P = canonical_companion(p, k, r);
    for (std::int64_t t = 0; t < P.state_period(); ++t) {
      for (std::int64_t c : occupancy(P, t)) {
        if (c != P.frame().m) {
          return "slot with " + std::to_string(c) + " resources at " +
                 describe(P.frame().n, r) + " t=" + std::to_string(t);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relabeling_invariance() {
  std::mt19937_64 rng(20240817u);
  for (const auto& [p, k, r] : std::vector<std::tuple<std::int64_t, int, int>>{
           {2, 1, 2}, {3, 1, 1}}) {
    const Pattern P = canonical_companion(p, k, r);
    const MetricsReport base = evaluate(P);
    const std::int64_t count = P.resource_count();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> perm(static_cast<std::size_t>(count));
      for (std::int64_t i = 0; i < count; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
      }
      for (std::int64_t i = count - 1; i > 0; --i) {
        const std::int64_t j = static_cast<std::int64_t>(
            rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(j)]);
      }
      const MetricsReport rep = evaluate(P.relabeled(perm));
      if (rep.column_period != base.column_period ||
          !(rep.max_collision_ratio == base.max_collision_ratio) ||
          !(rep.max_continual == base.max_continual)) {
        return "metrics changed under permutation " + std::to_string(trial) +
               " at " + describe(P.frame().n, r);
      }
    }
  }
  return std::nullopt;
}

struct CliCase {
  std::string label;
  std::string env;  // "" = scrub HOPLATTICE_CAP
  std::string args;
  int expected_code = 0;
  std::function<bool(const std::string&)> validate;  // optional
};

bool json_ratio_is(const json& j, std::int64_t num, std::int64_t den) {
  return j["num"] == num && j["den"] == den;
}

std::int64_t count_lines(const std::string& text) {
  std::int64_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string cur;
  while (std::getline(in, cur)) {
    if (cur == line) return true;
  }
  return false;
}

std::vector<CliCase> cli_cases() {
  std::vector<CliCase> cases;
  cases.push_back({"find-poly degree 3", "", "find-poly --p 2 --k 1 --degree 3", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["coefficients"] == json::array({1, 1, 0, 1}) &&
                            j["order"] == 7 && j["pretty"] == "x^3 + x + 1";
                   }});
  cases.push_back({"find-poly degree 2", "", "find-poly --p 2 --k 1 --degree 2", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["coefficients"] == json::array({1, 1, 1}) &&
                            j["order"] == 3;
                   }});
  cases.push_back({"find-poly rejects composite p", "",
                   "find-poly --p 4 --k 1 --degree 2", 2,
                   [](const std::string& out) {
                     return out.find("4 is not prime") != std::string::npos;
                   }});
  cases.push_back({"eval companion q2 r2", "", "eval companion --p 2 --k 1 --r 2", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["report"]["column_period"] == 7 &&
                            json_ratio_is(j["report"]["max_collision_ratio"], 3, 7) &&
                            j["report"]["max_continual"] == 2 &&
                            j["meets_bound"]["ratio"] == true &&
                            j["meets_bound"]["continual"] == true;
                   }});
  cases.push_back({"eval linear 3x3", "", "eval linear --m 3 --n 3", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["report"]["column_period"] == 3 &&
                            json_ratio_is(j["report"]["max_collision_ratio"], 1, 3) &&
                            j["report"]["max_continual"] == 1 &&
                            j["meets_bound"]["ratio"] == false &&
                            j["meets_bound"]["continual"] == true;
                   }});
  cases.push_back({"schedule companion three frames", "",
                   "schedule companion --p 2 --k 1 --r 1 --t0 0 --t1 3 --format csv",
                   0, [](const std::string& out) {
                     return count_lines(out) == 13 &&
                            out.rfind("t,s,i,j\n", 0) == 0 &&
                            contains_line(out, "0,1,1,0") &&
                            contains_line(out, "1,1,0,1");
                   }});
  cases.push_back({"schedule empty range csv", "",
                   "schedule companion --p 2 --k 1 --r 1 --t0 2 --t1 2 --format csv",
                   0, [](const std::string& out) { return out == "t,s,i,j\n"; }});
  cases.push_back({"schedule empty range json", "",
                   "schedule linear --m 2 --n 2 --t0 1 --t1 1 --format json", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["rows"] == json::array();
                   }});
  cases.push_back({"schedule linear walkthrough", "",
                   "schedule linear --m 2 --n 2 --t0 0 --t1 2 --format csv", 0,
                   [](const std::string& out) {
                     return count_lines(out) == 9 &&
                            contains_line(out, "0,2,1,0") &&
                            contains_line(out, "1,2,1,1");
                   }});
  cases.push_back({"schedule rejects reversed range", "",
                   "schedule linear --m 2 --n 2 --t0 3 --t1 2 --format csv", 2,
                   nullptr});
  cases.push_back({"schedule rejects range past ten periods", "",
                   "schedule linear --m 2 --n 2 --t1 21 --format csv", 2, nullptr});
  cases.push_back({"compare companion vs baseline", "",
                   "compare --a-kind companion --a-p 3 --a-k 1 --a-r 1 "
                   "--b-kind linear --b-m 3 --b-n 3",
                   0, [](const std::string& out) {
                     const json j = json::parse(out);
                     return json_ratio_is(j["bounds"]["ratio"], 1, 4) &&
                            json_ratio_is(
                                j["a"]["report"]["max_collision_ratio"], 1, 4) &&
                            json_ratio_is(
                                j["b"]["report"]["max_collision_ratio"], 1, 3) &&
                            j["attains_bound"]["ratio"]["a"] == true &&
                            j["attains_bound"]["ratio"]["b"] == false &&
                            j["attains_bound"]["continual"]["a"] == true &&
                            j["attains_bound"]["continual"]["b"] == true;
                   }});
  cases.push_back({"compare pattern against itself", "",
                   "compare --a-kind companion --a-p 2 --a-k 1 --a-r 2 "
                   "--b-kind companion --b-p 2 --b-k 1 --b-r 2",
                   0, [](const std::string& out) {
                     const json j = json::parse(out);
                     return j["a"] == j["b"];
                   }});
  cases.push_back({"compare rejects an illegal baseline", "",
                   "compare --a-kind companion --a-p 2 --a-k 1 --a-r 2 "
                   "--b-kind linear --b-m 4 --b-n 2",
                   2, [](const std::string& out) {
                     return out.find("baseline requires") != std::string::npos;
                   }});
  cases.push_back({"verify q2 r2", "", "verify --p 2 --k 1 --r 2", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     if (!j.is_array() || j.size() != 6) return false;
                     for (const json& v : j) {
                       if (v["pass"] != true) return false;
                     }
                     return true;
                   }});
  cases.push_back({"verify q3 r1", "", "verify --p 3 --k 1 --r 1", 0,
                   [](const std::string& out) {
                     const json j = json::parse(out);
                     if (!j.is_array() || j.size() != 6) return false;
                     for (const json& v : j) {
                       if (v["pass"] != true) return false;
                     }
                     return true;
                   }});
  cases.push_back({"verify rejects the cap boundary", "",
                   "verify --p 2 --k 1 --r 11", 2,
                   [](const std::string& out) {
                     return out.find("cap exceeded") != std::string::npos;
                   }});
  cases.push_back({"eval rejects non-primitive poly", "",
                   "eval companion --p 2 --k 1 --r 1 --poly 1,0", 3,
                   [](const std::string& out) {
                     return out.find("not primitive") != std::string::npos;
                   }});
  cases.push_back({"cap override shrinks the budget", "HOPLATTICE_CAP=10",
                   "eval companion --p 2 --k 1 --r 2", 2,
                   [](const std::string& out) {
                     return out.find("budget") != std::string::npos;
                   }});
  cases.push_back({"cap override must be a positive integer",
                   "HOPLATTICE_CAP=abc", "find-poly --p 2 --k 1 --degree 2", 2,
                   [](const std::string& out) {
                     return out.find("HOPLATTICE_CAP") != std::string::npos;
                   }});
  cases.push_back({"cap override wide enough to pass", "HOPLATTICE_CAP=100",
                   "eval companion --p 2 --k 1 --r 2", 0, nullptr});
  cases.push_back({"unknown subcommand", "", "eval bogus", 2, nullptr});
  cases.push_back({"help exits clean", "", "--help", 0, nullptr});
  return cases;
}

std::optional<std::string> cli_determinism() {
  for (const CliCase& c : cli_cases()) {
    const std::string command = cli_command(c.env, c.args);
    const RunResult first = run_shell(command);
    const RunResult second = run_shell(command);
    if (first.code != c.expected_code) {
      return c.label + ": exit " + std::to_string(first.code) + ", expected " +
             std::to_string(c.expected_code);
    }
    if (second.code != first.code || second.output != first.output) {
      return c.label + ": two identical invocations differed";
    }
    if (c.validate && !c.validate(first.output)) {
      return c.label + ": output check failed";
    }
  }
  // An explicit polynomial equal to the canonical one must print the very
  // same bytes.
  const RunResult canonical =
      run_shell(cli_command("", "eval companion --p 2 --k 1 --r 1"));
  const RunResult explicit_poly =
      run_shell(cli_command("", "eval companion --p 2 --k 1 --r 1 --poly 1,1"));
  if (canonical.code != 0 || explicit_poly.code != 0 ||
      canonical.output != explicit_poly.output) {
    return "explicit canonical polynomial changed the output";
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "FAIL: acceptance needs the CLI binary path as argv[1]\n";
    return 1;
  }
  g_cli = argv[1];

  const std::vector<std::pair<std::string,
                              std::function<std::optional<std::string>()>>>
      criteria = {
          {"optimality grid", optimality_grid},
          {"bound compliance", bound_compliance},
          {"baseline non-optimality", baseline_non_optimality},
          {"oracle suite", oracle_suite},
          {"partition bound", partition_bound},
          {"engine equivalence", engine_equivalence},
          {"occupancy balance", occupancy_balance},
          {"relabeling invariance", relabeling_invariance},
          {"cli determinism", cli_determinism},
      };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::optional<std::string> detail;
    try {
      detail = criteria[i].second();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail) {
      ++failures;
      std::cout << "FAIL: criterion " << i + 1 << ": " << criteria[i].first
                << " — " << *detail << "\n";
    } else {
      std::cout << "PASS: criterion " << i + 1 << ": " << criteria[i].first
                << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "all 9 criteria passed\n";
  } else {
    std::cout << failures << " of 9 criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
