#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoplattice/io.hpp"
#include "hoplattice/metrics.hpp"
#include "hoplattice/oracle.hpp"
#include "hoplattice/pattern.hpp"
#include "hoplattice/polyalg.hpp"

namespace {

using namespace hoplattice;
using json = io::json;

// Exit codes: 0 success, 2 invalid input, 3 precondition failure
// (non-primitive polynomial), 4 verification failure.
constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

// Everything size-related the tool refuses to exceed. HOPLATTICE_CAP
// replaces all three at once.
struct Caps {
  std::int64_t field = kDefaultSizeCap;
  std::int64_t eval_budget = kDefaultEvalBudget;
  std::int64_t verify_states = 4096;
};

Caps caps_from_env() {
  Caps caps;
  if (const char* raw = std::getenv("HOPLATTICE_CAP")) {
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || value < 1) {
      fail(Errc::invalid_argument,
           "HOPLATTICE_CAP must be a positive integer, got \"" +
               std::string(raw) + "\"");
    }
    caps.field = value;
    caps.eval_budget = value;
    caps.verify_states = value;
  }
  return caps;
}

void check_small(std::int64_t value, const char* name) {
  if (value < 1 || value > 61) {
    fail(Errc::invalid_argument,
         std::string(name) + " must be in [1, 61], got " + std::to_string(value));
  }
}

std::vector<std::int64_t> parse_index_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(item.c_str(), &end, 10);
    if (errno != 0 || end == item.c_str() || *end != '\0') {
      fail(Errc::invalid_argument,
           "bad coefficient \"" + item + "\" in polynomial list");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct CompanionSpec {
  std::int64_t p = 0;
  std::int64_t k = 1;
  std::int64_t r = 0;
  std::string poly;  // comma-separated element indices; empty = canonical
};

Pattern build_companion(const CompanionSpec& spec, const Caps& caps) {
  check_small(spec.k, "k");
  check_small(spec.r, "r");
  const Field F(spec.p, static_cast<int>(spec.k), caps.field);
  const int degree = static_cast<int>(spec.r) + 1;
  MonicPoly f = [&] {
    if (spec.poly.empty()) return find_primitive(F, degree, caps.field);
    const std::vector<std::int64_t> indices = parse_index_list(spec.poly);
    if (static_cast<int>(indices.size()) != degree) {
      fail(Errc::invalid_argument,
           "--poly needs exactly r+1 = " + std::to_string(degree) +
               " coefficients (low degree first, leading 1 implied), got " +
               std::to_string(indices.size()));
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(indices.size() + 1);
    for (std::int64_t index : indices) coeffs.push_back(F.from_index(index));
    coeffs.push_back(F.one());
    return MonicPoly(F, std::move(coeffs));
  }();
  return Pattern::companion(F, static_cast<int>(spec.r), f, caps.field);
}

json eval_json(const Pattern& P, const MetricsReport& rep) {
  json out;
  out["pattern"] = io::pattern_json(P);
  out["report"] = io::report_json(rep);
  out["meets_bound"] = io::meets_json(P, rep);
  return out;
}

int cmd_find_poly(std::int64_t p, std::int64_t k, std::int64_t degree,
                  const Caps& caps) {
  check_small(k, "k");
  check_small(degree, "degree");
  const Field F(p, static_cast<int>(k), caps.field);
  const MonicPoly f = find_primitive(F, static_cast<int>(degree), caps.field);
  const std::int64_t order = order_of_x(f);
  const Factorization fact = factor_integer(order);

  json primes = json::array();
  for (const auto& [prime, multiplicity] : fact.primes) {
    json entry;
    entry["prime"] = prime;
    entry["multiplicity"] = multiplicity;
    primes.push_back(entry);
  }
  const Poly x = poly_x(F);
  const Poly one = poly_one(F);
  json checks = json::array();
  {
    json full;
    full["exponent"] = order;
    full["x_power_is_one"] = poly_pow_mod(x, order, f) == one;
    checks.push_back(full);
  }
  for (const auto& [prime, multiplicity] : fact.primes) {
    json entry;
    entry["exponent"] = order / prime;
    entry["x_power_is_one"] = poly_pow_mod(x, order / prime, f) == one;
    checks.push_back(entry);
  }

  json certificate;
  certificate["group_order"] = order;
  json factorization;
  factorization["value"] = fact.value;
  factorization["primes"] = primes;
  certificate["factorization"] = factorization;
  certificate["checks"] = checks;

  json out;
  out["field"] = io::field_json(F);
  out["degree"] = degree;
  out["coefficients"] = io::poly_coefficients(f);
  out["pretty"] = io::poly_pretty(f);
  out["order"] = order;
  out["certificate"] = certificate;
  std::cout << io::dump(out);
  return 0;
}

int cmd_eval(const Pattern& P, std::int64_t continual_cap, const Caps& caps) {
  const MetricsReport rep = evaluate(P, continual_cap, caps.eval_budget);
  std::cout << io::dump(eval_json(P, rep));
  return 0;
}

int cmd_schedule(const Pattern& P, std::int64_t t0, std::int64_t t1,
                 const std::string& format) {
  if (t0 < 0 || t1 < t0) {
    fail(Errc::invalid_argument,
         "schedule range must satisfy 0 <= t0 <= t1, got t0=" +
             std::to_string(t0) + " t1=" + std::to_string(t1));
  }
  if (t1 > 10 * P.state_period()) {
    fail(Errc::invalid_argument,
         "schedule range must satisfy t1 <= 10*period = " +
             std::to_string(10 * P.state_period()) + ", got t1=" +
             std::to_string(t1));
  }
  const std::vector<ScheduleRow> rows = P.schedule(t0, t1);
  if (format == "csv") {
    std::cout << io::schedule_csv(rows);
  } else {
    std::cout << io::dump(io::schedule_json(P, rows));
  }
  return 0;
}

int cmd_compare(const Pattern& A, const Pattern& B, std::int64_t continual_cap,
                const Caps& caps) {
  if (!(A.frame() == B.frame())) {
    fail(Errc::bad_dimensions,
         "frame structures differ: " + std::to_string(A.frame().m) + "x" +
             std::to_string(A.frame().n) + " vs " + std::to_string(B.frame().m) +
             "x" + std::to_string(B.frame().n));
  }
  const MetricsReport ra = evaluate(A, continual_cap, caps.eval_budget);
  const MetricsReport rb = evaluate(B, continual_cap, caps.eval_budget);

  json frame;
  frame["m"] = A.frame().m;
  frame["n"] = A.frame().n;
  json side_a = eval_json(A, ra);
  json side_b = eval_json(B, rb);
  json attains;
  json attains_ratio;
  attains_ratio["a"] = meets_ratio_bound(ra);
  attains_ratio["b"] = meets_ratio_bound(rb);
  json attains_continual;
  attains_continual["a"] = meets_continual_bound(ra);
  attains_continual["b"] = meets_continual_bound(rb);
  attains["ratio"] = attains_ratio;
  attains["continual"] = attains_continual;

  json out;
  out["frame"] = frame;
  out["bounds"] = io::bounds_json(ra.bounds);
  out["a"] = side_a;
  out["b"] = side_b;
  out["attains_bound"] = attains;
  std::cout << io::dump(out);
  return 0;
}

int cmd_verify(std::int64_t p, std::int64_t k, std::int64_t r, const Caps& caps) {
  check_small(k, "k");
  check_small(r, "r");
  const Field F(p, static_cast<int>(k), caps.field);
  const std::int64_t states = checked_pow(F.size(), static_cast<int>(r) + 1);
  if (states >= caps.verify_states) {
    fail(Errc::cap_exceeded,
         "cap exceeded: verification requires q^(r+1) < " +
             std::to_string(caps.verify_states) + ", got " +
             std::to_string(states));
  }
  const MonicPoly f = find_primitive(F, static_cast<int>(r) + 1, caps.field);
  const std::vector<oracle::Verdict> verdicts = oracle::run_all_checks(f);

  json params;
  params["p"] = p;
  params["k"] = k;
  params["q"] = F.size();
  params["r"] = r;
  params["m"] = checked_pow(F.size(), static_cast<int>(r));
  params["n"] = F.size();
  params["polynomial"] = io::poly_coefficients(f);

  json out = json::array();
  bool all_pass = true;
  for (const oracle::Verdict& v : verdicts) {
    out.push_back(io::verdict_json(v, params));
    all_pass = all_pass && v.pass;
  }
  std::cout << io::dump(out);
  return all_pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-time hopping patterns from companion matrices over finite fields"};
  app.require_subcommand(1);

  // find-poly
  auto* find = app.add_subcommand(
      "find-poly", "Print the canonical primitive polynomial and its order certificate");
  std::int64_t fp_p = 0, fp_k = 1, fp_degree = 0;
  find->add_option("--p", fp_p, "Field characteristic (prime)")->required();
  find->add_option("--k", fp_k, "Extension degree of the base field (default 1)");
  find->add_option("--degree", fp_degree, "Degree of the polynomial to search")->required();

  // Shared pattern option values.
  CompanionSpec comp;
  std::int64_t lin_m = 0, lin_n = 0;
  std::int64_t continual_cap = kDefaultContinualCap;
  std::int64_t t0 = 0, t1 = 0;
  std::string format = "csv";

  const auto add_companion_options = [&comp](CLI::App* cmd) {
    cmd->add_option("--p", comp.p, "Field characteristic (prime)")->required();
    cmd->add_option("--k", comp.k, "Extension degree of the base field (default 1)");
    cmd->add_option("--r", comp.r, "Frequency dimensions; the polynomial has degree r+1")
        ->required();
    cmd->add_option("--poly", comp.poly,
                    "Explicit polynomial: r+1 comma-separated element indices, low "
                    "degree first, leading 1 implied (default: canonical search)");
  };
  const auto add_linear_options = [&lin_m, &lin_n](CLI::App* cmd) {
    cmd->add_option("--m", lin_m, "Frequency slots per frame")->required();
    cmd->add_option("--n", lin_n, "Time slots per frame")->required();
  };

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate all metrics of one pattern");
  eval_cmd->require_subcommand(1);
  auto* eval_companion = eval_cmd->add_subcommand("companion", "Companion-matrix pattern");
  add_companion_options(eval_companion);
  eval_companion->add_option("--continual-cap", continual_cap,
                             "Longest collision run to measure before flagging (default 64)");
  auto* eval_linear = eval_cmd->add_subcommand("linear", "Linear baseline pattern");
  add_linear_options(eval_linear);
  eval_linear->add_option("--continual-cap", continual_cap,
                          "Longest collision run to measure before flagging (default 64)");

  // schedule
  auto* schedule_cmd = app.add_subcommand("schedule", "Print the slot of every resource per frame");
  schedule_cmd->require_subcommand(1);
  auto* schedule_companion = schedule_cmd->add_subcommand("companion", "Companion-matrix pattern");
  auto* schedule_linear = schedule_cmd->add_subcommand("linear", "Linear baseline pattern");
  for (CLI::App* cmd : {schedule_companion, schedule_linear}) {
    cmd->add_option("--t0", t0, "First frame, inclusive (default 0)");
    cmd->add_option("--t1", t1, "Last frame, exclusive")->required();
    cmd->add_option("--format", format, "Output format: csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  add_companion_options(schedule_companion);
  add_linear_options(schedule_linear);

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "Evaluate two patterns on the same frame side by side");
  std::string a_kind, b_kind;
  CompanionSpec comp_a, comp_b;
  std::int64_t a_m = 0, a_n = 0, b_m = 0, b_n = 0;
  compare_cmd->add_option("--a-kind", a_kind, "companion or linear")
      ->required()
      ->check(CLI::IsMember({"companion", "linear"}));
  compare_cmd->add_option("--a-p", comp_a.p, "Field characteristic of pattern A");
  compare_cmd->add_option("--a-k", comp_a.k, "Extension degree of pattern A (default 1)");
  compare_cmd->add_option("--a-r", comp_a.r, "Frequency dimensions of pattern A");
  compare_cmd->add_option("--a-poly", comp_a.poly, "Explicit polynomial of pattern A");
  compare_cmd->add_option("--a-m", a_m, "Frequency slots of pattern A (linear)");
  compare_cmd->add_option("--a-n", a_n, "Time slots of pattern A (linear)");
  compare_cmd->add_option("--b-kind", b_kind, "companion or linear")
      ->required()
      ->check(CLI::IsMember({"companion", "linear"}));
  compare_cmd->add_option("--b-p", comp_b.p, "Field characteristic of pattern B");
  compare_cmd->add_option("--b-k", comp_b.k, "Extension degree of pattern B (default 1)");
  compare_cmd->add_option("--b-r", comp_b.r, "Frequency dimensions of pattern B");
  compare_cmd->add_option("--b-poly", comp_b.poly, "Explicit polynomial of pattern B");
  compare_cmd->add_option("--b-m", b_m, "Frequency slots of pattern B (linear)");
  compare_cmd->add_option("--b-n", b_n, "Time slots of pattern B (linear)");
  compare_cmd->add_option("--continual-cap", continual_cap,
                          "Longest collision run to measure before flagging (default 64)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Run every brute-force check on the canonical pattern");
  std::int64_t vf_p = 0, vf_k = 1, vf_r = 0;
  verify_cmd->add_option("--p", vf_p, "Field characteristic (prime)")->required();
  verify_cmd->add_option("--k", vf_k, "Extension degree of the base field (default 1)");
  verify_cmd->add_option("--r", vf_r, "Frequency dimensions")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const Caps caps = caps_from_env();
    if (continual_cap < 1) {
      fail(Errc::invalid_argument, "--continual-cap must be >= 1");
    }
    if (find->parsed()) {
      return cmd_find_poly(fp_p, fp_k, fp_degree, caps);
    }
    if (eval_cmd->parsed()) {
      const Pattern P = eval_companion->parsed() ? build_companion(comp, caps)
                                                 : Pattern::linear(lin_m, lin_n);
      return cmd_eval(P, continual_cap, caps);
    }
    if (schedule_cmd->parsed()) {
      const Pattern P = schedule_companion->parsed()
                            ? build_companion(comp, caps)
                            : Pattern::linear(lin_m, lin_n);
      return cmd_schedule(P, t0, t1, format);
    }
    if (compare_cmd->parsed()) {
      const Pattern A = a_kind == "companion" ? build_companion(comp_a, caps)
                                              : Pattern::linear(a_m, a_n);
      const Pattern B = b_kind == "companion" ? build_companion(comp_b, caps)
                                              : Pattern::linear(b_m, b_n);
      return cmd_compare(A, B, continual_cap, caps);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(vf_p, vf_k, vf_r, caps);
    }
    fail(Errc::invalid_argument, "no command given");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::not_primitive ? kExitPrecondition : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
