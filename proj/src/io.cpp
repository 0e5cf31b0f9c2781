#include "hoplattice/io.hpp"

namespace hoplattice::io {

namespace {

json modulus_coefficients(const Field& F) {
  json out = json::array();
  for (std::int64_t c : F.modulus()) out.push_back(c);
  return out;
}

std::string pretty_term(std::int64_t coeff_index, int degree) {
  std::string term;
  if (coeff_index != 1 || degree == 0) term += std::to_string(coeff_index);
  if (degree >= 1) term += "x";
  if (degree >= 2) term += "^" + std::to_string(degree);
  return term;
}

}  // namespace

json field_json(const Field& F) {
  json out;
  out["p"] = F.characteristic();
  out["k"] = F.extension_degree();
  out["q"] = F.size();
  if (F.extension_degree() > 1) out["modulus"] = modulus_coefficients(F);
  return out;
}

json poly_coefficients(const MonicPoly& f) {
  json out = json::array();
  for (const FieldElement& c : f.coeffs()) {
    out.push_back(f.field().to_index(c));
  }
  return out;
}

std::string poly_pretty(const MonicPoly& f) {
  const Field& F = f.field();
  std::string out;
  for (int d = f.degree(); d >= 0; --d) {
    const std::int64_t idx = F.to_index(f.coeffs()[static_cast<std::size_t>(d)]);
    if (idx == 0) continue;
    if (!out.empty()) out += " + ";
    out += pretty_term(idx, d);
  }
  return out.empty() ? "0" : out;
}

json ratio_json(const Ratio& r) {
  json out;
  out["num"] = r.num;
  out["den"] = r.den;
  return out;
}

json continual_bound_json(const ContinualBound& b) {
  if (b.exact) return json(b.exact_value);
  json log;
  log["m"] = b.m;
  log["n"] = b.n;
  json out;
  out["log"] = log;
  return out;
}

json bounds_json(const Bounds& b) {
  json out;
  out["ratio"] = ratio_json(b.ratio);
  out["continual"] = continual_bound_json(b.continual);
  return out;
}

json report_json(const MetricsReport& rep) {
  json out;
  out["column_period"] = rep.column_period;
  out["max_collision_ratio"] = ratio_json(rep.max_collision_ratio);
  if (rep.max_continual.cap_exceeded) {
    json mc;
    mc["cap_exceeded"] = true;
    mc["at_least"] = rep.max_continual.value;
    out["max_continual"] = mc;
  } else {
    out["max_continual"] = rep.max_continual.value;
  }
  out["occupancy_balanced"] = rep.occupancy_balanced;
  out["bounds"] = bounds_json(rep.bounds);
  json witnesses;
  if (rep.ratio_witness) {
    witnesses["ratio"] = json::array({rep.ratio_witness->s, rep.ratio_witness->s_prime});
  } else {
    witnesses["ratio"] = nullptr;
  }
  if (rep.continual_witness) {
    witnesses["continual"] =
        json::array({rep.continual_witness->s, rep.continual_witness->s_prime,
                     rep.continual_witness->t});
  } else {
    witnesses["continual"] = nullptr;
  }
  out["witnesses"] = witnesses;
  return out;
}

json pattern_json(const Pattern& P) {
  json out;
  if (P.kind() == Pattern::Kind::companion) {
    out["kind"] = "companion";
    out["field"] = field_json(P.field());
    out["r"] = P.freq_dims();
    out["polynomial"] = poly_coefficients(P.polynomial());
  } else {
    out["kind"] = "linear";
  }
  out["m"] = P.frame().m;
  out["n"] = P.frame().n;
  out["period"] = P.state_period();
  return out;
}

json meets_json(const Pattern& P, const MetricsReport& rep) {
  json out;
  out["ratio"] = meets_ratio_bound(rep);
  out["continual"] = meets_continual_bound(rep);
  (void)P;
  return out;
}

std::string schedule_csv(const std::vector<ScheduleRow>& rows) {
  std::string out = "t,s,i,j\n";
  for (const ScheduleRow& row : rows) {
    out += std::to_string(row.t);
    out += ',';
    out += std::to_string(row.s);
    out += ',';
    out += std::to_string(row.i);
    out += ',';
    out += std::to_string(row.j);
    out += '\n';
  }
  return out;
}

json schedule_json(const Pattern& P, const std::vector<ScheduleRow>& rows) {
  json frame;
  frame["m"] = P.frame().m;
  frame["n"] = P.frame().n;
  json out;
  out["frame_structure"] = frame;
  out["kind"] = P.kind() == Pattern::Kind::companion ? "companion" : "linear";
  out["period"] = P.state_period();
  json r = json::array();
  for (const ScheduleRow& row : rows) {
    r.push_back(json::array({row.t, row.s, row.i, row.j}));
  }
  out["rows"] = r;
  return out;
}

json verdict_json(const oracle::Verdict& v, const json& params) {
  json out;
  out["check"] = v.check;
  out["params"] = params;
  out["pass"] = v.pass;
  if (!v.pass) out["counterexample"] = v.counterexample;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hoplattice::io
