#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hoplattice/metrics.hpp"
#include "hoplattice/oracle.hpp"
#include "hoplattice/pattern.hpp"
#include "hoplattice/polyalg.hpp"

// Serialization for the command-line tool. Every object uses a fixed,
// documented key order (nlohmann::ordered_json preserves insertion order)
// and exact integers only, so identical inputs produce byte-identical
// output.
namespace hoplattice::io {

using json = nlohmann::ordered_json;

// {"p", "k", "q"} plus "modulus" (coefficient indices, constant first,
// leading 1 included) when k > 1.
json field_json(const Field& F);

// Coefficient indices, constant first, leading coefficient included.
json poly_coefficients(const MonicPoly& f);

// Human-readable rendering, highest degree first, e.g. "x^3 + x + 1".
// Coefficients are printed as element indices.
std::string poly_pretty(const MonicPoly& f);

// {"num", "den"}
json ratio_json(const Ratio& r);

// Exact integer when m is an integer power of n, else {"log": {"m", "n"}}.
json continual_bound_json(const ContinualBound& b);

// {"ratio", "continual"}
json bounds_json(const Bounds& b);

// {"column_period", "max_collision_ratio", "max_continual",
//  "occupancy_balanced", "bounds", "witnesses"}
json report_json(const MetricsReport& rep);

// Companion: {"kind", "field", "r", "polynomial", "m", "n", "period"};
// linear: {"kind", "m", "n", "period"}.
json pattern_json(const Pattern& P);

// {"ratio", "continual"} booleans.
json meets_json(const Pattern& P, const MetricsReport& rep);

// Header "t,s,i,j" plus one line per row; trailing newline.
std::string schedule_csv(const std::vector<ScheduleRow>& rows);

// {"frame_structure": {"m", "n"}, "kind", "period", "rows": [[t,s,i,j]...]}
json schedule_json(const Pattern& P, const std::vector<ScheduleRow>& rows);

// {"check", "params", "pass"} plus "counterexample" on failure.
json verdict_json(const oracle::Verdict& v, const json& params);

// Two-space indentation plus trailing newline.
std::string dump(const json& j);

}  // namespace hoplattice::io
