#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hoplattice/pattern.hpp"
#include "hoplattice/rational.hpp"

namespace hoplattice {

// Lower bound on the longest guaranteed collision run: log_n(m). Stored
// symbolically so reports never round: when m is an exact power of n the
// value is the integer exponent, otherwise consumers get ceil(log_n m)
// plus the raw (m, n) pair.
struct ContinualBound {
  std::int64_t m{0};
  std::int64_t n{0};
  bool exact{false};
  std::int64_t exact_value{0};  // meaningful only when exact
  std::int64_t ceil_value{0};   // smallest e with n^e >= m

  friend bool operator==(const ContinualBound&, const ContinualBound&) = default;
};

struct PairWitness {
  std::int64_t s{0};
  std::int64_t s_prime{0};

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct RunWitness {
  std::int64_t s{0};
  std::int64_t s_prime{0};
  std::int64_t t{0};  // first frame of the run

  friend bool operator==(const RunWitness&, const RunWitness&) = default;
};

// Longest observed collision run, or the cap flag when some run outlived
// either the caller's cap or the whole scan window (the latter means the
// run never ends).
struct ContinualCount {
  std::int64_t value{0};
  bool cap_exceeded{false};

  friend bool operator==(const ContinualCount&, const ContinualCount&) = default;
};

struct Bounds {
  Ratio ratio;
  ContinualBound continual;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Everything evaluate() measures about one pattern. All fields are exact;
// witnesses are the lexicographically smallest tuples attaining the
// reported values. The ratio witness is absent only when there are fewer
// than two resources; the continual witness is absent whenever no pair
// collides at all (a run of length zero has no start frame).
struct MetricsReport {
  std::int64_t column_period{0};
  Ratio max_collision_ratio;
  std::optional<PairWitness> ratio_witness;
  ContinualCount max_continual;
  std::optional<RunWitness> continual_witness;
  bool occupancy_balanced{false};
  Bounds bounds;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline constexpr std::int64_t kDefaultContinualCap = 64;
// Cap on resource-count x period before the all-pairs scans are refused.
inline constexpr std::int64_t kDefaultEvalBudget = 1'000'000;

// Smallest T >= 1 such that the partition of resources by time slot at
// frame t equals the partition at frame t + T, for every t. Partitions
// are compared as groupings, not by slot labels. The result always
// divides the state period.
std::int64_t column_period(const Pattern& P);

// Number of frames t in [0, period) at which s and s_prime share a time
// slot. The two resources must differ.
std::int64_t collision_count_pair(const Pattern& P, std::int64_t s,
                                  std::int64_t s_prime);

struct RatioResult {
  Ratio ratio;
  std::optional<PairWitness> witness;

  friend bool operator==(const RatioResult&, const RatioResult&) = default;
};

// Maximum of collision_count / period over unordered distinct pairs.
// Companion patterns take a difference-vector orbit walk (collisions of a
// pair depend only on the difference of their states); the pairwise scan
// is kept public so tests can confirm the two routes agree.
RatioResult max_collision_ratio(const Pattern& P);
RatioResult max_collision_ratio_pairwise(const Pattern& P);

struct ContinualResult {
  ContinualCount count;
  std::optional<RunWitness> witness;

  friend bool operator==(const ContinualResult&, const ContinualResult&) = default;
};

// Longest run of consecutive frames in which some fixed pair collides in
// every frame. Runs are scanned over a doubled period so runs that wrap
// the period boundary are measured in full; a run covering the whole
// doubled window can never end and reports cap_exceeded, as does any run
// longer than `cap`.
ContinualResult max_continual_collisions(const Pattern& P, std::int64_t cap);

// Histogram: how many resources occupy each time slot at frame t.
std::vector<std::int64_t> occupancy(const Pattern& P, std::int64_t t);

// The two frame-wide lower bounds: every pattern on a full m x n frame
// has max collision ratio >= (m-1)/(mn-1), and some pair always collides
// in log_n(m) consecutive frames.
Bounds lower_bounds(std::int64_t m, std::int64_t n);

// First frame in [0, period) where the two resources occupy different
// time slots, if any.
std::optional<std::int64_t> first_rendezvous(const Pattern& P, std::int64_t s,
                                             std::int64_t s_prime);

MetricsReport evaluate(const Pattern& P,
                       std::int64_t continual_cap = kDefaultContinualCap,
                       std::int64_t budget = kDefaultEvalBudget);

// A pattern "meets" a bound when its measured value equals the bound
// exactly (the bounds are lower bounds, so every pattern is >= them).
bool meets_ratio_bound(const MetricsReport& report);
bool meets_continual_bound(const MetricsReport& report);

}  // namespace hoplattice
