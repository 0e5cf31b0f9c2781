#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoplattice/metrics.hpp"
#include "hoplattice/pattern.hpp"

namespace hoplattice::oracle {

// Verdict of one brute-force check. `counterexample` is a human-readable
// description of the first violation and is empty when the check passes.
//
// Everything in this namespace re-derives its answers from definitions:
// matrices are multiplied step by step on integer index tables built from
// the field, orbits are walked element by element, and metric values are
// recomputed from the literal definitions. None of it shares algorithms
// with the modules it cross-checks; the field arithmetic itself is the
// only common layer.
struct Verdict {
  std::string check;
  bool pass{false};
  std::string counterexample;
};

// The cyclic group generated by A has order q^d - 1 (d = matrix size),
// and the power at index (q^d - 1)/(q - 1) generates exactly the scalar
// matrices with nonzero scalar.
Verdict check_group_order(const Matrix& A);

// Walking any nonzero column vector with A visits every nonzero vector
// exactly once per period. The row-vector version multiplies from the
// right.
Verdict check_transitivity_columns(const Matrix& A);
Verdict check_transitivity_rows(const Matrix& A);

// The powers of A that map the set {(0,...,0,y) : y != 0} of row vectors
// into itself are exactly the scalar matrices among the powers.
Verdict check_stabilizer(const Matrix& A);

// For every nonzero row vector a, the rows a, aA, ..., aA^(d-1) are
// linearly independent (checked by elimination over the field).
Verdict check_row_independence(const Matrix& A);

// A set of elements split into disjoint groups.
struct PartitionInstance {
  std::int64_t total{0};
  std::vector<std::vector<std::int64_t>> parts;
};

// Sum of |part| * (|part| - 1) over the parts; equivalently the number of
// ordered pairs of distinct elements sharing a part.
std::int64_t partition_sum(const PartitionInstance& partition);

// Splitting m*n elements into n groups always gives partition_sum
// >= m*m*n - m*n, with equality exactly for the all-groups-equal split.
// Exhaustive over all compositions when m*n <= 12, deterministic sampling
// (seeded, including the balanced and the fully concentrated split) above
// that.
Verdict check_partition_bound(std::int64_t m, std::int64_t n);

// Recomputes every field of the metrics report from the literal
// definitions: each companion frame is independently re-derived as a
// fresh matrix power applied to the frame-0 states (baseline slots are
// queried one by one), the column period tries every shift against every
// resource pair, and the collision scans visit every pair at every
// frame. Must agree with evaluate() exactly, witnesses included.
MetricsReport naive_metrics(const Pattern& P,
                            std::int64_t continual_cap = kDefaultContinualCap,
                            std::int64_t budget = kDefaultEvalBudget);

// The full verification battery for one companion construction: group
// order, both transitivity directions, stabilizer, row independence, and
// the partition bound on its frame.
std::vector<Verdict> run_all_checks(const MonicPoly& f);

}  // namespace hoplattice::oracle
