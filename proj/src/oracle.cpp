#include "hoplattice/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

namespace hoplattice::oracle {

namespace {

// The oracle does its linear algebra on plain element indices with
// precomputed operation tables, so nothing below this point shares a code
// path with the matrix/pattern machinery it cross-checks.
struct FieldTables {
  std::int64_t q{0};
  std::vector<std::int64_t> add;  // q * q
  std::vector<std::int64_t> mul;  // q * q
  std::vector<std::int64_t> neg;  // q
  std::vector<std::int64_t> inv;  // q, inv[0] unused

  std::int64_t plus(std::int64_t a, std::int64_t b) const {
    return add[static_cast<std::size_t>(a * q + b)];
  }
  std::int64_t times(std::int64_t a, std::int64_t b) const {
    return mul[static_cast<std::size_t>(a * q + b)];
  }
  std::int64_t minus(std::int64_t a, std::int64_t b) const {
    return plus(a, neg[static_cast<std::size_t>(b)]);
  }
};

FieldTables build_tables(const Field& F) {
  FieldTables T;
  T.q = F.size();
  T.add.resize(static_cast<std::size_t>(T.q * T.q));
  T.mul.resize(static_cast<std::size_t>(T.q * T.q));
  T.neg.resize(static_cast<std::size_t>(T.q));
  T.inv.resize(static_cast<std::size_t>(T.q), 0);
  for (std::int64_t a = 0; a < T.q; ++a) {
    const FieldElement ea = F.from_index(a);
    T.neg[static_cast<std::size_t>(a)] = F.to_index(F.neg(ea));
    if (a != 0) T.inv[static_cast<std::size_t>(a)] = F.to_index(F.inv(ea));
    for (std::int64_t b = 0; b < T.q; ++b) {
      const FieldElement eb = F.from_index(b);
      T.add[static_cast<std::size_t>(a * T.q + b)] = F.to_index(F.add(ea, eb));
      T.mul[static_cast<std::size_t>(a * T.q + b)] = F.to_index(F.mul(ea, eb));
    }
  }
  return T;
}

using IdxMatrix = std::vector<std::int64_t>;  // d x d, row-major
using IdxVector = std::vector<std::int64_t>;  // length d

IdxMatrix to_indices(const Matrix& A) {
  const int d = A.size();
  IdxMatrix M(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      M[static_cast<std::size_t>(r * d + c)] = A.field().to_index(A.at(r, c));
    }
  }
  return M;
}

IdxMatrix idx_identity(const FieldTables&, int d) {
  IdxMatrix I(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) I[static_cast<std::size_t>(i * d + i)] = 1;
  return I;
}

IdxMatrix idx_mat_mul(const FieldTables& T, const IdxMatrix& A,
                      const IdxMatrix& B, int d) {
  IdxMatrix C(A.size(), 0);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < d; ++k) {
        acc = T.plus(acc, T.times(A[static_cast<std::size_t>(r * d + k)],
                                  B[static_cast<std::size_t>(k * d + c)]));
      }
      C[static_cast<std::size_t>(r * d + c)] = acc;
    }
  }
  return C;
}

void idx_col_step(const FieldTables& T, const IdxMatrix& A, const IdxVector& v,
                  IdxVector& out, int d) {
  for (int r = 0; r < d; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < d; ++c) {
      acc = T.plus(acc, T.times(A[static_cast<std::size_t>(r * d + c)],
                                v[static_cast<std::size_t>(c)]));
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
}

void idx_row_step(const FieldTables& T, const IdxVector& v, const IdxMatrix& A,
                  IdxVector& out, int d) {
  for (int c = 0; c < d; ++c) {
    std::int64_t acc = 0;
    for (int r = 0; r < d; ++r) {
      acc = T.plus(acc, T.times(v[static_cast<std::size_t>(r)],
                                A[static_cast<std::size_t>(r * d + c)]));
    }
    out[static_cast<std::size_t>(c)] = acc;
  }
}

std::int64_t vec_code(const FieldTables& T, const IdxVector& v) {
  std::int64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    code = code * T.q + v[i];
  }
  return code;
}

IdxVector vec_from_code(const FieldTables& T, std::int64_t code, int d) {
  IdxVector v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    v[static_cast<std::size_t>(i)] = code % T.q;
    code /= T.q;
  }
  return v;
}

std::int64_t pow_i64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Verdict transitivity_walk(const Matrix& A, bool columns) {
  const FieldTables T = build_tables(A.field());
  const int d = A.size();
  const IdxMatrix M = to_indices(A);
  const std::int64_t states = pow_i64(T.q, d);
  const std::int64_t period = states - 1;
  Verdict v;
  v.check = columns ? "transitivity_columns" : "transitivity_rows";
  std::vector<char> seen(static_cast<std::size_t>(states));
  IdxVector cur(static_cast<std::size_t>(d));
  IdxVector next(static_cast<std::size_t>(d));
  for (std::int64_t start = 1; start < states; ++start) {
    std::fill(seen.begin(), seen.end(), 0);
    cur = vec_from_code(T, start, d);
    for (std::int64_t t = 0; t < period; ++t) {
      const std::int64_t code = vec_code(T, cur);
      if (code == 0) {
        v.counterexample = "vector " + std::to_string(start) +
                           " reaches zero at step " + std::to_string(t);
        return v;
      }
      if (seen[static_cast<std::size_t>(code)]) {
        v.counterexample = "orbit of vector " + std::to_string(start) +
                           " revisits " + std::to_string(code) + " at step " +
                           std::to_string(t);
        return v;
      }
      seen[static_cast<std::size_t>(code)] = 1;
      if (columns) {
        idx_col_step(T, M, cur, next, d);
      } else {
        idx_row_step(T, cur, M, next, d);
      }
      std::swap(cur, next);
    }
    // period distinct nonzero vectors out of exactly period nonzero
    // vectors: the orbit covered everything.
  }
  v.pass = true;
  return v;
}

std::string sizes_to_string(const std::vector<std::int64_t>& sizes) {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out + ")";
}

// Applies `fn` to every way of writing `total` as an ordered sum of
// `parts` non-negative integers; stops early when fn returns false.
bool for_each_composition(std::int64_t total, std::int64_t parts,
                          std::vector<std::int64_t>& sizes,
                          const std::function<bool(const std::vector<std::int64_t>&)>& fn) {
  if (parts == 1) {
    sizes.push_back(total);
    const bool keep_going = fn(sizes);
    sizes.pop_back();
    return keep_going;
  }
  for (std::int64_t head = 0; head <= total; ++head) {
    sizes.push_back(head);
    const bool keep_going =
        for_each_composition(total - head, parts - 1, sizes, fn);
    sizes.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

PartitionInstance instance_from_sizes(std::int64_t total,
                                      const std::vector<std::int64_t>& sizes) {
  PartitionInstance inst;
  inst.total = total;
  std::int64_t nextElement = 0;
  for (std::int64_t size : sizes) {
    std::vector<std::int64_t> part;
    part.reserve(static_cast<std::size_t>(size));
    for (std::int64_t i = 0; i < size; ++i) part.push_back(nextElement++);
    inst.parts.push_back(std::move(part));
  }
  return inst;
}

}  // namespace

Verdict check_group_order(const Matrix& A) {
  const FieldTables T = build_tables(A.field());
  const int d = A.size();
  const IdxMatrix M = to_indices(A);
  const IdxMatrix I = idx_identity(T, d);
  const std::int64_t expected = pow_i64(T.q, d) - 1;
  Verdict v{"group_order", false, ""};

  IdxMatrix P = M;
  std::int64_t order = 0;
  for (std::int64_t e = 1; e <= expected; ++e) {
    if (P == I) {
      order = e;
      break;
    }
    P = idx_mat_mul(T, P, M, d);
  }
  if (order != expected) {
    v.counterexample =
        order == 0
            ? "no power up to " + std::to_string(expected) + " is the identity"
            : "matrix order is " + std::to_string(order) + ", expected " +
                  std::to_string(expected);
    return v;
  }

  // The power at expected/(q-1) must generate exactly the nonzero scalar
  // matrices.
  const std::int64_t step = expected / (T.q - 1);
  IdxMatrix B = I;
  for (std::int64_t i = 0; i < step; ++i) B = idx_mat_mul(T, B, M, d);
  std::vector<std::int64_t> scalars;
  IdxMatrix P2 = I;
  for (std::int64_t guard = 0; guard <= T.q; ++guard) {
    if (guard > 0 && P2 == I) break;
    // Must be y * identity for a nonzero y.
    const std::int64_t y = P2[0];
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const std::int64_t want = r == c ? y : 0;
        if (P2[static_cast<std::size_t>(r * d + c)] != want) {
          v.counterexample = "power " + std::to_string(guard) + " of the " +
                             std::to_string(step) +
                             "-th power is not scalar";
          return v;
        }
      }
    }
    if (y == 0) {
      v.counterexample = "scalar subgroup contains the zero matrix";
      return v;
    }
    scalars.push_back(y);
    P2 = idx_mat_mul(T, P2, B, d);
  }
  std::sort(scalars.begin(), scalars.end());
  std::vector<std::int64_t> expected_scalars;
  for (std::int64_t y = 1; y < T.q; ++y) expected_scalars.push_back(y);
  if (scalars != expected_scalars) {
    v.counterexample = "scalar subgroup has " + std::to_string(scalars.size()) +
                       " elements, expected " + std::to_string(T.q - 1);
    return v;
  }
  v.pass = true;
  return v;
}

Verdict check_transitivity_columns(const Matrix& A) {
  return transitivity_walk(A, true);
}

Verdict check_transitivity_rows(const Matrix& A) {
  return transitivity_walk(A, false);
}

Verdict check_stabilizer(const Matrix& A) {
  const FieldTables T = build_tables(A.field());
  const int d = A.size();
  const IdxMatrix M = to_indices(A);
  const IdxMatrix I = idx_identity(T, d);
  const std::int64_t period = pow_i64(T.q, d) - 1;
  Verdict v{"stabilizer", false, ""};

  // Collect every power whose action keeps row vectors (0,...,0,y) inside
  // that same set, for every nonzero y.
  std::vector<IdxMatrix> kept;
  IdxMatrix P = I;
  for (std::int64_t e = 0; e < period; ++e) {
    bool keeps = true;
    for (std::int64_t y = 1; y < T.q && keeps; ++y) {
      // (0,...,0,y) * P = y * (last row of P)
      for (int c = 0; c < d - 1 && keeps; ++c) {
        keeps = T.times(y, P[static_cast<std::size_t>((d - 1) * d + c)]) == 0;
      }
      if (keeps) {
        keeps = T.times(y, P[static_cast<std::size_t>((d - 1) * d + (d - 1))]) != 0;
      }
    }
    if (keeps) kept.push_back(P);
    P = idx_mat_mul(T, P, M, d);
  }

  std::vector<IdxMatrix> expected;
  for (std::int64_t y = 1; y < T.q; ++y) {
    IdxMatrix S(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) S[static_cast<std::size_t>(i * d + i)] = y;
    expected.push_back(std::move(S));
  }
  std::sort(kept.begin(), kept.end());
  std::sort(expected.begin(), expected.end());
  if (kept != expected) {
    v.counterexample = "stabilizer has " + std::to_string(kept.size()) +
                       " elements, expected the " + std::to_string(T.q - 1) +
                       " nonzero scalar matrices";
    return v;
  }
  v.pass = true;
  return v;
}

Verdict check_row_independence(const Matrix& A) {
  const FieldTables T = build_tables(A.field());
  const int d = A.size();
  const IdxMatrix M = to_indices(A);
  const std::int64_t states = pow_i64(T.q, d);
  Verdict v{"row_independence", false, ""};

  IdxVector row(static_cast<std::size_t>(d));
  IdxVector next(static_cast<std::size_t>(d));
  for (std::int64_t alpha = 1; alpha < states; ++alpha) {
    // Stack alpha, alpha*A, ..., alpha*A^(d-1) and eliminate.
    std::vector<IdxVector> R;
    row = vec_from_code(T, alpha, d);
    R.push_back(row);
    for (int k = 1; k < d; ++k) {
      idx_row_step(T, R.back(), M, next, d);
      R.push_back(next);
    }
    bool singular = false;
    for (int col = 0; col < d && !singular; ++col) {
      int pivot = -1;
      for (int r = col; r < d; ++r) {
        if (R[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        singular = true;
        break;
      }
      std::swap(R[static_cast<std::size_t>(col)],
                R[static_cast<std::size_t>(pivot)]);
      const std::int64_t pinv =
          T.inv[static_cast<std::size_t>(R[static_cast<std::size_t>(col)]
                                          [static_cast<std::size_t>(col)])];
      for (int r = col + 1; r < d; ++r) {
        const std::int64_t factor = T.times(
            R[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], pinv);
        if (factor == 0) continue;
        for (int c = col; c < d; ++c) {
          auto& cell = R[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          cell = T.minus(cell, T.times(factor,
                                       R[static_cast<std::size_t>(col)]
                                        [static_cast<std::size_t>(c)]));
        }
      }
    }
    if (singular) {
      v.counterexample = "rows generated from vector " + std::to_string(alpha) +
                         " are linearly dependent";
      return v;
    }
  }
  v.pass = true;
  return v;
}

std::int64_t partition_sum(const PartitionInstance& partition) {
  std::vector<char> used(static_cast<std::size_t>(partition.total), 0);
  std::int64_t sum = 0;
  for (const auto& part : partition.parts) {
    for (std::int64_t element : part) {
      if (element < 0 || element >= partition.total) {
        fail(Errc::index_out_of_range, "partition element out of range");
      }
      if (used[static_cast<std::size_t>(element)]) {
        fail(Errc::invalid_argument, "partition parts are not disjoint");
      }
      used[static_cast<std::size_t>(element)] = 1;
    }
    const std::int64_t size = static_cast<std::int64_t>(part.size());
    sum += size * (size - 1);
  }
  return sum;
}

Verdict check_partition_bound(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) {
    fail(Errc::bad_dimensions, "partition bound needs m, n >= 1");
  }
  Verdict v{"partition_bound", false, ""};
  const std::int64_t total = m * n;
  const std::int64_t bound = m * m * n - m * n;

  const auto examine = [&](const std::vector<std::int64_t>& sizes) {
    const std::int64_t sum = partition_sum(instance_from_sizes(total, sizes));
    const bool balanced =
        std::all_of(sizes.begin(), sizes.end(),
                    [m](std::int64_t c) { return c == m; });
    if (sum < bound) {
      v.counterexample = "composition " + sizes_to_string(sizes) +
                         " gives sum " + std::to_string(sum) +
                         " below bound " + std::to_string(bound);
      return false;
    }
    if (balanced != (sum == bound)) {
      v.counterexample = "composition " + sizes_to_string(sizes) +
                         " breaks the equality characterization";
      return false;
    }
    return true;
  };

  if (total <= 12) {
    std::vector<std::int64_t> sizes;
    if (!for_each_composition(total, n, sizes, examine)) return v;
  } else {
    // Too many compositions to enumerate: deterministic sample, always
    // including the balanced split and the fully concentrated one.
    std::vector<std::int64_t> balanced(static_cast<std::size_t>(n), m);
    if (!examine(balanced)) return v;
    std::vector<std::int64_t> concentrated(static_cast<std::size_t>(n), 0);
    concentrated[0] = total;
    if (!examine(concentrated)) return v;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^
                        static_cast<std::uint64_t>(total * 131 + n));
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(n) + 1);
    for (int sample = 0; sample < 2000; ++sample) {
      cuts.front() = 0;
      cuts.back() = total;
      for (std::size_t i = 1; i < cuts.size() - 1; ++i) {
        cuts[i] = static_cast<std::int64_t>(rng() % (static_cast<std::uint64_t>(total) + 1));
      }
      std::sort(cuts.begin(), cuts.end());
      std::vector<std::int64_t> sizes;
      sizes.reserve(static_cast<std::size_t>(n));
      for (std::size_t i = 1; i < cuts.size(); ++i) {
        sizes.push_back(cuts[i] - cuts[i - 1]);
      }
      if (!examine(sizes)) return v;
    }
  }
  v.pass = true;
  return v;
}

MetricsReport naive_metrics(const Pattern& P, std::int64_t continual_cap,
                            std::int64_t budget) {
  const std::int64_t mn = P.resource_count();
  const std::int64_t L = P.state_period();
  const std::int64_t n = P.frame().n;
  const std::int64_t m = P.frame().m;
  if (mn * L > budget) {
    fail(Errc::cap_exceeded,
         "pattern size " + std::to_string(mn) + " x " + std::to_string(L) +
             " exceeds evaluation budget " + std::to_string(budget));
  }
  if (continual_cap < 0) {
    fail(Errc::invalid_argument, "continual cap must be non-negative");
  }

  // Slot table. Companion frames are each re-derived from scratch as A^t
  // applied to the frame-0 states — no incremental reuse, so the scan
  // confirms periodicity instead of assuming it. The baseline is cheap
  // enough to query literally slot by slot.
  std::vector<std::vector<std::int64_t>> j(
      static_cast<std::size_t>(2 * L),
      std::vector<std::int64_t>(static_cast<std::size_t>(mn), 0));
  if (P.kind() == Pattern::Kind::companion) {
    const Field& F = P.field();
    const int r = P.freq_dims();
    const Matrix& A = P.step_matrix();
    std::vector<StateVector> start;
    start.reserve(static_cast<std::size_t>(mn));
    for (std::int64_t s = 0; s < mn; ++s) {
      const Slot x = P.slot(0, s);
      start.push_back(resource_to_state(F, r, x.i + x.j * m));
    }
    for (std::int64_t t = 0; t < 2 * L; ++t) {
      const Matrix W = mat_pow(A, t);
      for (std::int64_t s = 0; s < mn; ++s) {
        const StateVector v = mat_vec_mul(W, start[static_cast<std::size_t>(s)]);
        j[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
            F.to_index(v[static_cast<std::size_t>(r)]);
      }
    }
  } else {
    for (std::int64_t t = 0; t < 2 * L; ++t) {
      for (std::int64_t s = 0; s < mn; ++s) {
        j[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
            P.slot(t, s).j;
      }
    }
  }
  const auto at = [&](std::int64_t t, std::int64_t s) {
    return j[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
  };

  MetricsReport rep;

  // Column period: try every shift, checking the collide-or-not relation
  // of every ordered pair at every frame.
  for (std::int64_t T = 1; T <= L; ++T) {
    bool ok = true;
    for (std::int64_t t = 0; t < L && ok; ++t) {
      for (std::int64_t s = 0; s < mn && ok; ++s) {
        for (std::int64_t sp = 0; sp < mn && ok; ++sp) {
          if (s == sp) continue;
          ok = (at(t, s) == at(t, sp)) == (at(t + T, s) == at(t + T, sp));
        }
      }
    }
    if (ok) {
      rep.column_period = T;
      break;
    }
  }

  // Maximal collision ratio over every unordered pair.
  if (mn >= 2) {
    std::int64_t best = -1;
    PairWitness wit;
    for (std::int64_t s = 0; s < mn; ++s) {
      for (std::int64_t sp = s + 1; sp < mn; ++sp) {
        std::int64_t count = 0;
        for (std::int64_t t = 0; t < L; ++t) count += at(t, s) == at(t, sp);
        if (count > best) {
          best = count;
          wit = PairWitness{s, sp};
        }
      }
    }
    const std::int64_t g = std::gcd(best, L);
    rep.max_collision_ratio = Ratio{best / g, L / g};
    rep.ratio_witness = wit;
  } else {
    rep.max_collision_ratio = Ratio{0, 1};
    rep.ratio_witness = std::nullopt;
  }

  // Longest collision run over the doubled window.
  std::int64_t gbest = 0;
  std::optional<RunWitness> gwit;
  for (std::int64_t s = 0; s < mn; ++s) {
    for (std::int64_t sp = s + 1; sp < mn; ++sp) {
      std::int64_t cur = 0;
      std::int64_t best = 0;
      std::int64_t start = 0;
      for (std::int64_t t = 0; t < 2 * L; ++t) {
        if (at(t, s) == at(t, sp)) {
          ++cur;
          if (cur > best) {
            best = cur;
            start = t - cur + 1;
          }
        } else {
          cur = 0;
        }
      }
      if (best > gbest) {
        gbest = best;
        gwit = RunWitness{s, sp, start};
      }
    }
  }
  rep.max_continual.value = gbest;
  rep.max_continual.cap_exceeded =
      (L > 0 && gbest == 2 * L) || gbest > continual_cap;
  rep.continual_witness = gwit;

  // Occupancy balance, counted directly.
  rep.occupancy_balanced = true;
  for (std::int64_t t = 0; t < L && rep.occupancy_balanced; ++t) {
    std::vector<std::int64_t> hist(static_cast<std::size_t>(n), 0);
    for (std::int64_t s = 0; s < mn; ++s) {
      ++hist[static_cast<std::size_t>(at(t, s))];
    }
    for (std::int64_t c : hist) {
      if (c != m) {
        rep.occupancy_balanced = false;
        break;
      }
    }
  }

  // Bounds, recomputed from scratch.
  if (m == 1) {
    rep.bounds.ratio = Ratio{0, 1};
  } else {
    const std::int64_t g = std::gcd(m - 1, m * n - 1);
    rep.bounds.ratio = Ratio{(m - 1) / g, (m * n - 1) / g};
  }
  rep.bounds.continual.m = m;
  rep.bounds.continual.n = n;
  std::int64_t e = 0;
  std::int64_t value = 1;
  while (value < m) {
    value *= n;
    ++e;
  }
  rep.bounds.continual.ceil_value = e;
  rep.bounds.continual.exact = value == m;
  rep.bounds.continual.exact_value = rep.bounds.continual.exact ? e : 0;
  return rep;
}

std::vector<Verdict> run_all_checks(const MonicPoly& f) {
  const Matrix A = companion_matrix(f);
  const std::int64_t q = f.field().size();
  const int r = f.degree() - 1;
  std::vector<Verdict> verdicts;
  verdicts.push_back(check_group_order(A));
  verdicts.push_back(check_transitivity_columns(A));
  verdicts.push_back(check_transitivity_rows(A));
  verdicts.push_back(check_stabilizer(A));
  verdicts.push_back(check_row_independence(A));
  verdicts.push_back(check_partition_bound(checked_pow(q, r), q));
  return verdicts;
}

}  // namespace hoplattice::oracle
