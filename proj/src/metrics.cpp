#include "hoplattice/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hoplattice {

namespace {

// j_rows[t][s] = time slot of resource s at frame t, for t in [0, frames).
std::vector<std::vector<std::int64_t>> j_rows(const Pattern& P,
                                              std::int64_t frames) {
  const std::int64_t mn = P.resource_count();
  std::vector<std::vector<std::int64_t>> j(
      static_cast<std::size_t>(frames),
      std::vector<std::int64_t>(static_cast<std::size_t>(mn), 0));
  for (const ScheduleRow& row : P.schedule(0, frames)) {
    j[static_cast<std::size_t>(row.t)][static_cast<std::size_t>(row.s)] = row.j;
  }
  return j;
}

// Canonical form of the grouping induced by one frame: group ids assigned
// in order of first appearance, so two frames get equal signatures exactly
// when they partition the resources the same way, whatever the labels.
std::vector<std::int64_t> partition_signature(
    const std::vector<std::int64_t>& jrow, std::int64_t n) {
  std::vector<std::int64_t> gid(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> sig(jrow.size());
  std::int64_t next = 0;
  for (std::size_t s = 0; s < jrow.size(); ++s) {
    std::int64_t& g = gid[static_cast<std::size_t>(jrow[s])];
    if (g < 0) g = next++;
    sig[s] = g;
  }
  return sig;
}

std::int64_t column_period_impl(const std::vector<std::vector<std::int64_t>>& j,
                                std::int64_t L, std::int64_t n) {
  std::vector<std::vector<std::int64_t>> sigs;
  sigs.reserve(static_cast<std::size_t>(L));
  for (std::int64_t t = 0; t < L; ++t) {
    sigs.push_back(partition_signature(j[static_cast<std::size_t>(t)], n));
  }
  for (std::int64_t T = 1; T <= L; ++T) {
    bool ok = true;
    for (std::int64_t t = 0; t < L && ok; ++t) {
      ok = sigs[static_cast<std::size_t>(t)] ==
           sigs[static_cast<std::size_t>((t + T) % L)];
    }
    if (ok) return T;  // T = L always qualifies, so this always returns
  }
  throw std::logic_error("column period search fell through");
}

RatioResult pairwise_impl(const std::vector<std::vector<std::int64_t>>& j,
                          std::int64_t L, std::int64_t mn) {
  if (mn < 2) return RatioResult{Ratio{0, 1}, std::nullopt};
  std::int64_t best = -1;
  PairWitness wit;
  for (std::int64_t s = 0; s < mn; ++s) {
    for (std::int64_t sp = s + 1; sp < mn; ++sp) {
      std::int64_t count = 0;
      for (std::int64_t t = 0; t < L; ++t) {
        const auto& row = j[static_cast<std::size_t>(t)];
        count += row[static_cast<std::size_t>(s)] ==
                 row[static_cast<std::size_t>(sp)];
      }
      if (count > best) {
        best = count;
        wit = PairWitness{s, sp};
      }
    }
  }
  return RatioResult{Ratio::reduced(best, L), wit};
}

// Companion shortcut: whether two resources collide at frame t depends
// only on the difference of their state vectors (the step matrix is
// linear), so one orbit walk per nonzero difference vector counts the
// collisions of every pair sharing that difference.
RatioResult companion_fast(const Pattern& P) {
  const std::int64_t L = P.state_period();
  const std::int64_t mn = P.resource_count();
  const std::int64_t m = P.frame().m;
  const Field& F = P.field();
  const int r = P.freq_dims();
  const Matrix& A = P.step_matrix();
  const std::size_t last = static_cast<std::size_t>(r);

  std::vector<std::int64_t> count(static_cast<std::size_t>(mn), 0);
  for (std::int64_t code = 1; code < mn; ++code) {
    StateVector v = resource_to_state(F, r, code);
    std::int64_t zeros = 0;
    for (std::int64_t t = 0; t < L; ++t) {
      if (F.is_zero(v[last])) ++zeros;
      v = mat_vec_mul(A, v);
    }
    count[static_cast<std::size_t>(code)] = zeros;
  }
  const std::int64_t best =
      *std::max_element(count.begin() + 1, count.end());

  // Lexicographically smallest witness: resource 0 pairs with everything
  // and its differences sweep every nonzero vector.
  const auto state_code = [&](std::int64_t s) {
    const Slot x = P.slot(0, s);
    return x.i + x.j * m;
  };
  const StateVector v0 = resource_to_state(F, r, state_code(0));
  PairWitness wit{0, 1};
  for (std::int64_t sp = 1; sp < mn; ++sp) {
    const StateVector vs = resource_to_state(F, r, state_code(sp));
    StateVector diff(v0.size());
    for (std::size_t idx = 0; idx < v0.size(); ++idx) {
      diff[idx] = F.sub(v0[idx], vs[idx]);
    }
    if (count[static_cast<std::size_t>(state_to_resource(F, r, diff))] == best) {
      wit = PairWitness{0, sp};
      break;
    }
  }
  return RatioResult{Ratio::reduced(best, L), wit};
}

ContinualResult continual_impl(const std::vector<std::vector<std::int64_t>>& j2,
                               std::int64_t L, std::int64_t mn,
                               std::int64_t cap) {
  if (cap < 0) {
    fail(Errc::invalid_argument, "continual cap must be non-negative");
  }
  const std::int64_t window = 2 * L;
  std::int64_t gbest = 0;
  std::optional<RunWitness> gwit;
  for (std::int64_t s = 0; s < mn; ++s) {
    for (std::int64_t sp = s + 1; sp < mn; ++sp) {
      std::int64_t cur = 0;
      std::int64_t best = 0;
      std::int64_t start = 0;
      for (std::int64_t t = 0; t < window; ++t) {
        const auto& row = j2[static_cast<std::size_t>(t)];
        if (row[static_cast<std::size_t>(s)] ==
            row[static_cast<std::size_t>(sp)]) {
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
  const bool endless = window > 0 && gbest == window;
  return ContinualResult{ContinualCount{gbest, endless || gbest > cap}, gwit};
}

bool balanced_impl(const std::vector<std::vector<std::int64_t>>& j,
                   std::int64_t L, const FrameStructure& frame) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(frame.n), 0);
  for (std::int64_t t = 0; t < L; ++t) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::int64_t s = 0; s < frame.m * frame.n; ++s) {
      ++hist[static_cast<std::size_t>(j[static_cast<std::size_t>(t)]
                                       [static_cast<std::size_t>(s)])];
    }
    for (std::int64_t c : hist) {
      if (c != frame.m) return false;
    }
  }
  return true;
}

void check_pair(const Pattern& P, std::int64_t s, std::int64_t s_prime) {
  if (s == s_prime) {
    fail(Errc::same_pair, "the two resources must differ");
  }
  const std::int64_t mn = P.resource_count();
  if (s < 0 || s >= mn || s_prime < 0 || s_prime >= mn) {
    fail(Errc::index_out_of_range, "resource index outside [0, mn)");
  }
}

}  // namespace

std::int64_t column_period(const Pattern& P) {
  const std::int64_t L = P.state_period();
  const std::int64_t T = column_period_impl(j_rows(P, L), L, P.frame().n);
  if (L % T != 0) {
    throw std::logic_error("column period does not divide the state period");
  }
  return T;
}

std::int64_t collision_count_pair(const Pattern& P, std::int64_t s,
                                  std::int64_t s_prime) {
  check_pair(P, s, s_prime);
  const std::int64_t L = P.state_period();
  std::int64_t count = 0;
  for (std::int64_t t = 0; t < L; ++t) {
    count += P.slot(t, s).j == P.slot(t, s_prime).j;
  }
  return count;
}

RatioResult max_collision_ratio(const Pattern& P) {
  if (P.kind() == Pattern::Kind::companion) return companion_fast(P);
  return pairwise_impl(j_rows(P, P.state_period()), P.state_period(),
                       P.resource_count());
}

RatioResult max_collision_ratio_pairwise(const Pattern& P) {
  return pairwise_impl(j_rows(P, P.state_period()), P.state_period(),
                       P.resource_count());
}

ContinualResult max_continual_collisions(const Pattern& P, std::int64_t cap) {
  const std::int64_t L = P.state_period();
  return continual_impl(j_rows(P, 2 * L), L, P.resource_count(), cap);
}

std::vector<std::int64_t> occupancy(const Pattern& P, std::int64_t t) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(P.frame().n), 0);
  for (std::int64_t s = 0; s < P.resource_count(); ++s) {
    ++hist[static_cast<std::size_t>(P.slot(t, s).j)];
  }
  return hist;
}

Bounds lower_bounds(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1 || (m > 1 && n < 2)) {
    fail(Errc::invalid_argument, "bounds need m >= 1 and n >= 2 (or m = 1)");
  }
  Bounds b;
  b.ratio = m == 1 ? Ratio{0, 1} : Ratio::reduced(m - 1, m * n - 1);
  b.continual.m = m;
  b.continual.n = n;
  std::int64_t e = 0;
  std::int64_t value = 1;
  while (value < m) {
    value *= n;
    ++e;
  }
  b.continual.ceil_value = e;
  b.continual.exact = value == m;
  b.continual.exact_value = b.continual.exact ? e : 0;
  return b;
}

std::optional<std::int64_t> first_rendezvous(const Pattern& P, std::int64_t s,
                                             std::int64_t s_prime) {
  check_pair(P, s, s_prime);
  for (std::int64_t t = 0; t < P.state_period(); ++t) {
    if (P.slot(t, s).j != P.slot(t, s_prime).j) return t;
  }
  return std::nullopt;
}

MetricsReport evaluate(const Pattern& P, std::int64_t continual_cap,
                       std::int64_t budget) {
  const std::int64_t mn = P.resource_count();
  const std::int64_t L = P.state_period();
  if (mn * L > budget) {
    fail(Errc::cap_exceeded,
         "pattern size " + std::to_string(mn) + " x " + std::to_string(L) +
             " exceeds evaluation budget " + std::to_string(budget));
  }
  const auto j2 = j_rows(P, 2 * L);
  const std::vector<std::vector<std::int64_t>> j(j2.begin(),
                                                 j2.begin() + L);

  MetricsReport rep;
  rep.column_period = column_period_impl(j, L, P.frame().n);
  if (L % rep.column_period != 0) {
    throw std::logic_error("column period does not divide the state period");
  }
  const RatioResult ratio = P.kind() == Pattern::Kind::companion
                                ? companion_fast(P)
                                : pairwise_impl(j, L, mn);
  rep.max_collision_ratio = ratio.ratio;
  rep.ratio_witness = ratio.witness;
  const ContinualResult cont = continual_impl(j2, L, mn, continual_cap);
  rep.max_continual = cont.count;
  rep.continual_witness = cont.witness;
  rep.occupancy_balanced = balanced_impl(j, L, P.frame());
  rep.bounds = lower_bounds(P.frame().m, P.frame().n);
  return rep;
}

bool meets_ratio_bound(const MetricsReport& report) {
  return report.max_collision_ratio == report.bounds.ratio;
}

bool meets_continual_bound(const MetricsReport& report) {
  return report.bounds.continual.exact && !report.max_continual.cap_exceeded &&
         report.max_continual.value == report.bounds.continual.exact_value;
}

}  // namespace hoplattice
