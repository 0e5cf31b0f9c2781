#include "hoplattice/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace hoplattice {

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) {
    fail(Errc::field_mismatch,
         std::string(what) + " mixes elements of different fields");
  }
}

}  // namespace

Matrix::Matrix(const Field& F, int size) : field_(F), size_(size) {
  if (size < 1) {
    fail(Errc::dimension_mismatch, "matrix size must be at least 1");
  }
  entries_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size),
                  F.zero());
}

Matrix Matrix::identity(const Field& F, int size) {
  Matrix m(F, size);
  for (int i = 0; i < size; ++i) m.set(i, i, F.one());
  return m;
}

const FieldElement& Matrix::at(int row, int col) const {
  if (row < 0 || row >= size_ || col < 0 || col >= size_) {
    fail(Errc::index_out_of_range, "matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(col)];
}

void Matrix::set(int row, int col, FieldElement value) {
  if (row < 0 || row >= size_ || col < 0 || col >= size_) {
    fail(Errc::index_out_of_range, "matrix index out of range");
  }
  field_.to_index(value);  // validates coordinates
  entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(col)] = std::move(value);
}

Matrix companion_matrix(const MonicPoly& f) {
  const Field& F = f.field();
  const int d = f.degree();
  if (d < 2) {
    fail(Errc::degree_too_small, "companion matrix needs degree >= 2");
  }
  Matrix A(F, d);
  for (int row = 1; row < d; ++row) {
    A.set(row, row - 1, F.one());
  }
  for (int row = 0; row < d; ++row) {
    A.set(row, d - 1, F.neg(f.coeffs()[static_cast<std::size_t>(row)]));
  }
  return A;
}

StateVector mat_vec_mul(const Matrix& A, const StateVector& v) {
  const Field& F = A.field();
  if (static_cast<int>(v.size()) != A.size()) {
    fail(Errc::dimension_mismatch, "matrix and vector sizes differ");
  }
  StateVector result(v.size(), F.zero());
  for (int row = 0; row < A.size(); ++row) {
    FieldElement acc = F.zero();
    for (int col = 0; col < A.size(); ++col) {
      acc = F.add(acc, F.mul(A.at(row, col), v[static_cast<std::size_t>(col)]));
    }
    result[static_cast<std::size_t>(row)] = std::move(acc);
  }
  return result;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  require_same_field(A.field(), B.field(), "mat_mul");
  if (A.size() != B.size()) {
    fail(Errc::dimension_mismatch, "matrix sizes differ");
  }
  const Field& F = A.field();
  Matrix C(F, A.size());
  for (int row = 0; row < A.size(); ++row) {
    for (int col = 0; col < A.size(); ++col) {
      FieldElement acc = F.zero();
      for (int k = 0; k < A.size(); ++k) {
        acc = F.add(acc, F.mul(A.at(row, k), B.at(k, col)));
      }
      C.set(row, col, std::move(acc));
    }
  }
  return C;
}

Matrix mat_pow(const Matrix& A, std::int64_t e) {
  if (e < 0) {
    fail(Errc::invalid_argument, "matrix exponent must be non-negative");
  }
  Matrix result = Matrix::identity(A.field(), A.size());
  Matrix base = A;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

StateVector resource_to_state(const Field& F, int r, std::int64_t s) {
  if (r < 1) {
    fail(Errc::degree_too_small, "state space needs r >= 1");
  }
  const std::int64_t total = checked_pow(F.size(), r + 1);
  if (s < 0 || s >= total) {
    fail(Errc::index_out_of_range,
         "resource " + std::to_string(s) + " outside [0, " +
             std::to_string(total) + ")");
  }
  StateVector v;
  v.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    v.push_back(F.from_index(s % F.size()));
    s /= F.size();
  }
  return v;
}

std::int64_t state_to_resource(const Field& F, int r, const StateVector& v) {
  if (static_cast<int>(v.size()) != r + 1) {
    fail(Errc::dimension_mismatch, "state vector has wrong length");
  }
  std::int64_t s = 0;
  for (int i = r; i >= 0; --i) {
    s = s * F.size() + F.to_index(v[static_cast<std::size_t>(i)]);
  }
  return s;
}

Pattern Pattern::companion(const Field& F, int r, const MonicPoly& f,
                           std::int64_t size_cap) {
  require_same_field(F, f.field(), "companion pattern");
  if (r < 1) {
    fail(Errc::degree_too_small, "companion pattern needs r >= 1");
  }
  if (f.degree() != r + 1) {
    fail(Errc::degree_mismatch,
         "polynomial degree " + std::to_string(f.degree()) +
             " does not match r + 1 = " + std::to_string(r + 1));
  }
  const std::int64_t states = checked_pow(F.size(), r + 1);
  if (states > size_cap) {
    fail(Errc::size_cap_exceeded,
         "state space " + std::to_string(states) + " exceeds cap " +
             std::to_string(size_cap));
  }
  if (!is_primitive(f)) {
    fail(Errc::not_primitive,
         "polynomial is not primitive; the orbit would not cover the frame");
  }
  Pattern P;
  P.kind_ = Kind::companion;
  P.frame_ = FrameStructure{checked_pow(F.size(), r), F.size()};
  P.period_ = states - 1;
  P.comp_.emplace(CompanionData{F, r, f, companion_matrix(f)});
  return P;
}

Pattern Pattern::linear(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1 || m > n) {
    fail(Errc::bad_dimensions, "baseline requires 1 <= m <= n");
  }
  Pattern P;
  P.kind_ = Kind::linear;
  P.frame_ = FrameStructure{m, n};
  P.period_ = n;
  return P;
}

std::int64_t Pattern::relabel(std::int64_t s) const {
  return relabel_.empty() ? s : relabel_[static_cast<std::size_t>(s)];
}

Slot Pattern::slot(std::int64_t t, std::int64_t s) const {
  if (t < 0) {
    fail(Errc::invalid_argument, "frame index must be non-negative");
  }
  if (s < 0 || s >= resource_count()) {
    fail(Errc::index_out_of_range,
         "resource " + std::to_string(s) + " outside [0, " +
             std::to_string(resource_count()) + ")");
  }
  const std::int64_t sp = relabel(s);
  const std::int64_t tp = t % period_;
  if (kind_ == Kind::linear) {
    const std::int64_t i0 = sp / frame_.n;
    const std::int64_t j0 = sp % frame_.n;
    return Slot{i0, (j0 + i0 * tp) % frame_.n};
  }
  const CompanionData& c = *comp_;
  StateVector v = resource_to_state(c.field, c.r, sp);
  if (tp > 0) {
    v = mat_vec_mul(mat_pow(c.step, tp), v);
  }
  std::int64_t i = 0;
  for (int d = c.r - 1; d >= 0; --d) {
    i = i * c.field.size() + c.field.to_index(v[static_cast<std::size_t>(d)]);
  }
  return Slot{i, c.field.to_index(v[static_cast<std::size_t>(c.r)])};
}

std::vector<ScheduleRow> Pattern::schedule(std::int64_t t0, std::int64_t t1) const {
  if (t0 < 0 || t1 < t0) {
    fail(Errc::invalid_argument, "schedule range must satisfy 0 <= t0 <= t1");
  }
  std::vector<ScheduleRow> rows;
  rows.reserve(static_cast<std::size_t>((t1 - t0) * resource_count()));
  if (kind_ == Kind::linear) {
    for (std::int64_t t = t0; t < t1; ++t) {
      for (std::int64_t s = 0; s < resource_count(); ++s) {
        const Slot x = slot(t, s);
        rows.push_back(ScheduleRow{t, s, x.i, x.j});
      }
    }
    return rows;
  }
  // Companion: position every state at frame t0 once, then advance all of
  // them one multiplication per frame.
  const CompanionData& c = *comp_;
  const Matrix start = mat_pow(c.step, t0 % period_);
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(resource_count()));
  for (std::int64_t s = 0; s < resource_count(); ++s) {
    states.push_back(mat_vec_mul(start, resource_to_state(c.field, c.r, relabel(s))));
  }
  for (std::int64_t t = t0; t < t1; ++t) {
    for (std::int64_t s = 0; s < resource_count(); ++s) {
      const StateVector& v = states[static_cast<std::size_t>(s)];
      std::int64_t i = 0;
      for (int d = c.r - 1; d >= 0; --d) {
        i = i * c.field.size() + c.field.to_index(v[static_cast<std::size_t>(d)]);
      }
      rows.push_back(ScheduleRow{t, s, i,
                                 c.field.to_index(v[static_cast<std::size_t>(c.r)])});
    }
    if (t + 1 < t1) {
      for (auto& v : states) v = mat_vec_mul(c.step, v);
    }
  }
  return rows;
}

Pattern Pattern::relabeled(std::vector<std::int64_t> perm) const {
  const std::int64_t count = resource_count();
  if (static_cast<std::int64_t>(perm.size()) != count) {
    fail(Errc::dimension_mismatch, "permutation size must equal mn");
  }
  std::vector<std::int64_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::int64_t i = 0; i < count; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) {
      fail(Errc::invalid_argument, "relabeling must be a permutation of 0..mn-1");
    }
  }
  Pattern P = *this;
  if (relabel_.empty()) {
    P.relabel_ = std::move(perm);
  } else {
    std::vector<std::int64_t> composed(perm.size());
    for (std::size_t s = 0; s < perm.size(); ++s) {
      composed[s] = relabel_[static_cast<std::size_t>(perm[s])];
    }
    P.relabel_ = std::move(composed);
  }
  return P;
}

const Field& Pattern::field() const {
  if (!comp_) throw std::logic_error("linear pattern has no field");
  return comp_->field;
}

int Pattern::freq_dims() const {
  if (!comp_) throw std::logic_error("linear pattern has no state dimensions");
  return comp_->r;
}

const MonicPoly& Pattern::polynomial() const {
  if (!comp_) throw std::logic_error("linear pattern has no polynomial");
  return comp_->poly;
}

const Matrix& Pattern::step_matrix() const {
  if (!comp_) throw std::logic_error("linear pattern has no step matrix");
  return comp_->step;
}

}  // namespace hoplattice
