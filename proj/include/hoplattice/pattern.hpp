#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hoplattice/polyalg.hpp"

namespace hoplattice {

// An m x n frame: m frequency slots, n time slots per hop period.
struct FrameStructure {
  std::int64_t m;
  std::int64_t n;

  friend bool operator==(const FrameStructure&, const FrameStructure&) = default;
};

// Where one resource sits during one frame: frequency i, time slot j.
struct Slot {
  std::int64_t i;
  std::int64_t j;

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct ScheduleRow {
  std::int64_t t;
  std::int64_t s;
  std::int64_t i;
  std::int64_t j;

  friend bool operator==(const ScheduleRow&, const ScheduleRow&) = default;
};

// Square matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix(const Field& F, int size);  // zero matrix
  static Matrix identity(const Field& F, int size);

  const Field& field() const { return field_; }
  int size() const { return size_; }
  const FieldElement& at(int row, int col) const;
  void set(int row, int col, FieldElement value);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  int size_;
  std::vector<FieldElement> entries_;
};

using StateVector = std::vector<FieldElement>;

// Companion matrix of a monic polynomial f of degree d >= 2: ones on the
// subdiagonal, and the last column holds the negated non-leading
// coefficients of f (constant term in row 0). Multiplying a coefficient
// column by this matrix is multiplication by x modulo f.
Matrix companion_matrix(const MonicPoly& f);

StateVector mat_vec_mul(const Matrix& A, const StateVector& v);
Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix mat_pow(const Matrix& A, std::int64_t e);

// Resource index <-> state vector over F_q^(r+1). The base-q digits of s
// (least significant first) become coordinates 0..r; coordinates 0..r-1
// encode the frequency index, coordinate r the time slot.
StateVector resource_to_state(const Field& F, int r, std::int64_t s);
std::int64_t state_to_resource(const Field& F, int r, const StateVector& v);

// A deterministic hopping pattern: every resource s occupies exactly one
// slot per frame, and slot(t, s) is periodic in t with period
// state_period(). Two constructions:
//
//   companion  - states in F_q^(r+1) advanced by the companion matrix of
//                a primitive polynomial; m = q^r, n = q, period q^(r+1)-1.
//   linear     - the classic baseline on an m x n frame (m <= n):
//                resource (i0, j0) sits at (i0, (j0 + i0*t) mod n),
//                period n.
class Pattern {
 public:
  enum class Kind { companion, linear };

  static Pattern companion(const Field& F, int r, const MonicPoly& f,
                           std::int64_t size_cap = kDefaultSizeCap);
  static Pattern linear(std::int64_t m, std::int64_t n);

  Kind kind() const { return kind_; }
  FrameStructure frame() const { return frame_; }
  std::int64_t resource_count() const { return frame_.m * frame_.n; }
  std::int64_t state_period() const { return period_; }

  Slot slot(std::int64_t t, std::int64_t s) const;

  // Rows for frames t0 <= t < t1, ascending t then ascending s. Steps
  // states incrementally instead of powering the matrix per frame.
  std::vector<ScheduleRow> schedule(std::int64_t t0, std::int64_t t1) const;

  // Same pattern with the frame-0 assignment composed with a permutation
  // of the resource indices: slot'(t, s) = slot(t, perm[s]).
  Pattern relabeled(std::vector<std::int64_t> perm) const;

  // Companion-only accessors.
  const Field& field() const;
  int freq_dims() const;
  const MonicPoly& polynomial() const;
  const Matrix& step_matrix() const;

 private:
  struct CompanionData {
    Field field;
    int r;
    MonicPoly poly;
    Matrix step;
  };

  Pattern() = default;

  std::int64_t relabel(std::int64_t s) const;

  Kind kind_ = Kind::linear;
  FrameStructure frame_{0, 0};
  std::int64_t period_ = 0;
  std::optional<CompanionData> comp_;
  std::vector<std::int64_t> relabel_;  // empty = identity
};

}  // namespace hoplattice
