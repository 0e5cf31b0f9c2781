#pragma once

#include <cstdint>
#include <vector>

#include "hoplattice/error.hpp"

namespace hoplattice {

// One element of F_{p^k} in polynomial-basis coordinates over F_p.
// coeffs[i] is the coefficient of x^i; the vector always has length k
// and every entry lies in [0, p).
struct FieldElement {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Default cap on enumeration sizes (field order, polynomial search
// spaces, state spaces). Generous for everything this library verifies
// exhaustively, small enough that a typo fails fast.
inline constexpr std::int64_t kDefaultSizeCap = std::int64_t{1} << 20;

// base^exp for non-negative exp; throws on int64 overflow so callers
// never wrap around silently.
std::int64_t checked_pow(std::int64_t base, int exp);

bool is_prime(std::int64_t n);

// The finite field F_{p^k}. Prime fields (k = 1) reduce integers mod p.
// Extension fields compute in F_p[x] modulo the canonical modulus: the
// monic irreducible polynomial of degree k whose non-leading coefficients,
// read as base-p digits (constant term least significant), give the
// smallest integer. Fixing the modulus this way makes every run of every
// tool agree on the representation.
//
// Elements are indexed 0..q-1 by the same digit rule, so index 0 is the
// zero element and index 1 is the multiplicative identity.
class Field {
 public:
  Field(std::int64_t p, int k, std::int64_t size_cap = kDefaultSizeCap);

  std::int64_t characteristic() const { return p_; }
  int extension_degree() const { return k_; }
  std::int64_t size() const { return q_; }

  // Modulus coefficients over F_p, low degree first, length k+1 with a
  // leading 1. Empty for prime fields.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  bool is_zero(const FieldElement& a) const;

  FieldElement from_index(std::int64_t index) const;
  std::int64_t to_index(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // Multiplicative inverse, computed as a^(q-2). Division by zero throws.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::int64_t e) const;

  friend bool operator==(const Field& lhs, const Field& rhs) {
    return lhs.p_ == rhs.p_ && lhs.k_ == rhs.k_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  void check_element(const FieldElement& a) const;

  std::int64_t p_;
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
};

}  // namespace hoplattice
