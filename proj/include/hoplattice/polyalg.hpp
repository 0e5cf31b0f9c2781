#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hoplattice/gf.hpp"

namespace hoplattice {

// Dense polynomial over a finite field, low degree first.
// Invariant: an empty coefficient vector is the zero polynomial; otherwise
// the leading coefficient is nonzero.
struct Poly {
  Field field;
  std::vector<FieldElement> coeffs;

  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field == b.field && a.coeffs == b.coeffs;
  }
};

// Strips leading zeros so the Poly invariant holds.
Poly make_poly(const Field& F, std::vector<FieldElement> coeffs);
Poly poly_zero(const Field& F);
Poly poly_one(const Field& F);
Poly poly_x(const Field& F);

// Monic polynomial of degree >= 1; the working modulus type for all field
// extension and order computations.
class MonicPoly {
 public:
  // coeffs low degree first, length degree+1, leading coefficient 1.
  MonicPoly(const Field& F, std::vector<FieldElement> coeffs);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct Factorization {
  std::int64_t value;
  // prime -> multiplicity, primes strictly ascending.
  std::vector<std::pair<std::int64_t, int>> primes;
};

// Product of g and h reduced modulo f. Both inputs must already be
// reduced (degree < deg f) and share f's field.
Poly poly_mul_mod(const Poly& g, const Poly& h, const MonicPoly& f);

// g^e mod f by repeated squaring; e >= 0; g^0 = 1.
Poly poly_pow_mod(const Poly& g, std::int64_t e, const MonicPoly& f);

// Exhaustive trial division by every monic polynomial of degree
// 1..deg(f)/2. Degree-1 polynomials are irreducible by convention.
bool is_irreducible(const MonicPoly& f, std::int64_t enum_cap = kDefaultSizeCap);

// Trial-division factorization; n >= 2.
Factorization factor_integer(std::int64_t n);

// Multiplicative order of x modulo f. Requires f irreducible with a
// nonzero constant term. Starts from N = q^deg(f) - 1 and divides out
// prime factors while the corresponding power of x is still 1.
std::int64_t order_of_x(const MonicPoly& f);

// True when f is irreducible, has a nonzero constant term, and x attains
// the full multiplicative order q^deg(f) - 1 modulo f.
bool is_primitive(const MonicPoly& f);

// The canonical primitive polynomial of the given degree: smallest base-q
// encoding (see monic_from_code) among all primitive ones. Deterministic
// for fixed (field, degree).
MonicPoly find_primitive(const Field& F, int degree,
                         std::int64_t size_cap = kDefaultSizeCap);

// Every primitive monic polynomial of the given degree, ascending by code.
std::vector<MonicPoly> all_primitive(const Field& F, int degree,
                                     std::int64_t size_cap = kDefaultSizeCap);

// The monic polynomial of the given degree whose non-leading coefficients
// are the base-q digits of `code`, constant term = least significant
// digit. This encoding induces the canonical ordering used by every
// deterministic search in the library.
MonicPoly monic_from_code(const Field& F, int degree, std::int64_t code);
std::int64_t monic_to_code(const MonicPoly& f);

}  // namespace hoplattice
