#include "hoplattice/gf.hpp"

#include <limits>
#include <string>

namespace hoplattice {

namespace {

// --- arithmetic on raw coefficient vectors over F_p ---------------------
//
// The modulus search below runs before the Field object exists, so it
// works on plain integer vectors (low degree first, entries in [0, p)).

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Remainder of `a` divided by the monic polynomial `d`, both over F_p.
// Returns true when the remainder is zero.
bool zp_divides(const std::vector<std::int64_t>& d, std::vector<std::int64_t> a,
                std::int64_t p) {
  const int dd = static_cast<int>(d.size()) - 1;
  for (int top = static_cast<int>(a.size()) - 1; top >= dd; --top) {
    const std::int64_t c = a[top];
    if (c == 0) continue;
    const int shift = top - dd;
    for (int i = 0; i <= dd; ++i) {
      a[shift + i] = mod_p(a[shift + i] - c * d[i], p);
    }
  }
  for (int i = 0; i < dd; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2. A
// reducible polynomial always has a factor in that range.
bool zp_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    const std::int64_t count = checked_pow(p, d);
    std::vector<std::int64_t> div(static_cast<std::size_t>(d) + 1, 0);
    div[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t code = 0; code < count; ++code) {
      std::int64_t v = code;
      for (int i = 0; i < d; ++i) {
        div[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      if (zp_divides(div, f, p)) return false;
    }
  }
  return true;
}

// Canonical modulus: smallest base-p encoding among monic irreducible
// polynomials of degree k over F_p. One always exists.
std::vector<std::int64_t> canonical_modulus(std::int64_t p, int k) {
  const std::int64_t count = checked_pow(p, k);
  std::vector<std::int64_t> f(static_cast<std::size_t>(k) + 1, 0);
  f[static_cast<std::size_t>(k)] = 1;
  for (std::int64_t code = 0; code < count; ++code) {
    std::int64_t v = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    if (zp_irreducible(f, p)) return f;
  }
  fail(Errc::invalid_argument, "no irreducible modulus found");  // unreachable
}

}  // namespace

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (base < 0 || exp < 0) {
    fail(Errc::invalid_argument, "checked_pow expects non-negative inputs");
  }
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base) {
      fail(Errc::size_cap_exceeded, "integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::int64_t p, int k, std::int64_t size_cap) : p_(p), k_(k) {
  if (!is_prime(p)) {
    fail(Errc::not_prime, std::to_string(p) + " is not prime");
  }
  if (k < 1) {
    fail(Errc::invalid_argument, "extension degree must be at least 1");
  }
  q_ = checked_pow(p, k);
  if (q_ > size_cap) {
    fail(Errc::size_cap_exceeded,
         "field size " + std::to_string(q_) + " exceeds cap " +
             std::to_string(size_cap));
  }
  if (k > 1) {
    modulus_ = canonical_modulus(p, k);
  }
}

FieldElement Field::zero() const {
  return FieldElement{std::vector<std::int64_t>(static_cast<std::size_t>(k_), 0)};
}

FieldElement Field::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

bool Field::is_zero(const FieldElement& a) const {
  check_element(a);
  for (std::int64_t c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

void Field::check_element(const FieldElement& a) const {
  if (a.coeffs.size() != static_cast<std::size_t>(k_)) {
    fail(Errc::invalid_argument, "element has wrong coordinate count");
  }
  for (std::int64_t c : a.coeffs) {
    if (c < 0 || c >= p_) {
      fail(Errc::invalid_argument, "element coordinate out of range");
    }
  }
}

FieldElement Field::from_index(std::int64_t index) const {
  if (index < 0 || index >= q_) {
    fail(Errc::index_out_of_range,
         "element index " + std::to_string(index) + " outside [0, " +
             std::to_string(q_) + ")");
  }
  FieldElement e = zero();
  for (int i = 0; i < k_; ++i) {
    e.coeffs[static_cast<std::size_t>(i)] = index % p_;
    index /= p_;
  }
  return e;
}

std::int64_t Field::to_index(const FieldElement& a) const {
  check_element(a);
  std::int64_t index = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    index = index * p_ + a.coeffs[static_cast<std::size_t>(i)];
  }
  return index;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < k_; ++i) {
    r.coeffs[static_cast<std::size_t>(i)] =
        mod_p(r.coeffs[static_cast<std::size_t>(i)] + b.coeffs[static_cast<std::size_t>(i)], p_);
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < k_; ++i) {
    r.coeffs[static_cast<std::size_t>(i)] =
        mod_p(r.coeffs[static_cast<std::size_t>(i)] - b.coeffs[static_cast<std::size_t>(i)], p_);
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const {
  return sub(zero(), a);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) {
    return FieldElement{{mod_p(a.coeffs[0] * b.coeffs[0], p_)}};
  }
  // Schoolbook product, then reduction by the monic modulus:
  // x^k = -(modulus without its leading term).
  std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i) {
    const std::int64_t ai = a.coeffs[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < k_; ++j) {
      const std::size_t ij = static_cast<std::size_t>(i + j);
      prod[ij] = mod_p(prod[ij] + ai * b.coeffs[static_cast<std::size_t>(j)], p_);
    }
  }
  for (int top = 2 * k_ - 2; top >= k_; --top) {
    const std::int64_t c = prod[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(top)] = 0;
    const int shift = top - k_;
    for (int i = 0; i < k_; ++i) {
      const std::size_t si = static_cast<std::size_t>(shift + i);
      prod[si] = mod_p(prod[si] - c * modulus_[static_cast<std::size_t>(i)], p_);
    }
  }
  prod.resize(static_cast<std::size_t>(k_));
  return FieldElement{std::move(prod)};
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) {
    fail(Errc::division_by_zero, "zero has no multiplicative inverse");
  }
  return pow(a, q_ - 2);
}

FieldElement Field::pow(const FieldElement& a, std::int64_t e) const {
  check_element(a);
  if (e < 0) {
    fail(Errc::invalid_argument, "exponent must be non-negative");
  }
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace hoplattice
