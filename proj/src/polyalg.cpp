#include "hoplattice/polyalg.hpp"

#include <string>

namespace hoplattice {

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) {
    fail(Errc::field_mismatch, std::string("operands of ") + what +
                                   " belong to different fields");
  }
}

// In-place remainder of `a` by monic `d` (coefficient vectors over F).
void reduce_by_monic(const Field& F, std::vector<FieldElement>& a,
                     const std::vector<FieldElement>& d) {
  const int dd = static_cast<int>(d.size()) - 1;
  for (int top = static_cast<int>(a.size()) - 1; top >= dd; --top) {
    const FieldElement c = a[static_cast<std::size_t>(top)];
    if (F.is_zero(c)) continue;
    const int shift = top - dd;
    for (int i = 0; i <= dd; ++i) {
      auto& slot = a[static_cast<std::size_t>(shift + i)];
      slot = F.sub(slot, F.mul(c, d[static_cast<std::size_t>(i)]));
    }
  }
  if (static_cast<int>(a.size()) > dd) a.resize(static_cast<std::size_t>(dd));
}

bool all_zero(const Field& F, const std::vector<FieldElement>& a) {
  for (const auto& c : a) {
    if (!F.is_zero(c)) return false;
  }
  return true;
}

}  // namespace

Poly make_poly(const Field& F, std::vector<FieldElement> coeffs) {
  while (!coeffs.empty() && F.is_zero(coeffs.back())) coeffs.pop_back();
  return Poly{F, std::move(coeffs)};
}

Poly poly_zero(const Field& F) { return Poly{F, {}}; }

Poly poly_one(const Field& F) { return Poly{F, {F.one()}}; }

Poly poly_x(const Field& F) { return Poly{F, {F.zero(), F.one()}}; }

MonicPoly::MonicPoly(const Field& F, std::vector<FieldElement> coeffs)
    : field_(F), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    fail(Errc::degree_too_small, "monic polynomial needs degree >= 1");
  }
  if (!(coeffs_.back() == F.one())) {
    fail(Errc::invalid_argument, "leading coefficient must be 1");
  }
  for (const auto& c : coeffs_) {
    F.to_index(c);  // validates the coordinates
  }
}

Poly poly_mul_mod(const Poly& g, const Poly& h, const MonicPoly& f) {
  require_same_field(g.field, f.field(), "poly_mul_mod");
  require_same_field(h.field, f.field(), "poly_mul_mod");
  if (g.degree() >= f.degree() || h.degree() >= f.degree()) {
    fail(Errc::invalid_argument, "operands must be reduced modulo f");
  }
  const Field& F = f.field();
  if (g.is_zero() || h.is_zero()) return poly_zero(F);
  std::vector<FieldElement> prod(g.coeffs.size() + h.coeffs.size() - 1, F.zero());
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    if (F.is_zero(g.coeffs[i])) continue;
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
      prod[i + j] = F.add(prod[i + j], F.mul(g.coeffs[i], h.coeffs[j]));
    }
  }
  reduce_by_monic(F, prod, f.coeffs());
  return make_poly(F, std::move(prod));
}

Poly poly_pow_mod(const Poly& g, std::int64_t e, const MonicPoly& f) {
  require_same_field(g.field, f.field(), "poly_pow_mod");
  if (e < 0) {
    fail(Errc::invalid_argument, "exponent must be non-negative");
  }
  if (g.degree() >= f.degree()) {
    fail(Errc::invalid_argument, "base must be reduced modulo f");
  }
  Poly result = poly_one(f.field());
  Poly base = g;
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f);
    e >>= 1;
    if (e > 0) base = poly_mul_mod(base, base, f);
  }
  return result;
}

bool is_irreducible(const MonicPoly& f, std::int64_t enum_cap) {
  const Field& F = f.field();
  const int deg = f.degree();
  if (deg == 1) return true;
  if (checked_pow(F.size(), deg / 2) > enum_cap) {
    fail(Errc::size_cap_exceeded,
         "trial division space exceeds cap " + std::to_string(enum_cap));
  }
  for (int d = 1; d <= deg / 2; ++d) {
    const std::int64_t count = checked_pow(F.size(), d);
    for (std::int64_t code = 0; code < count; ++code) {
      const MonicPoly divisor = monic_from_code(F, d, code);
      std::vector<FieldElement> rem = f.coeffs();
      reduce_by_monic(F, rem, divisor.coeffs());
      if (all_zero(F, rem)) return false;
    }
  }
  return true;
}

Factorization factor_integer(std::int64_t n) {
  if (n < 2) {
    fail(Errc::invalid_argument, "factor_integer needs n >= 2");
  }
  Factorization result{n, {}};
  std::int64_t rest = n;
  for (std::int64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    int mult = 0;
    while (rest % d == 0) {
      rest /= d;
      ++mult;
    }
    result.primes.emplace_back(d, mult);
  }
  if (rest > 1) result.primes.emplace_back(rest, 1);
  return result;
}

std::int64_t order_of_x(const MonicPoly& f) {
  const Field& F = f.field();
  if (F.is_zero(f.coeffs().front())) {
    fail(Errc::zero_constant_term,
         "x is not invertible modulo a polynomial with zero constant term");
  }
  if (!is_irreducible(f)) {
    fail(Errc::not_irreducible, "order_of_x requires an irreducible modulus");
  }
  const std::int64_t group = checked_pow(F.size(), f.degree()) - 1;
  std::int64_t order = group;
  const Poly x = poly_x(F);
  const Poly unit = poly_one(F);
  for (const auto& [prime, mult] : factor_integer(group).primes) {
    for (int i = 0; i < mult; ++i) {
      if (order % prime != 0) break;
      if (poly_pow_mod(x, order / prime, f) == unit) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

bool is_primitive(const MonicPoly& f) {
  const Field& F = f.field();
  if (F.is_zero(f.coeffs().front())) return false;
  if (!is_irreducible(f)) return false;
  return order_of_x(f) == checked_pow(F.size(), f.degree()) - 1;
}

MonicPoly find_primitive(const Field& F, int degree, std::int64_t size_cap) {
  if (degree < 1) {
    fail(Errc::degree_too_small, "degree must be at least 1");
  }
  const std::int64_t count = checked_pow(F.size(), degree);
  if (count > size_cap) {
    fail(Errc::size_cap_exceeded,
         "search space " + std::to_string(count) + " exceeds cap " +
             std::to_string(size_cap));
  }
  for (std::int64_t code = 0; code < count; ++code) {
    MonicPoly f = monic_from_code(F, degree, code);
    if (is_primitive(f)) return f;
  }
  // A primitive polynomial of every degree exists over every finite field.
  throw std::logic_error("primitive polynomial search fell through");
}

std::vector<MonicPoly> all_primitive(const Field& F, int degree,
                                     std::int64_t size_cap) {
  if (degree < 1) {
    fail(Errc::degree_too_small, "degree must be at least 1");
  }
  const std::int64_t count = checked_pow(F.size(), degree);
  if (count > size_cap) {
    fail(Errc::size_cap_exceeded,
         "search space " + std::to_string(count) + " exceeds cap " +
             std::to_string(size_cap));
  }
  std::vector<MonicPoly> found;
  for (std::int64_t code = 0; code < count; ++code) {
    MonicPoly f = monic_from_code(F, degree, code);
    if (is_primitive(f)) found.push_back(std::move(f));
  }
  return found;
}

MonicPoly monic_from_code(const Field& F, int degree, std::int64_t code) {
  if (degree < 1) {
    fail(Errc::degree_too_small, "degree must be at least 1");
  }
  if (code < 0 || code >= checked_pow(F.size(), degree)) {
    fail(Errc::index_out_of_range, "polynomial code out of range");
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    coeffs.push_back(F.from_index(code % F.size()));
    code /= F.size();
  }
  coeffs.push_back(F.one());
  return MonicPoly(F, std::move(coeffs));
}

std::int64_t monic_to_code(const MonicPoly& f) {
  const Field& F = f.field();
  std::int64_t code = 0;
  for (int i = f.degree() - 1; i >= 0; --i) {
    code = code * F.size() + F.to_index(f.coeffs()[static_cast<std::size_t>(i)]);
  }
  return code;
}

}  // namespace hoplattice
