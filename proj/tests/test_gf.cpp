#include <doctest.h>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hoplattice/gf.hpp"

using namespace hoplattice;

namespace {

// (p, k) pairs with q = p^k <= 64, covering prime and extension fields.
const std::vector<std::pair<std::int64_t, int>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1},  {61, 1}, {2, 2}, {2, 3},
    {2, 4}, {2, 5}, {2, 6}, {3, 2},  {3, 3},  {5, 2}, {7, 2},
};

bool throws_code(Errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == expected;
  }
  return false;
}

}  // namespace

TEST_CASE("is_prime classifies small integers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(63));
}

TEST_CASE("checked_pow computes exactly and refuses overflow") {
  CHECK(checked_pow(2, 0) == 1);
  CHECK(checked_pow(2, 12) == 4096);
  CHECK(checked_pow(5, 4) == 625);
  CHECK(checked_pow(10, 18) == 1'000'000'000'000'000'000LL);
  CHECK(throws_code(Errc::size_cap_exceeded, [] { checked_pow(10, 19); }));
  CHECK(throws_code(Errc::invalid_argument, [] { checked_pow(-2, 3); }));
}

TEST_CASE("field construction validates its parameters") {
  CHECK(throws_code(Errc::not_prime, [] { Field F(4, 1); }));
  CHECK(throws_code(Errc::not_prime, [] { Field F(1, 1); }));
  CHECK(throws_code(Errc::invalid_argument, [] { Field F(2, 0); }));
  CHECK(throws_code(Errc::size_cap_exceeded, [] { Field F(2, 21); }));
  CHECK_NOTHROW(Field(2, 21, std::int64_t{1} << 21));
}

TEST_CASE("canonical moduli are the smallest irreducible encodings") {
  CHECK(Field(2, 1).modulus().empty());
  CHECK(Field(2, 2).modulus() == std::vector<std::int64_t>{1, 1, 1});
  CHECK(Field(2, 3).modulus() == std::vector<std::int64_t>{1, 1, 0, 1});
  CHECK(Field(3, 2).modulus() == std::vector<std::int64_t>{1, 0, 1});
}

TEST_CASE("arithmetic facts in the four-element field") {
  const Field F(2, 2);
  const auto e = [&](std::int64_t i) { return F.from_index(i); };
  // Index 2 is the basis element y with y^2 = y + 1 (modulus y^2+y+1).
  CHECK(F.to_index(F.mul(e(2), e(2))) == 3);
  CHECK(F.to_index(F.mul(e(2), e(3))) == 1);
  CHECK(F.to_index(F.add(e(2), e(3))) == 1);
  CHECK(F.to_index(F.inv(e(2))) == 3);
  CHECK(F.to_index(F.inv(e(3))) == 2);
  CHECK(F.to_index(F.pow(e(2), 3)) == 1);
}

TEST_CASE("prime-field arithmetic matches integer arithmetic mod p") {
  const Field F(7, 1);
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = 0; b < 7; ++b) {
      CHECK(F.to_index(F.add(F.from_index(a), F.from_index(b))) == (a + b) % 7);
      CHECK(F.to_index(F.mul(F.from_index(a), F.from_index(b))) == (a * b) % 7);
      CHECK(F.to_index(F.sub(F.from_index(a), F.from_index(b))) ==
            ((a - b) % 7 + 7) % 7);
    }
  }
}

TEST_CASE("field axioms hold exhaustively for every small field") {
  for (const auto& [p, k] : kSmallFields) {
    CAPTURE(p);
    CAPTURE(k);
    const Field F(p, k);
    const std::int64_t q = F.size();
    REQUIRE(q <= 64);

    std::vector<FieldElement> elems;
    elems.reserve(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) elems.push_back(F.from_index(i));

    // Index round trip.
    for (std::int64_t i = 0; i < q; ++i) {
      REQUIRE(F.to_index(elems[static_cast<std::size_t>(i)]) == i);
    }

    // Identities, inverses, commutativity.
    bool ok = true;
    for (const auto& a : elems) {
      ok = ok && F.add(a, F.zero()) == a;
      ok = ok && F.mul(a, F.one()) == a;
      ok = ok && F.is_zero(F.add(a, F.neg(a)));
      ok = ok && F.sub(a, a) == F.zero();
      if (!F.is_zero(a)) {
        ok = ok && F.mul(a, F.inv(a)) == F.one();
        ok = ok && F.pow(a, q - 1) == F.one();
      }
      for (const auto& b : elems) {
        ok = ok && F.add(a, b) == F.add(b, a);
        ok = ok && F.mul(a, b) == F.mul(b, a);
      }
    }
    REQUIRE(ok);

    // Associativity and distributivity over all triples.
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        for (const auto& c : elems) {
          ok = ok && F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok = ok && F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
          ok = ok && F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        }
      }
      if (!ok) break;
    }
    REQUIRE(ok);
  }
}

TEST_CASE("pow handles edge exponents") {
  const Field F(3, 2);
  const FieldElement a = F.from_index(5);
  CHECK(F.pow(a, 0) == F.one());
  CHECK(F.pow(F.zero(), 5) == F.zero());
  CHECK(F.pow(a, 1) == a);
  bool threw = throws_code(Errc::invalid_argument, [&] { F.pow(a, -1); });
  CHECK(threw);
}

TEST_CASE("element validation rejects bad indices and coordinates") {
  const Field F(3, 2);
  CHECK(throws_code(Errc::index_out_of_range, [&] { F.from_index(-1); }));
  CHECK(throws_code(Errc::index_out_of_range, [&] { F.from_index(9); }));
  CHECK(throws_code(Errc::division_by_zero, [&] { F.inv(F.zero()); }));
  CHECK(throws_code(Errc::invalid_argument,
                    [&] { F.to_index(FieldElement{{1}}); }));
  CHECK(throws_code(Errc::invalid_argument,
                    [&] { F.to_index(FieldElement{{3, 0}}); }));
}

TEST_CASE("fields compare by characteristic, degree, and modulus") {
  CHECK(Field(2, 2) == Field(2, 2));
  CHECK_FALSE(Field(2, 1) == Field(3, 1));
  CHECK_FALSE(Field(2, 1) == Field(2, 2));
}
