#pragma once

#include <cstdint>
#include <numeric>

#include "hoplattice/error.hpp"

namespace hoplattice {

// Exact non-negative fraction, always stored reduced (gcd(num, den) = 1,
// den >= 1). Collision ratios and their lower bounds are compared with
// integer cross-multiplication only; nothing in the library ever rounds
// a ratio through floating point.
struct Ratio {
  std::int64_t num{0};
  std::int64_t den{1};

  static Ratio reduced(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
      fail(Errc::invalid_argument, "ratio needs num >= 0 and den > 0");
    }
    const std::int64_t g = std::gcd(num, den);
    return Ratio{num / g, den / g};
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;

  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }
};

}  // namespace hoplattice
