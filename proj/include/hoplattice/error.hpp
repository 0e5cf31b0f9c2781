#pragma once

#include <stdexcept>
#include <string>

namespace hoplattice {

// Every failure the library can signal. The CLI maps these onto process
// exit codes, so the set is closed and each constructor site picks the
// most specific code that applies.
enum class Errc {
  invalid_argument,
  not_prime,
  size_cap_exceeded,
  division_by_zero,
  index_out_of_range,
  field_mismatch,
  not_irreducible,
  zero_constant_term,
  degree_too_small,
  degree_mismatch,
  dimension_mismatch,
  not_primitive,
  bad_dimensions,
  same_pair,
  cap_exceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hoplattice
