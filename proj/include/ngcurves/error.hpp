#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ngcurves {

using Int = std::int64_t;

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class Errc {
  gcd_not_one,
  not_strictly_increasing,
  non_positive,
  too_short,
  input_too_large,
  base_not_in_semigroup,
  not_cohen_macaulay,
  apery_bound_exceeded,
  out_of_family_range,
  cap_exceeded,
  degree_too_large_for_oracle,
  oracle_range_exceeded,
  overflow,
  resource_limit,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::gcd_not_one: return "GcdNotOne";
    case Errc::not_strictly_increasing: return "NotStrictlyIncreasing";
    case Errc::non_positive: return "NonPositive";
    case Errc::too_short: return "TooShort";
    case Errc::input_too_large: return "InputTooLarge";
    case Errc::base_not_in_semigroup: return "BaseNotInSemigroup";
    case Errc::not_cohen_macaulay: return "NotCohenMacaulay";
    case Errc::apery_bound_exceeded: return "AperyBoundExceeded";
    case Errc::out_of_family_range: return "OutOfFamilyRange";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::degree_too_large_for_oracle: return "DegreeTooLargeForOracle";
    case Errc::oracle_range_exceeded: return "OracleRangeExceeded";
    case Errc::overflow: return "Overflow";
    case Errc::resource_limit: return "ResourceLimit";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

namespace detail {

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in multiplication");
  return r;
}

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) noexcept {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Nonnegative remainder for a positive modulus.
inline Int mod(Int a, Int m) noexcept {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace ngcurves
