#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "collatz/error.hpp"

namespace collatz {

/// Arbitrary-precision non-negative integer.
using Nat = mpz_class;

/// Power-of-two exponent. Anything larger than 64 bits could not be
/// materialised as 2^e anyway, so exponents are machine words; values
/// computed in Nat are narrowed through to_exponent().
using Exponent = std::uint64_t;

/// Largest exponent pow2/pow3 will materialise (2^32 bits = 512 MiB).
inline constexpr Exponent kMaxMaterialExponent = Exponent{1} << 32;

/// Exact rational in lowest terms with positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(Nat num, Nat den);
  explicit ExactRatio(const mpq_class& q) : value_(q) {}

  Nat num() const { return value_.get_num(); }
  Nat den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class& raw() const { return value_; }

  std::string str() const;

  friend bool operator==(const ExactRatio& lhs, const ExactRatio& rhs) {
    return lhs.value_ == rhs.value_;
  }

 private:
  mpq_class value_{0};
};

/// One term sign * 2^s / 3^t of a fractional sum.
struct SignedTerm {
  int sign = 1;  // +1 or -1
  Exponent s = 0;
  Exponent t = 0;
};

/// 2-adic valuation. Throws InvalidArgument on zero.
Exponent v2(const Nat& n);

Nat pow2(Exponent e);
Nat pow3(Exponent e);

/// Exact value of sum(sign * 2^s / 3^t). Throws on an empty list or a sign
/// other than +1/-1.
ExactRatio ratio_eval_sum(std::span<const SignedTerm> terms);

/// Narrows a non-negative Nat to an Exponent, throwing when it would not fit
/// or exceeds kMaxMaterialExponent.
Exponent to_exponent(const Nat& value);

/// Parses a non-negative decimal literal (no sign, no whitespace).
Nat parse_nat(std::string_view text);

/// Non-negative remainder of n modulo m for small m.
unsigned long mod_small(const Nat& n, unsigned long m);

inline std::string to_decimal(const Nat& n) { return n.get_str(10); }

}  // namespace collatz
