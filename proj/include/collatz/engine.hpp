#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz/arith.hpp"

namespace collatz {

/// Positive odd integer. Construction validates; the value never changes
/// parity or sign afterwards.
class OddPos {
 public:
  explicit OddPos(Nat value);
  explicit OddPos(unsigned long value) : OddPos(Nat(value)) {}

  static bool is_odd_positive(const Nat& value) {
    return sgn(value) > 0 && mpz_odd_p(value.get_mpz_t());
  }

  const Nat& value() const noexcept { return value_; }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const OddPos& lhs, const OddPos& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend bool operator<(const OddPos& lhs, const OddPos& rhs) {
    return lhs.value_ < rhs.value_;
  }

 private:
  Nat value_;
};

struct ReducedStep {
  OddPos next;
  Exponent exponent;
};

/// A start value with the exponents a_1..a_j of its reduced trajectory and
/// the value C^j(start) it ends on.
struct ExponentTrace {
  OddPos start;
  std::vector<Exponent> exponents;
  OddPos terminal;

  std::size_t length() const noexcept { return exponents.size(); }
  /// Recomputes the terminal from start and the stored exponents only.
  /// Throws Internal if an exponent does not divide exactly.
  OddPos replay() const;
};

enum class StopReason { ReachedOne, ReachedTarget, IterationCapHit };

const char* to_string(StopReason reason);

struct TraceResult {
  ExponentTrace trace;
  StopReason reason;
  std::uint64_t cap;  // cap in force, meaningful for IterationCapHit
};

/// Classical map: n/2 for even n, 3n+1 for odd n. Throws on n < 1.
Nat collatz_f(const Nat& n);

/// C(n) = (3n+1)/2^a with a = v2(3n+1).
ReducedStep reduced_step(const OddPos& n);

/// In-place C step on a raw odd positive value; returns the exponent.
/// Hot-loop form of reduced_step, caller guarantees oddness.
Exponent advance(Nat& value);

/// Iterates C until the value equals target (1 when absent), at least one
/// step is always taken. Reaching 1 before a target other than 1 stops with
/// ReachedOne.
TraceResult trace(const OddPos& n, const std::optional<Nat>& target, std::uint64_t cap);

/// Number of C steps until the value first equals 1; 0 for n = 1.
/// Throws CapExceeded after cap steps.
std::uint64_t sequence_length(const OddPos& n, std::uint64_t cap);

/// Checks that the odd values of the F-orbit of n are exactly the C-orbit of
/// the odd part of n, both followed to 1. Throws CapExceeded.
bool cross_check(const Nat& n, std::uint64_t cap);

}  // namespace collatz
