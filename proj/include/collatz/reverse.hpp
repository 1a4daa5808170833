#pragma once

#include <cstdint>
#include <string>

#include "collatz/arith.hpp"
#include "collatz/engine.hpp"

namespace collatz {

/// Residue of an odd number modulo 6.
enum class Mod6Class : unsigned { One = 1, Three = 3, Five = 5 };

/// Throws InvalidArgument for anything but 1, 3 or 5.
Mod6Class mod6_class_from(unsigned residue);
inline unsigned residue(Mod6Class c) { return static_cast<unsigned>(c); }

Mod6Class mod6_classify(const OddPos& n);

/// R(n) = (2^x n - 1) / 3. Valid exponents are even for n = 1 (mod 6) and
/// odd for n = 5 (mod 6); n = 3 (mod 6) has no predecessor at all.
/// Throws ClassThree / ParityMismatch instead of dividing.
OddPos reverse_step(const OddPos& n, Exponent x);

/// ((6a+1) 2^{2b+2} - 1) / 3, the predecessor of 6a+1 through exponent 2b+2.
OddPos r1(const Nat& a, Exponent b);
/// ((6a+5) 2^{2b+1} - 1) / 3, the predecessor of 6a+5 through exponent 2b+1.
OddPos r5(const Nat& a, Exponent b);
/// 2^{2b+3} a + (2^{2b+4} - 1) / 3
OddPos x_fn(const Nat& a, Exponent b);

enum class Family { R1, R5, X };

const char* to_string(Family family);

struct PreimageTag {
  Family family;
  Nat a;
  Exponent b;

  /// Evaluates the tagged family function.
  OddPos evaluate() const;

  friend bool operator==(const PreimageTag&, const PreimageTag&) = default;
};

/// The unique (R1 or R5, a, b) whose value is n, read off C(n).
PreimageTag resolve(const OddPos& n);

/// Classification by n mod 8 against R1(a,0) = 8a+1, R5(a,0) = 4a+3 and
/// X(a,0) = 8a+5.
PreimageTag level0_partition(const OddPos& n);

/// X(4a,k) = R1(a,k+1), X(2a+1,k) = R5(a,k+1) and X(4a+2,k) = X(a,k+1).
bool x_recursion_check(const Nat& a, Exponent k);

/// 2(3b + ((c - 1 + a mod 3) mod 3)) + 2
Exponent rr1_exponent(const Nat& a, Exponent b, Mod6Class c);
/// 2(3b + ((c - a mod 3) mod 3)) + 1
Exponent rr5_exponent(const Nat& a, Exponent b, Mod6Class c);

/// Predecessor of 6a+1 chosen so that the result is congruent to c mod 6.
OddPos rr1(const Nat& a, Exponent b, Mod6Class c);
/// Predecessor of 6a+5 chosen so that the result is congruent to c mod 6.
OddPos rr5(const Nat& a, Exponent b, Mod6Class c);

/// Checks for every x in [0, x_max]:
///   2^{2x+1} = 2, 2^{2x+2} = 4, (2^{6x+2}-1)/3 = 1,
///   (2^{6x+4}-1)/3 = 5, (2^{6x+6}-1)/3 = 3   (all mod 6).
bool mod6_power_lemmas(std::uint64_t x_max);

}  // namespace collatz
