#pragma once

#include <cstdint>
#include <vector>

#include "collatz/arith.hpp"
#include "collatz/engine.hpp"

namespace collatz {

/// (2^{2k+2} - 1) / 3. Sequence length 1 for k >= 1; k = 0 gives 1 itself,
/// whose sequence length is 0 (it only loops through the trivial cycle).
OddPos gen_length1(Exponent k);

struct Length2Params {
  Exponent a1;
  Exponent b;

  Length2Params(Exponent a1_, Exponent b_);
};

/// a1 + 6b + 2(-1)^{a1 mod 2} - a1, the second exponent the length-2 formula
/// produces: 6b - 2 for odd a1, 6b + 2 for even a1.
Exponent length2_second_exponent(const Length2Params& p);

/// (2^{a1 + a2} - 2^{a1} - 3) / 9 with a2 = length2_second_exponent(p).
OddPos gen_length2(const Length2Params& p);

struct Length2Row {
  OddPos n;
  Exponent a1;
  Exponent a2;

  friend bool operator==(const Length2Row&, const Length2Row&) = default;
};

/// The count smallest odd numbers with sequence length 2, ascending, built
/// from the (a1, b) grid of gen_length2.
std::vector<Length2Row> enumerate_length2(std::size_t count);

/// Last exponent of an additive extension: 2b * 3^{j+k-1} + 2.
Exponent additive_exponent(std::uint64_t j, const Nat& b, std::uint64_t k = 1);

/// m = 2^{s_j + 2(k-1)} / 3^{j+k} * (2^{a_{j+k}} - 4) + n with
/// a_{j+k} = additive_exponent(j, b, k). The base trace must end at 1.
/// For b >= 1, m has the base exponents, then k-1 twos, then a_{j+k}.
/// b = 0 returns the base value.
OddPos additive_jump(const ExponentTrace& base, const Nat& b, std::uint64_t k);

inline OddPos additive_next(const ExponentTrace& base, const Nat& b) {
  return additive_jump(base, b, 1);
}

/// The exponent sequence additive_jump promises for its result.
std::vector<Exponent> additive_predicted_exponents(const ExponentTrace& base, const Nat& b,
                                                   std::uint64_t k);

struct MonotoneChain {
  OddPos start;
  /// C^i(start) for i = 0..j-1, each reached with exponent 1.
  std::vector<Nat> chain;
};

/// n = 2^j * k - 1 and the chain C^i(n) = 3^i (n+1) / 2^i - 1.
MonotoneChain gen_monotonic(std::uint64_t j, const Nat& k);

}  // namespace collatz
