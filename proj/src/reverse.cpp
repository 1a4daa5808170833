#include "collatz/reverse.hpp"

#include <utility>

namespace collatz {

Mod6Class mod6_class_from(unsigned residue) {
  switch (residue) {
    case 1: return Mod6Class::One;
    case 3: return Mod6Class::Three;
    case 5: return Mod6Class::Five;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "residue class must be 1, 3 or 5, got " + std::to_string(residue));
  }
}

Mod6Class mod6_classify(const OddPos& n) {
  return mod6_class_from(static_cast<unsigned>(mod_small(n.value(), 6)));
}

const char* to_string(Family family) {
  switch (family) {
    case Family::R1: return "R1";
    case Family::R5: return "R5";
    case Family::X: return "X";
  }
  return "Unknown";
}

namespace {

// (base * 2^x - 1) / 3 where divisibility is already guaranteed.
OddPos predecessor(const Nat& base, Exponent x) {
  Nat v;
  mpz_mul_2exp(v.get_mpz_t(), base.get_mpz_t(), x);
  v -= 1;
  if (!mpz_divisible_ui_p(v.get_mpz_t(), 3)) {
    throw Error(ErrorCode::Internal, "reverse step numerator not divisible by 3");
  }
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 3);
  return OddPos(std::move(v));
}

void require_non_negative(const Nat& a) {
  if (sgn(a) < 0) {
    throw Error(ErrorCode::InvalidArgument, "family parameter a must be non-negative");
  }
}

}  // namespace

OddPos reverse_step(const OddPos& n, Exponent x) {
  if (x < 1) {
    throw Error(ErrorCode::InvalidArgument, "reverse exponent must be at least 1");
  }
  switch (mod6_classify(n)) {
    case Mod6Class::Three:
      throw Error(ErrorCode::ClassThree,
                  n.str() + " = 3 (mod 6) has no valid exponent: no odd predecessor exists");
    case Mod6Class::One:
      if (x % 2 != 0) {
        throw Error(ErrorCode::ParityMismatch,
                    n.str() + " = 1 (mod 6) needs an even exponent, got " + std::to_string(x));
      }
      break;
    case Mod6Class::Five:
      if (x % 2 == 0) {
        throw Error(ErrorCode::ParityMismatch,
                    n.str() + " = 5 (mod 6) needs an odd exponent, got " + std::to_string(x));
      }
      break;
  }
  return predecessor(n.value(), x);
}

OddPos r1(const Nat& a, Exponent b) {
  require_non_negative(a);
  return predecessor(6 * a + 1, 2 * b + 2);
}

OddPos r5(const Nat& a, Exponent b) {
  require_non_negative(a);
  return predecessor(6 * a + 5, 2 * b + 1);
}

OddPos x_fn(const Nat& a, Exponent b) {
  require_non_negative(a);
  Nat tail = pow2(2 * b + 4) - 1;
  mpz_divexact_ui(tail.get_mpz_t(), tail.get_mpz_t(), 3);
  Nat head;
  mpz_mul_2exp(head.get_mpz_t(), a.get_mpz_t(), 2 * b + 3);
  return OddPos(Nat(head + tail));
}

OddPos PreimageTag::evaluate() const {
  switch (family) {
    case Family::R1: return r1(a, b);
    case Family::R5: return r5(a, b);
    case Family::X: return x_fn(a, b);
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

PreimageTag resolve(const OddPos& n) {
  const auto [d, e] = reduced_step(n);
  switch (mod6_classify(d)) {
    case Mod6Class::One: {
      Nat a = (d.value() - 1) / 6;
      return {Family::R1, std::move(a), (e - 2) / 2};
    }
    case Mod6Class::Five: {
      Nat a = (d.value() - 5) / 6;
      return {Family::R5, std::move(a), (e - 1) / 2};
    }
    case Mod6Class::Three:
      break;
  }
  // 3n+1 is never a multiple of 3, so C(n) never is either.
  throw Error(ErrorCode::Internal, "C(" + n.str() + ") is divisible by 3");
}

PreimageTag level0_partition(const OddPos& n) {
  const Nat& v = n.value();
  switch (mod_small(v, 8)) {
    case 1: return {Family::R1, Nat((v - 1) / 8), 0};
    case 3:
    case 7: return {Family::R5, Nat((v - 3) / 4), 0};
    case 5: return {Family::X, Nat((v - 5) / 8), 0};
    default: break;
  }
  throw Error(ErrorCode::Internal, "odd number with even residue mod 8");
}

bool x_recursion_check(const Nat& a, Exponent k) {
  require_non_negative(a);
  return x_fn(Nat(4 * a), k) == r1(a, k + 1) && x_fn(Nat(2 * a + 1), k) == r5(a, k + 1) &&
         x_fn(Nat(4 * a + 2), k) == x_fn(a, k + 1);
}

Exponent rr1_exponent(const Nat& a, Exponent b, Mod6Class c) {
  require_non_negative(a);
  const unsigned shift = (residue(c) - 1 + static_cast<unsigned>(mod_small(a, 3))) % 3;
  return 2 * (3 * b + shift) + 2;
}

Exponent rr5_exponent(const Nat& a, Exponent b, Mod6Class c) {
  require_non_negative(a);
  // c - (a mod 3) can be -1; add 3 to stay non-negative.
  const unsigned shift = (residue(c) + 3 - static_cast<unsigned>(mod_small(a, 3))) % 3;
  return 2 * (3 * b + shift) + 1;
}

OddPos rr1(const Nat& a, Exponent b, Mod6Class c) {
  return predecessor(6 * a + 1, rr1_exponent(a, b, c));
}

OddPos rr5(const Nat& a, Exponent b, Mod6Class c) {
  return predecessor(6 * a + 5, rr5_exponent(a, b, c));
}

bool mod6_power_lemmas(std::uint64_t x_max) {
  // (2^e - 1)/3 mod 6 is read from 2^e mod 18.
  const Nat two(2);
  const Nat six(6);
  const Nat eighteen(18);
  auto powmod = [&](std::uint64_t e, const Nat& m) {
    Nat r;
    mpz_powm_ui(r.get_mpz_t(), two.get_mpz_t(), e, m.get_mpz_t());
    return r.get_ui();
  };
  auto third_mod6 = [&](std::uint64_t e) {
    const unsigned long r = (powmod(e, eighteen) + 17) % 18;  // 2^e - 1 mod 18
    return r % 3 == 0 ? r / 3 : 6;  // 6: not a multiple of 3, never a match
  };
  for (std::uint64_t x = 0; x <= x_max; ++x) {
    if (powmod(2 * x + 1, six) != 2 || powmod(2 * x + 2, six) != 4 ||
        third_mod6(6 * x + 2) != 1 || third_mod6(6 * x + 4) != 5 || third_mod6(6 * x + 6) != 3) {
      return false;
    }
  }
  return true;
}

}  // namespace collatz
