#include "collatz/engine.hpp"

#include <utility>

namespace collatz {

OddPos::OddPos(Nat value) : value_(std::move(value)) {
  if (!is_odd_positive(value_)) {
    throw Error(ErrorCode::NotOddPositive, value_.get_str() + " is not a positive odd integer");
  }
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::ReachedOne: return "ReachedOne";
    case StopReason::ReachedTarget: return "ReachedTarget";
    case StopReason::IterationCapHit: return "IterationCapHit";
  }
  return "Unknown";
}

Nat collatz_f(const Nat& n) {
  if (sgn(n) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "collatz_f requires n >= 1");
  }
  if (mpz_even_p(n.get_mpz_t())) {
    Nat r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), 1);
    return r;
  }
  return 3 * n + 1;
}

Exponent advance(Nat& value) {
  mpz_ptr v = value.get_mpz_t();
  mpz_mul_ui(v, v, 3);
  mpz_add_ui(v, v, 1);
  const Exponent a = mpz_scan1(v, 0);
  mpz_tdiv_q_2exp(v, v, a);
  return a;
}

ReducedStep reduced_step(const OddPos& n) {
  Nat m = n.value();
  const Exponent a = advance(m);
  return {OddPos(std::move(m)), a};
}

OddPos ExponentTrace::replay() const {
  Nat v = start.value();
  for (Exponent a : exponents) {
    Nat t = 3 * v + 1;
    if (!mpz_divisible_2exp_p(t.get_mpz_t(), a)) {
      throw Error(ErrorCode::Internal, "trace exponent does not divide 3n+1");
    }
    mpz_tdiv_q_2exp(v.get_mpz_t(), t.get_mpz_t(), a);
  }
  return OddPos(std::move(v));
}

TraceResult trace(const OddPos& n, const std::optional<Nat>& target, std::uint64_t cap) {
  if (cap < 1) {
    throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  }
  const Nat goal = target.value_or(Nat(1));
  if (!OddPos::is_odd_positive(goal)) {
    throw Error(ErrorCode::InvalidArgument, "target must be a positive odd integer");
  }
  std::vector<Exponent> exponents;
  Nat v = n.value();
  for (std::uint64_t step = 0; step < cap; ++step) {
    exponents.push_back(advance(v));
    if (v == goal) {
      const auto reason = goal == 1 ? StopReason::ReachedOne : StopReason::ReachedTarget;
      return {{n, std::move(exponents), OddPos(std::move(v))}, reason, cap};
    }
    if (v == 1) {
      return {{n, std::move(exponents), OddPos(std::move(v))}, StopReason::ReachedOne, cap};
    }
  }
  return {{n, std::move(exponents), OddPos(std::move(v))}, StopReason::IterationCapHit, cap};
}

std::uint64_t sequence_length(const OddPos& n, std::uint64_t cap) {
  if (cap < 1) {
    throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  }
  Nat v = n.value();
  std::uint64_t steps = 0;
  while (v != 1) {
    if (steps == cap) {
      throw CapExceeded(cap);
    }
    advance(v);
    ++steps;
  }
  return steps;
}

bool cross_check(const Nat& n, std::uint64_t cap) {
  if (sgn(n) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "cross_check requires n >= 1");
  }
  // Odd values of the F-orbit, in order, until 1.
  std::vector<Nat> from_f;
  Nat v = n;
  std::uint64_t steps = 0;
  for (;;) {
    if (mpz_odd_p(v.get_mpz_t())) {
      from_f.push_back(v);
    }
    if (v == 1) {
      break;
    }
    if (++steps > cap) {
      throw CapExceeded(cap);
    }
    v = collatz_f(v);
  }

  Nat odd_part = n;
  mpz_tdiv_q_2exp(odd_part.get_mpz_t(), n.get_mpz_t(), v2(n));
  std::vector<Nat> from_c{odd_part};
  steps = 0;
  while (from_c.back() != 1) {
    if (++steps > cap) {
      throw CapExceeded(cap);
    }
    Nat next = from_c.back();
    advance(next);
    from_c.push_back(std::move(next));
  }
  return from_f == from_c;
}

}  // namespace collatz
