#include "collatz/arith.hpp"

#include <limits>

namespace collatz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IterationCapHit: return "IterationCapHit";
    case ErrorCode::ClassThree: return "ClassThree";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NonIntegerForm: return "NonIntegerForm";
    case ErrorCode::NotOddPositive: return "NotOddPositive";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ExactRatio::ExactRatio(Nat num, Nat den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::string ExactRatio::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Exponent v2(const Nat& n) {
  if (sgn(n) == 0) {
    throw Error(ErrorCode::InvalidArgument, "2-adic valuation of zero is undefined");
  }
  return mpz_scan1(n.get_mpz_t(), 0);
}

Nat pow2(Exponent e) {
  if (e > kMaxMaterialExponent) {
    throw Error(ErrorCode::InvalidArgument, "exponent too large to materialise");
  }
  Nat r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

Nat pow3(Exponent e) {
  if (e > std::numeric_limits<unsigned long>::max() || e > kMaxMaterialExponent) {
    throw Error(ErrorCode::InvalidArgument, "exponent too large to materialise");
  }
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return r;
}

ExactRatio ratio_eval_sum(std::span<const SignedTerm> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty term list");
  }
  mpq_class sum(0);
  for (const auto& term : terms) {
    if (term.sign != 1 && term.sign != -1) {
      throw Error(ErrorCode::InvalidArgument, "term sign must be +1 or -1");
    }
    mpq_class q(pow2(term.s), pow3(term.t));
    q.canonicalize();
    if (term.sign > 0) {
      sum += q;
    } else {
      sum -= q;
    }
  }
  return ExactRatio(sum);
}

Exponent to_exponent(const Nat& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 63 ||
      value > Nat(static_cast<unsigned long>(kMaxMaterialExponent))) {
    throw Error(ErrorCode::InvalidArgument,
                "exponent " + value.get_str() + " is out of range");
  }
  return static_cast<Exponent>(value.get_ui());
}

Nat parse_nat(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty number");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::InvalidArgument,
                  "not a non-negative decimal literal: '" + std::string(text) + "'");
    }
  }
  return Nat(std::string(text), 10);
}

unsigned long mod_small(const Nat& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

}  // namespace collatz
