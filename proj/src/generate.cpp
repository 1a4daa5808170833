#include "collatz/generate.hpp"

#include <algorithm>
#include <utility>

namespace collatz {

OddPos gen_length1(Exponent k) {
  Nat v = pow2(2 * k + 2) - 1;
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 3);
  return OddPos(std::move(v));
}

Length2Params::Length2Params(Exponent a1_, Exponent b_) : a1(a1_), b(b_) {
  if (a1 < 1 || b < 1) {
    throw Error(ErrorCode::InvalidArgument, "length-2 parameters need a1 >= 1 and b >= 1");
  }
}

Exponent length2_second_exponent(const Length2Params& p) {
  return p.a1 % 2 == 1 ? 6 * p.b - 2 : 6 * p.b + 2;
}

namespace {

// (2^{a1+a2} - 2^{a1} - 3) / 9
Nat length2_value(Exponent a1, Exponent a2) {
  Nat numerator = pow2(a1 + a2) - pow2(a1) - 3;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 9)) {
    throw Error(ErrorCode::Internal, "length-2 numerator not divisible by 9");
  }
  mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(), 9);
  return numerator;
}

bool is_length2_exponent(Exponent a1, Exponent a2) {
  if (a1 % 2 == 1) {
    return a2 >= 4 && (a2 + 2) % 6 == 0;
  }
  return a2 >= 8 && (a2 - 2) % 6 == 0;
}

}  // namespace

OddPos gen_length2(const Length2Params& p) {
  return OddPos(length2_value(p.a1, length2_second_exponent(p)));
}

std::vector<Length2Row> enumerate_length2(std::size_t count) {
  if (count < 1) {
    throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  }
  // With s = a1 + a2 and a2 >= 4, every value of total s lies strictly
  // between 2^{s-1}/9 and 2^s/9, so totals sort the values and only the rows
  // within one total need ordering.
  std::vector<Length2Row> rows;
  for (Exponent total = 5; rows.size() < count; ++total) {
    std::vector<Length2Row> level;
    for (Exponent a1 = 1; a1 + 4 <= total; ++a1) {
      const Exponent a2 = total - a1;
      if (is_length2_exponent(a1, a2)) {
        level.push_back({OddPos(length2_value(a1, a2)), a1, a2});
      }
    }
    std::sort(level.begin(), level.end(),
              [](const Length2Row& x, const Length2Row& y) { return x.n < y.n; });
    for (auto& row : level) {
      if (rows.size() == count) {
        break;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Exponent additive_exponent(std::uint64_t j, const Nat& b, std::uint64_t k) {
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument, "jump size k must be at least 1");
  }
  if (sgn(b) < 0) {
    throw Error(ErrorCode::InvalidArgument, "b must be non-negative");
  }
  return to_exponent(2 * b * pow3(j + k - 1) + 2);
}

namespace {

void require_base(const ExponentTrace& base) {
  if (base.terminal.value() != 1 || base.exponents.empty()) {
    throw Error(ErrorCode::InvalidArgument, "additive base trace must end at 1");
  }
  if (!(base.replay() == base.terminal)) {
    throw Error(ErrorCode::InvalidArgument, "additive base trace does not replay");
  }
}

}  // namespace

OddPos additive_jump(const ExponentTrace& base, const Nat& b, std::uint64_t k) {
  require_base(base);
  const std::uint64_t j = base.length();
  const Exponent last = additive_exponent(j, b, k);
  Exponent sum = 0;
  for (Exponent a : base.exponents) {
    sum += a;
  }
  Nat numerator = pow2(sum + 2 * (k - 1)) * (pow2(last) - 4);
  const Nat denominator = pow3(j + k);
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw Error(ErrorCode::Internal, "additive formula produced a non-integer");
  }
  mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return OddPos(Nat(numerator + base.start.value()));
}

std::vector<Exponent> additive_predicted_exponents(const ExponentTrace& base, const Nat& b,
                                                   std::uint64_t k) {
  std::vector<Exponent> out = base.exponents;
  if (sgn(b) == 0) {
    return out;
  }
  out.insert(out.end(), k - 1, Exponent{2});
  out.push_back(additive_exponent(base.length(), b, k));
  return out;
}

MonotoneChain gen_monotonic(std::uint64_t j, const Nat& k) {
  if (j < 1 || sgn(k) < 1) {
    throw Error(ErrorCode::InvalidArgument, "monotone chain needs j >= 1 and k >= 1");
  }
  const Nat n = pow2(j) * k - 1;
  std::vector<Nat> chain;
  chain.reserve(j);
  const Nat shifted = n + 1;
  Nat power3 = 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    Nat scaled = power3 * shifted;
    if (!mpz_divisible_2exp_p(scaled.get_mpz_t(), i)) {
      throw Error(ErrorCode::Internal, "monotone chain term is not an integer");
    }
    mpz_tdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), i);
    chain.push_back(scaled - 1);
    power3 *= 3;
  }
  return {OddPos(n), std::move(chain)};
}

}  // namespace collatz
