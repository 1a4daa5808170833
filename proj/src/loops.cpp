#include "collatz/loops.hpp"

#include <algorithm>
#include <functional>

namespace collatz {

const char* to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::NonPositiveDenominator: return "NonPositiveDenominator";
    case RejectionReason::NonInteger: return "NonInteger";
    case RejectionReason::EvenValue: return "EvenValue";
    case RejectionReason::ReplayMismatch: return "ReplayMismatch";
  }
  return "Unknown";
}

bool loop_form_check(const OddPos& n, std::uint64_t j) {
  if (j < 1) {
    throw Error(ErrorCode::InvalidArgument, "loop length must be at least 1");
  }
  const Nat modulus = 2 * pow3(j);
  const Nat shifted = n.value() - 1;
  return mpz_divisible_p(shifted.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

namespace {

void require_exponents(const std::vector<Exponent>& exponents) {
  if (exponents.empty()) {
    throw Error(ErrorCode::InvalidArgument, "exponent list must be nonempty");
  }
  for (Exponent a : exponents) {
    if (a < 1) {
      throw Error(ErrorCode::InvalidArgument, "exponents must be at least 1");
    }
  }
}

}  // namespace

std::optional<ExactRatio> loop_equation_value(const std::vector<Exponent>& exponents) {
  require_exponents(exponents);
  const std::size_t j = exponents.size();
  // prefix[t] = a_1 + ... + a_t
  std::vector<Exponent> prefix(j + 1, 0);
  for (std::size_t t = 0; t < j; ++t) {
    prefix[t + 1] = prefix[t] + exponents[t];
  }
  const Nat denominator = pow2(prefix[j]) - pow3(j);
  if (sgn(denominator) <= 0) {
    return std::nullopt;
  }
  Nat numerator = 0;
  Nat power3 = 1;
  for (std::size_t i = 1; i <= j; ++i) {
    numerator += power3 * pow2(prefix[j - i]);
    power3 *= 3;
  }
  return ExactRatio(numerator, denominator);
}

LoopOutcome loop_candidate(const std::vector<Exponent>& exponents) {
  auto value = loop_equation_value(exponents);
  if (!value) {
    return LoopRejection{exponents, RejectionReason::NonPositiveDenominator, std::nullopt};
  }
  if (!value->is_integer()) {
    return LoopRejection{exponents, RejectionReason::NonInteger, value};
  }
  const Nat n = value->num();
  if (!OddPos::is_odd_positive(n)) {
    return LoopRejection{exponents, RejectionReason::EvenValue, value};
  }
  Nat v = n;
  for (Exponent a : exponents) {
    if (advance(v) != a) {
      return LoopRejection{exponents, RejectionReason::ReplayMismatch, value};
    }
  }
  if (v != n) {
    return LoopRejection{exponents, RejectionReason::ReplayMismatch, value};
  }
  return LoopCandidate{exponents, *value};
}

bool length2_inequalities_hold(Exponent a1, Exponent a2) {
  if (a1 < 1 || a2 < 1 || a1 + a2 > 60) {
    return false;
  }
  const Nat spread = pow2(a1 + a2) - pow2(a1);
  return spread <= 12 && a1 + a2 > 3;
}

std::vector<std::pair<Exponent, Exponent>> length2_feasible_pairs() {
  // 2^{a1+a2} - 2^{a1} = 2^{a1}(2^{a2} - 1) exceeds 12 once a1 >= 4 or
  // a2 >= 4, so a bound of 8 on each exponent is exhaustive.
  constexpr Exponent kBound = 8;
  std::vector<std::pair<Exponent, Exponent>> pairs;
  for (Exponent a1 = 1; a1 <= kBound; ++a1) {
    for (Exponent a2 = 1; a2 <= kBound; ++a2) {
      if (length2_inequalities_hold(a1, a2)) {
        pairs.emplace_back(a1, a2);
      }
    }
  }
  return pairs;
}

std::vector<LoopCandidate> search_loops(std::uint64_t j, Exponent max_exp_sum) {
  if (j < 1 || max_exp_sum < j) {
    throw Error(ErrorCode::InvalidArgument, "search_loops needs j >= 1 and max_exp_sum >= j");
  }
  std::vector<LoopCandidate> found;
  std::vector<Exponent> tuple(j, 1);
  // Depth-first over compositions with part >= 1 and total <= max_exp_sum.
  std::function<void(std::size_t, Exponent)> visit = [&](std::size_t pos, Exponent used) {
    if (pos == j) {
      auto outcome = loop_candidate(tuple);
      if (auto* c = std::get_if<LoopCandidate>(&outcome)) {
        found.push_back(std::move(*c));
      }
      return;
    }
    const Exponent remaining_parts = j - pos - 1;
    for (Exponent a = 1; used + a + remaining_parts <= max_exp_sum; ++a) {
      tuple[pos] = a;
      visit(pos + 1, used + a);
    }
  };
  visit(0, 0);
  std::sort(found.begin(), found.end(), [](const LoopCandidate& x, const LoopCandidate& y) {
    if (x.value.raw() != y.value.raw()) {
      return x.value.raw() < y.value.raw();
    }
    return x.exponents < y.exponents;
  });
  return found;
}

bool loop_member_equation(const Nat& n, const Nat& m, const std::vector<Exponent>& exponents) {
  require_exponents(exponents);
  Exponent sum = 0;
  for (Exponent a : exponents) {
    sum += a;
  }
  mpq_class rhs(Nat((n - 1) * pow2(sum)), pow3(exponents.size()));
  rhs.canonicalize();
  rhs += mpq_class(m);
  return rhs == mpq_class(n);
}

}  // namespace collatz
