#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "collatz/arith.hpp"
#include "collatz/engine.hpp"

namespace collatz {

/// True iff n - 1 is a non-negative multiple of 2 * 3^j.
bool loop_form_check(const OddPos& n, std::uint64_t j);

/// An exponent tuple whose loop equation has an odd positive integer
/// solution that really cycles with those exponents.
struct LoopCandidate {
  std::vector<Exponent> exponents;
  ExactRatio value;

  friend bool operator==(const LoopCandidate&, const LoopCandidate&) = default;
};

/// ReplayMismatch: the value is an odd integer but C does not follow the
/// exponents back to it.
enum class RejectionReason { NonPositiveDenominator, NonInteger, EvenValue, ReplayMismatch };

const char* to_string(RejectionReason reason);

struct LoopRejection {
  std::vector<Exponent> exponents;
  RejectionReason reason;
  /// Value of the equation when the denominator is positive.
  std::optional<ExactRatio> value;
};

using LoopOutcome = std::variant<LoopCandidate, LoopRejection>;

/// The value a loop with these exponents would start from:
///   sum_{i=1..j} 3^{i-1} 2^{a_1+...+a_{j-i}} / (2^{sum a} - 3^j)
/// Returns nullopt when the denominator is not positive.
std::optional<ExactRatio> loop_equation_value(const std::vector<Exponent>& exponents);

/// Evaluates the loop equation and classifies the result. An odd integer
/// solution is accepted only if replaying C for j steps returns to it with
/// exactly these exponents.
LoopOutcome loop_candidate(const std::vector<Exponent>& exponents);

/// The two inequalities a length-2 loop must satisfy:
/// 12 >= 2^{a1+a2} - 2^{a1} and a1 + a2 > 3.
bool length2_inequalities_hold(Exponent a1, Exponent a2);

/// All (a1, a2) satisfying length2_inequalities_hold, found by bounded
/// search (for a1 >= 4 or a2 >= 4 the first inequality already fails).
std::vector<std::pair<Exponent, Exponent>> length2_feasible_pairs();

/// Every exponent tuple of length j with sum <= max_exp_sum whose loop
/// equation yields a genuine cycle, sorted by (value, exponents).
std::vector<LoopCandidate> search_loops(std::uint64_t j, Exponent max_exp_sum);

/// n == (n - 1) * 2^{sum a} / 3^j + m, exactly.
bool loop_member_equation(const Nat& n, const Nat& m, const std::vector<Exponent>& exponents);

}  // namespace collatz
