#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/arith.hpp"
#include "collatz/engine.hpp"

namespace collatz {

/// Fractional sum encoding of an odd n relative to the trajectory endpoint
/// m = C^j(n):
///
///   n = m * 2^{s_j} / 3^j - sum_{i=1..j} 2^{s_{i-1}} / 3^{i}
///
/// where s_i = a_1 + ... + a_i are the exponent prefix sums and s_0 = 0.
/// A terminal of 1 is the plain (non-intermediate) notation.
class FractionalSumForm {
 public:
  /// Validates s_0 = 0, strict increase, and depth >= 1.
  FractionalSumForm(std::vector<Exponent> prefix_sums, Nat terminal);

  static FractionalSumForm from_exponents(const std::vector<Exponent>& exponents, Nat terminal);

  std::size_t depth() const noexcept { return prefix_sums_.size() - 1; }
  const std::vector<Exponent>& prefix_sums() const noexcept { return prefix_sums_; }
  const Nat& terminal() const noexcept { return terminal_; }
  std::vector<Exponent> exponents() const;

  friend bool operator==(const FractionalSumForm&, const FractionalSumForm&) = default;

 private:
  std::vector<Exponent> prefix_sums_;
  Nat terminal_;
};

FractionalSumForm encode_fsn(const OddPos& n, std::uint64_t cap);

/// Encodes the first j steps of n's trajectory. The trajectory may pass
/// through 1 (it then continues around the trivial cycle).
FractionalSumForm encode_ifsn(const OddPos& n, std::uint64_t j, std::uint64_t cap);

/// Exact evaluation. Throws NonIntegerForm when the prefix sums do not
/// describe a real trajectory and NotOddPositive for an even or
/// non-positive result.
OddPos eval_form(const FractionalSumForm& form);

/// 2^x * eval_form(form).
Nat even_lift(const FractionalSumForm& form, Exponent x);

/// Form of C(n) from the form of n: drops a_1 and rebases the prefix sums.
/// Requires depth >= 2.
FractionalSumForm drop_first(const FractionalSumForm& form);

/// The signed terms of the expansion with terminal factored out, i.e.
/// [(+, s_j, j), (-, s_{j-1}, j), ..., (-, s_0, 1)]. Only equals n when
/// terminal is 1.
std::vector<SignedTerm> fsn_terms(const FractionalSumForm& form);

nlohmann::json to_json(const FractionalSumForm& form);
FractionalSumForm form_from_json(const nlohmann::json& doc);

}  // namespace collatz
