#include "collatz/fsn.hpp"

#include <utility>

#include "collatz/json_codec.hpp"

namespace collatz {

FractionalSumForm::FractionalSumForm(std::vector<Exponent> prefix_sums, Nat terminal)
    : prefix_sums_(std::move(prefix_sums)), terminal_(std::move(terminal)) {
  if (prefix_sums_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "form depth must be at least 1");
  }
  if (prefix_sums_.front() != 0) {
    throw Error(ErrorCode::InvalidArgument, "first prefix sum must be 0");
  }
  for (std::size_t i = 1; i < prefix_sums_.size(); ++i) {
    if (prefix_sums_[i] <= prefix_sums_[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "prefix sums must be strictly increasing");
    }
  }
  if (!OddPos::is_odd_positive(terminal_)) {
    throw Error(ErrorCode::InvalidArgument, "terminal must be a positive odd integer");
  }
}

FractionalSumForm FractionalSumForm::from_exponents(const std::vector<Exponent>& exponents,
                                                    Nat terminal) {
  std::vector<Exponent> sums{0};
  sums.reserve(exponents.size() + 1);
  for (Exponent a : exponents) {
    sums.push_back(sums.back() + a);
  }
  return FractionalSumForm(std::move(sums), std::move(terminal));
}

std::vector<Exponent> FractionalSumForm::exponents() const {
  std::vector<Exponent> out;
  out.reserve(depth());
  for (std::size_t i = 1; i < prefix_sums_.size(); ++i) {
    out.push_back(prefix_sums_[i] - prefix_sums_[i - 1]);
  }
  return out;
}

FractionalSumForm encode_fsn(const OddPos& n, std::uint64_t cap) {
  auto result = trace(n, std::nullopt, cap);
  if (result.reason == StopReason::IterationCapHit) {
    throw CapExceeded(cap);
  }
  return FractionalSumForm::from_exponents(result.trace.exponents, Nat(1));
}

FractionalSumForm encode_ifsn(const OddPos& n, std::uint64_t j, std::uint64_t cap) {
  if (j == 0) {
    throw Error(ErrorCode::InvalidArgument, "intermediate depth must be at least 1");
  }
  if (j > cap) {
    throw CapExceeded(cap);
  }
  std::vector<Exponent> exponents;
  exponents.reserve(j);
  Nat v = n.value();
  for (std::uint64_t i = 0; i < j; ++i) {
    exponents.push_back(advance(v));
  }
  return FractionalSumForm::from_exponents(exponents, std::move(v));
}

OddPos eval_form(const FractionalSumForm& form) {
  const auto& s = form.prefix_sums();
  const std::size_t j = form.depth();
  // 3^j * n = m * 2^{s_j} - sum_{i=1..j} 3^{j-i} * 2^{s_{i-1}}
  Nat numerator = form.terminal() * pow2(s[j]);
  Nat power3 = 1;
  for (std::size_t i = j; i >= 1; --i) {
    numerator -= power3 * pow2(s[i - 1]);
    power3 *= 3;
  }
  // power3 == 3^j here
  if (!mpz_divisible_p(numerator.get_mpz_t(), power3.get_mpz_t())) {
    throw Error(ErrorCode::NonIntegerForm,
                "form evaluates to the non-integer " + ExactRatio(numerator, power3).str());
  }
  Nat value;
  mpz_divexact(value.get_mpz_t(), numerator.get_mpz_t(), power3.get_mpz_t());
  if (!OddPos::is_odd_positive(value)) {
    throw Error(ErrorCode::NotOddPositive,
                "form evaluates to " + value.get_str() + ", not a positive odd integer");
  }
  return OddPos(std::move(value));
}

Nat even_lift(const FractionalSumForm& form, Exponent x) {
  Nat v = eval_form(form).value();
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), x);
  return v;
}

FractionalSumForm drop_first(const FractionalSumForm& form) {
  if (form.depth() < 2) {
    throw Error(ErrorCode::InvalidArgument, "cannot drop the only step of a depth-1 form");
  }
  const auto& s = form.prefix_sums();
  std::vector<Exponent> rebased;
  rebased.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) {
    rebased.push_back(s[i] - s[1]);
  }
  return FractionalSumForm(std::move(rebased), form.terminal());
}

std::vector<SignedTerm> fsn_terms(const FractionalSumForm& form) {
  const auto& s = form.prefix_sums();
  const std::size_t j = form.depth();
  std::vector<SignedTerm> terms;
  terms.reserve(j + 1);
  terms.push_back({+1, s[j], j});
  for (std::size_t i = j; i >= 1; --i) {
    terms.push_back({-1, s[i - 1], i});
  }
  return terms;
}

nlohmann::json to_json(const FractionalSumForm& form) {
  nlohmann::json sums = nlohmann::json::array();
  for (Exponent s : form.prefix_sums()) {
    sums.push_back(std::to_string(s));
  }
  return {{"depth", form.depth()}, {"prefix_sums", sums}, {"terminal", form.terminal().get_str()}};
}

Nat nat_from_json(const nlohmann::json& value) {
  if (value.is_string()) {
    return parse_nat(value.get<std::string>());
  }
  if (value.is_number_unsigned()) {
    return Nat(value.get<unsigned long>());
  }
  throw Error(ErrorCode::InvalidArgument, "expected a decimal string or unsigned number");
}

FractionalSumForm form_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("prefix_sums") || !doc.contains("terminal")) {
    throw Error(ErrorCode::InvalidArgument, "form JSON needs prefix_sums and terminal");
  }
  std::vector<Exponent> sums;
  for (const auto& v : doc.at("prefix_sums")) {
    sums.push_back(to_exponent(nat_from_json(v)));
  }
  FractionalSumForm form(std::move(sums), nat_from_json(doc.at("terminal")));
  if (doc.contains("depth") && nat_from_json(doc.at("depth")) != Nat(static_cast<unsigned long>(form.depth()))) {
    throw Error(ErrorCode::InvalidArgument, "depth does not match prefix_sums length");
  }
  return form;
}

}  // namespace collatz
