#include "collatz/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "collatz/engine.hpp"
#include "collatz/fsn.hpp"
#include "collatz/generate.hpp"
#include "collatz/graph.hpp"
#include "collatz/loops.hpp"
#include "collatz/reverse.hpp"

namespace collatz {

const std::vector<PublishedLength2Row>& published_length2_table() {
  static const std::vector<PublishedLength2Row> rows = {
      {3, 1, 4},      {13, 3, 4},     {53, 5, 4},     {113, 2, 8},    {213, 7, 4},
      {227, 1, 10},   {453, 4, 8},    {853, 9, 4},    {909, 3, 10},   {1813, 6, 8},
      {3413, 11, 4},  {3637, 5, 10},  {7253, 8, 16},  {7281, 2, 14},  {13653, 13, 4},
      {14549, 7, 10}, {14563, 1, 16}, {29013, 10, 8}, {29125, 4, 14}, {54613, 15, 4},
      {58197, 9, 10}, {58253, 3, 16},
  };
  return rows;
}

SweepTally sharded_sweep(std::uint64_t lo, std::uint64_t hi, std::uint64_t stride,
                         unsigned workers, const CheckFn& check) {
  SweepTally tally;
  if (lo > hi || stride == 0) {
    return tally;
  }
  const std::uint64_t count = (hi - lo) / stride + 1;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(count, 1024))));

  std::mutex mu;
  std::vector<std::pair<std::uint64_t, std::string>> failures;
  std::uint64_t passes = 0;

  auto run = [&](unsigned worker) {
    std::uint64_t local_pass = 0;
    std::vector<std::pair<std::uint64_t, std::string>> local_fail;
    // Interleaved blocks keep shards balanced when cost grows with n.
    constexpr std::uint64_t kBlock = 256;
    for (std::uint64_t block = worker; block * kBlock < count; block += workers) {
      const std::uint64_t end = std::min(count, (block + 1) * kBlock);
      for (std::uint64_t i = block * kBlock; i < end; ++i) {
        const std::uint64_t n = lo + i * stride;
        std::optional<std::string> failure;
        try {
          failure = check(n);
        } catch (const std::exception& e) {
          failure = std::to_string(n) + ": " + e.what();
        }
        if (failure) {
          local_fail.emplace_back(n, std::move(*failure));
        } else {
          ++local_pass;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    passes += local_pass;
    failures.insert(failures.end(), local_fail.begin(), local_fail.end());
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::sort(failures.begin(), failures.end());
  tally.pass_count = passes;
  for (auto& f : failures) {
    tally.failures.push_back(std::move(f.second));
  }
  return tally;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<Exponent>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? "," : "") << xs[i];
  }
  out << ')';
  return out.str();
}

std::string range_to(std::string_view what, std::uint64_t max) {
  return std::string(what) + " <= " + std::to_string(max);
}

std::optional<std::string> fail_if(bool bad, std::uint64_t n, std::string_view why) {
  if (!bad) {
    return std::nullopt;
  }
  return std::to_string(n) + ": " + std::string(why);
}

struct SuiteResult {
  std::string range;
  SweepTally tally;
};

using SuiteFn = SuiteResult (*)(std::uint64_t max, const VerifyOptions& opt);

SuiteResult suite_convergence(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 2, opt.workers, [&](std::uint64_t n) {
    sequence_length(OddPos(n), opt.cap);
    return std::optional<std::string>{};
  });
  return {range_to("odd n", max) + ", cap " + std::to_string(opt.cap), std::move(tally)};
}

SuiteResult suite_reduced_step(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 2, opt.workers, [](std::uint64_t n) {
    const auto [m, a] = reduced_step(OddPos(n));
    Nat back = m.value();
    mpz_mul_2exp(back.get_mpz_t(), back.get_mpz_t(), a);
    return fail_if(back != 3 * Nat(n) + 1 || a < 1, n, "m * 2^a != 3n+1");
  });
  return {range_to("odd n", max), std::move(tally)};
}

SuiteResult suite_cross_check(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 1, opt.workers, [&](std::uint64_t n) {
    return fail_if(!cross_check(Nat(n), opt.cap), n, "F-orbit and C-orbit disagree");
  });
  return {range_to("n", max), std::move(tally)};
}

SuiteResult suite_fsn_roundtrip(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 2, opt.workers, [&](std::uint64_t n) {
    const auto form = encode_fsn(OddPos(n), opt.cap);
    return fail_if(eval_form(form).value() != n, n, "eval_form(encode_fsn(n)) != n");
  });
  return {range_to("odd n", max), std::move(tally)};
}

SuiteResult suite_ifsn(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(3, max, 2, opt.workers, [&](std::uint64_t n) -> std::optional<std::string> {
    const OddPos start(n);
    const std::uint64_t length = sequence_length(start, opt.cap);
    Nat walker(n);
    for (std::uint64_t j = 1; j < length; ++j) {
      advance(walker);
      const auto form = encode_ifsn(start, j, opt.cap);
      if (eval_form(form).value() != n) {
        return std::to_string(n) + ": IFSN at depth " + std::to_string(j) + " does not evaluate to n";
      }
      if (form.terminal() != walker) {
        return std::to_string(n) + ": IFSN terminal at depth " + std::to_string(j) + " is not C^j(n)";
      }
    }
    const auto full = encode_fsn(start, opt.cap);
    if (!(encode_ifsn(start, length, opt.cap) == full)) {
      return std::to_string(n) + ": IFSN with terminal 1 differs from FSN";
    }
    if (full.depth() >= 2) {
      Nat next(n);
      advance(next);
      if (eval_form(drop_first(full)).value() != next) {
        return std::to_string(n) + ": dropping the first exponent does not give C(n)";
      }
    }
    return std::nullopt;
  });
  return {"odd n in [3, " + std::to_string(max) + "], every depth below the sequence length",
          std::move(tally)};
}

SuiteResult suite_length1(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 1, opt.workers, [&](std::uint64_t k) -> std::optional<std::string> {
    const OddPos n = gen_length1(k);
    auto result = trace(n, std::nullopt, opt.cap);
    if (sequence_length(n, opt.cap) != 1) {
      return std::to_string(k) + ": gen_length1 result does not have length 1";
    }
    if (result.trace.exponents != std::vector<Exponent>{2 * k + 2}) {
      return std::to_string(k) + ": exponent is not 2k+2";
    }
    // Odd powers never give a length-1 number: 2^e - 1 = 1 (mod 3).
    const std::uint64_t e = 2 * k - 1;
    if (mod_small(pow2(e) - 1, 3) != 1 || mod_small(pow2(2 * k + 1) - 1, 3) != 1) {
      return std::to_string(k) + ": odd-power lemma fails";
    }
    return std::nullopt;
  });
  return {"k in [1, " + std::to_string(max) + "]", std::move(tally)};
}

SuiteResult suite_length2(std::uint64_t max, const VerifyOptions& opt) {
  constexpr std::uint64_t kMaxB = 8;
  auto tally = sharded_sweep(1, max, 1, opt.workers, [&](std::uint64_t a1) -> std::optional<std::string> {
    for (std::uint64_t b = 1; b <= kMaxB; ++b) {
      const Length2Params p(a1, b);
      const OddPos n = gen_length2(p);
      auto result = trace(n, std::nullopt, opt.cap);
      const std::vector<Exponent> expected{a1, length2_second_exponent(p)};
      if (result.reason != StopReason::ReachedOne || result.trace.exponents != expected) {
        return "(a1=" + std::to_string(a1) + ", b=" + std::to_string(b) + "): trace " +
               join(result.trace.exponents) + " expected " + join(expected);
      }
    }
    return std::nullopt;
  });
  return {"a1 in [1, " + std::to_string(max) + "], b in [1, 8]", std::move(tally)};
}

SuiteResult suite_length2_enum(std::uint64_t max, const VerifyOptions& opt) {
  // Brute-force oracle: every odd n <= max with sequence length exactly 2.
  std::vector<std::uint64_t> brute;
  for (std::uint64_t n = 3; n <= max; n += 2) {
    Nat v(n);
    advance(v);
    if (v == 1) {
      continue;
    }
    advance(v);
    if (v == 1) {
      brute.push_back(n);
    }
  }
  SweepTally tally;
  const auto rows = enumerate_length2(brute.size() + 1);
  for (std::size_t i = 0; i < brute.size(); ++i) {
    if (rows[i].n.value() != brute[i]) {
      tally.failures.push_back("row " + std::to_string(i) + ": generator " + rows[i].n.str() +
                               ", brute force " + std::to_string(brute[i]));
    } else {
      ++tally.pass_count;
    }
  }
  if (rows.back().n.value() <= max) {
    tally.failures.push_back("generator yields " + rows.back().n.str() + " missed by brute force");
  }
  (void)opt;
  return {range_to("odd n", max), std::move(tally)};
}

SuiteResult suite_table1(std::uint64_t, const VerifyOptions&) {
  const auto& published = published_length2_table();
  const auto rows = enumerate_length2(published.size());
  SweepTally tally;
  for (std::size_t i = 0; i < published.size(); ++i) {
    const auto& want = published[i];
    const auto& got = rows[i];
    if (got.n.value() != want.n || got.a1 != want.a1 || got.a2 != want.a2) {
      std::ostringstream msg;
      msg << "row " << i + 1 << ": published (" << want.n << ", " << want.a1 << ", " << want.a2
          << "), computed (" << got.n.str() << ", " << got.a1 << ", " << got.a2 << ")";
      tally.failures.push_back(msg.str());
    } else {
      ++tally.pass_count;
    }
  }
  return {"first 22 rows", std::move(tally)};
}

// Odd numbers below a small bound grouped by sequence length 1..4.
std::vector<ExponentTrace> small_bases(std::uint64_t bound, std::uint64_t max_length) {
  std::vector<ExponentTrace> bases;
  for (std::uint64_t n = 3; n <= bound; n += 2) {
    auto result = trace(OddPos(n), std::nullopt, max_length);
    if (result.reason == StopReason::ReachedOne) {
      bases.push_back(std::move(result.trace));
    }
  }
  return bases;
}

SuiteResult suite_additive(std::uint64_t max, const VerifyOptions& opt) {
  const auto bases = small_bases(4001, 4);
  std::vector<std::pair<std::size_t, std::uint64_t>> picks;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
  std::uniform_int_distribution<std::uint64_t> pick_b(1, 3);
  for (std::uint64_t i = 0; i < max; ++i) {
    picks.emplace_back(pick_base(rng), pick_b(rng));
  }
  auto tally = sharded_sweep(0, max - 1, 1, opt.workers, [&](std::uint64_t i) -> std::optional<std::string> {
    const auto& base = bases[picks[i].first];
    const Nat b(picks[i].second);
    const OddPos m = additive_next(base, b);
    auto result = trace(m, std::nullopt, opt.cap);
    const auto expected = additive_predicted_exponents(base, b, 1);
    if (result.reason != StopReason::ReachedOne || result.trace.exponents != expected) {
      return "base " + base.start.str() + ", b=" + b.get_str() + ": trace " +
             join(result.trace.exponents) + " expected " + join(expected);
    }
    return std::nullopt;
  });
  return {std::to_string(max) + " random bases of length 1-4, b in [1, 3]", std::move(tally)};
}

SuiteResult suite_jump(std::uint64_t max, const VerifyOptions& opt) {
  const auto bases = small_bases(201, 3);
  auto tally = sharded_sweep(0, bases.size() - 1, 1, opt.workers, [&](std::uint64_t i) -> std::optional<std::string> {
    const auto& base = bases[i];
    for (std::uint64_t k = 1; k <= max; ++k) {
      for (unsigned long bb = 1; bb <= 2; ++bb) {
        const Nat b(bb);
        const OddPos m = additive_jump(base, b, k);
        auto result = trace(m, std::nullopt, opt.cap);
        const auto expected = additive_predicted_exponents(base, b, k);
        const auto twos = std::count(result.trace.exponents.begin() + static_cast<long>(base.length()),
                                     result.trace.exponents.end() - 1, Exponent{2});
        if (result.trace.exponents != expected || static_cast<std::uint64_t>(twos) != k - 1) {
          return "base " + base.start.str() + ", k=" + std::to_string(k) + ", b=" + b.get_str() +
                 ": trace " + join(result.trace.exponents);
        }
      }
    }
    return std::nullopt;
  });
  return {"bases <= 201 of length 1-3, k in [1, " + std::to_string(max) + "], b in [1, 2]",
          std::move(tally)};
}

SuiteResult suite_incompleteness(std::uint64_t, const VerifyOptions& opt) {
  SweepTally tally;
  const Nat target(227);
  const auto rows = enumerate_length2(6);
  if (!(rows[5].n.value() == target && rows[5].a1 == 1)) {
    tally.failures.push_back("227 is not the sixth length-2 number with a1 = 1");
  } else {
    ++tally.pass_count;
  }
  // Length-1 bases below 227 are 5, 21 and 85; additive values grow with b.
  for (Exponent k = 1;; ++k) {
    const OddPos base = gen_length1(k);
    if (base.value() > target) {
      break;
    }
    const auto base_trace = trace(base, std::nullopt, opt.cap).trace;
    for (unsigned long b = 0;; ++b) {
      const OddPos m = additive_next(base_trace, Nat(b));
      if (m.value() == target) {
        tally.failures.push_back("227 produced from base " + base.str());
      }
      if (m.value() > target) {
        break;
      }
    }
    ++tally.pass_count;
  }
  return {"227 against every length-1 base below it", std::move(tally)};
}

SuiteResult suite_loops(std::uint64_t, const VerifyOptions&) {
  SweepTally tally;
  auto check = [&](bool ok, std::string what) {
    if (ok) {
      ++tally.pass_count;
    } else {
      tally.failures.push_back(std::move(what));
    }
  };
  using Pairs = std::vector<std::pair<Exponent, Exponent>>;
  check(length2_feasible_pairs() == Pairs{{2, 2}, {3, 1}}, "feasible pairs differ from {(2,2),(3,1)}");

  const auto rejected = loop_candidate({3, 1});
  const auto* r = std::get_if<LoopRejection>(&rejected);
  check(r != nullptr && r->reason == RejectionReason::NonInteger && r->value &&
            *r->value == ExactRatio(Nat(11), Nat(7)),
        "(3,1) is not rejected as 11/7");

  const std::vector<std::pair<std::uint64_t, Exponent>> searches = {{1, 10}, {2, 10}, {3, 16}};
  for (const auto& [j, max_sum] : searches) {
    const auto found = search_loops(j, max_sum);
    bool only_one = !found.empty();
    for (const auto& c : found) {
      const OddPos n(c.value.num());
      only_one = only_one && c.value.num() == 1 &&
                 c.exponents == std::vector<Exponent>(j, 2) && loop_form_check(n, j) &&
                 mod_small(c.value.num(), 6) == 1 && loop_member_equation(c.value.num(), Nat(1), c.exponents);
    }
    check(only_one, "search_loops(" + std::to_string(j) + ", " + std::to_string(max_sum) +
                        ") found something other than n = 1");
  }
  return {"j in {1,2,3}, exponent sums {10,10,16}", std::move(tally)};
}

SuiteResult suite_partition(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 2, opt.workers, [](std::uint64_t n) -> std::optional<std::string> {
    const OddPos v(n);
    const auto level0 = level0_partition(v);
    if (!(level0.evaluate() == v) || level0.b != 0) {
      return std::to_string(n) + ": level-0 partition does not reconstruct";
    }
    const auto tag = resolve(v);
    if (tag.family == Family::X || !(tag.evaluate() == v)) {
      return std::to_string(n) + ": resolve does not reconstruct";
    }
    return std::nullopt;
  });
  return {range_to("odd n", max), std::move(tally)};
}

SuiteResult suite_x_recursion(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(0, max, 1, opt.workers, [](std::uint64_t a) -> std::optional<std::string> {
    for (Exponent k = 0; k <= 12; ++k) {
      if (!x_recursion_check(Nat(a), k)) {
        return "(a=" + std::to_string(a) + ", k=" + std::to_string(k) + ")";
      }
    }
    return std::nullopt;
  });
  return {"a in [0, " + std::to_string(max) + "], k in [0, 12]", std::move(tally)};
}

SuiteResult suite_parity_lemmas(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 2, opt.workers, [](std::uint64_t n) -> std::optional<std::string> {
    const OddPos v(n);
    const auto cls = mod6_classify(v);
    for (Exponent x = 1; x <= 10; ++x) {
      ErrorCode expected = ErrorCode::Internal;  // Internal: no error expected
      if (cls == Mod6Class::Three) {
        expected = ErrorCode::ClassThree;
      } else if ((cls == Mod6Class::One) == (x % 2 == 1)) {
        expected = ErrorCode::ParityMismatch;
      }
      try {
        const OddPos m = reverse_step(v, x);
        const auto step = reduced_step(m);
        if (expected != ErrorCode::Internal || !(step.next == v) || step.exponent != x) {
          return std::to_string(n) + ": reverse_step(" + std::to_string(x) + ") misbehaves";
        }
      } catch (const Error& e) {
        if (e.code() != expected) {
          return std::to_string(n) + ": x=" + std::to_string(x) + " raised " + to_string(e.code());
        }
      }
    }
    return std::nullopt;
  });
  return {range_to("odd n", max) + ", x in [1, 10]", std::move(tally)};
}

SuiteResult suite_rr_steering(std::uint64_t max, const VerifyOptions& opt) {
  std::mutex mu;
  std::set<std::pair<unsigned, unsigned>> branches;
  auto tally = sharded_sweep(0, max, 1, opt.workers, [&](std::uint64_t a_small) -> std::optional<std::string> {
    const Nat a(a_small);
    for (Exponent b = 0; b <= 20; ++b) {
      for (unsigned c : {1u, 3u, 5u}) {
        const Mod6Class cls = mod6_class_from(c);
        const OddPos x1 = rr1(a, b, cls);
        const auto s1 = reduced_step(x1);
        if (mod_small(x1.value(), 6) != c || s1.next.value() != 6 * a + 1 ||
            s1.exponent != rr1_exponent(a, b, cls)) {
          return "rr1(" + std::to_string(a_small) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
        }
        const OddPos x5 = rr5(a, b, cls);
        const auto s5 = reduced_step(x5);
        if (mod_small(x5.value(), 6) != c || s5.next.value() != 6 * a + 5 ||
            s5.exponent != rr5_exponent(a, b, cls)) {
          return "rr5(" + std::to_string(a_small) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (unsigned c : {1u, 3u, 5u}) {
      branches.emplace(static_cast<unsigned>(a_small % 3), c);
    }
    return std::nullopt;
  });
  if (max >= 2 && branches.size() != 9) {
    tally.failures.push_back("only " + std::to_string(branches.size()) + " of 9 (a mod 3, c) branches covered");
  }
  return {"a in [0, " + std::to_string(max) + "], b in [0, 20], c in {1,3,5}", std::move(tally)};
}

SuiteResult suite_rr_filter(std::uint64_t max, const VerifyOptions& opt) {
  constexpr Exponent kB = 5;
  auto tally = sharded_sweep(0, max, 1, opt.workers, [&](std::uint64_t a_small) -> std::optional<std::string> {
    const Nat a(a_small);
    for (unsigned c : {1u, 3u, 5u}) {
      const Mod6Class cls = mod6_class_from(c);
      for (int family = 0; family < 2; ++family) {
        std::set<Nat> steered;
        std::set<Nat> filtered;
        for (Exponent b = 0; b <= kB; ++b) {
          steered.insert((family == 0 ? rr1(a, b, cls) : rr5(a, b, cls)).value());
        }
        for (Exponent b = 0; b <= 3 * kB + 2; ++b) {
          const OddPos v = family == 0 ? r1(a, b) : r5(a, b);
          if (mod_small(v.value(), 6) == c) {
            filtered.insert(v.value());
          }
        }
        if (steered != filtered) {
          return std::string(family == 0 ? "rr1" : "rr5") + " image differs from filtered R at a=" +
                 std::to_string(a_small) + ", c=" + std::to_string(c);
        }
      }
    }
    return std::nullopt;
  });
  return {"a in [0, " + std::to_string(max) + "], B = 5", std::move(tally)};
}

SuiteResult suite_mod6_lemmas(std::uint64_t max, const VerifyOptions&) {
  SweepTally tally;
  if (mod6_power_lemmas(max)) {
    tally.pass_count = max + 1;
  } else {
    tally.failures.push_back("a power-of-two congruence fails for some x <= " + std::to_string(max));
  }
  return {"x in [0, " + std::to_string(max) + "]", std::move(tally)};
}

SuiteResult suite_monotonic(std::uint64_t max, const VerifyOptions& opt) {
  auto tally = sharded_sweep(1, max, 1, opt.workers, [&](std::uint64_t j) -> std::optional<std::string> {
    for (unsigned long k = 1; k <= 50; ++k) {
      const auto chain = gen_monotonic(j, Nat(k));
      Nat v = chain.start.value();
      for (std::size_t i = 0; i < chain.chain.size(); ++i) {
        if (chain.chain[i] != v || (i > 0 && chain.chain[i] <= chain.chain[i - 1])) {
          return "(j=" + std::to_string(j) + ", k=" + std::to_string(k) + ") chain mismatch at " +
                 std::to_string(i);
        }
        if (i + 1 < chain.chain.size() && advance(v) != 1) {
          return "(j=" + std::to_string(j) + ", k=" + std::to_string(k) + ") exponent not 1 at " +
                 std::to_string(i);
        }
      }
    }
    return std::nullopt;
  });
  return {"j in [1, " + std::to_string(max) + "], k in [1, 50]", std::move(tally)};
}

SuiteResult suite_graph(std::uint64_t max, const VerifyOptions&) {
  SweepTally tally;
  auto check = [&](bool ok, std::string what) {
    if (ok) {
      ++tally.pass_count;
    } else {
      tally.failures.push_back(std::move(what));
    }
  };
  const Nat cap(max);
  SweepPlan plan{SweepMode::FormulaSweep, cap, 1, 1};
  const CollatzGraph sweep = build_sweep(plan);  // throws on a repeated source

  bool degrees = true;
  for (const Nat& v : sweep.vertices()) {
    const auto next = reduced_step(OddPos(v)).next.value();
    const bool has_edge = sweep.successor(v).has_value();
    // A vertex has its out-edge exactly when its successor fits the window.
    degrees = degrees && (has_edge == (next <= cap));
  }
  check(degrees, "out-degree is not 1 for every vertex whose successor is within the cap");
  std::size_t self_loops = 0;
  for (const auto& e : sweep.edges()) {
    self_loops += e.source == e.dest ? 1 : 0;
  }
  check(self_loops == 1 && sweep.successor(Nat(1)) == OutEdge{Nat(1), 2},
        "the only self-loop must be (1, 1, 2)");

  bool forward = true;
  for (std::uint64_t n = 1; n <= max; n += 2) {
    const auto step = reduced_step(OddPos(n));
    if (step.next.value() <= cap) {
      forward = forward && sweep.successor(Nat(n)) == OutEdge{step.next.value(), step.exponent};
    }
  }
  check(forward, "sweep misses an edge of the forward map");

  const auto tree = is_one_tree(sweep);
  check(tree.is_tree, "sweep graph is not a one-tree");

  SweepPlan bfs_plan{SweepMode::ReverseBFS, cap, 10'000, mpz_sizeinbase(cap.get_mpz_t(), 2) + 3};
  const CollatzGraph bfs = build_reverse_bfs(bfs_plan);
  bool agree = true;
  for (const auto& [s, e] : bfs.out_edges()) {
    if (sweep.contains(s) && sweep.contains(e.dest)) {
      agree = agree && sweep.successor(s) == e;
    }
  }
  for (const auto& [s, e] : sweep.out_edges()) {
    if (bfs.contains(s) && bfs.contains(e.dest)) {
      agree = agree && bfs.successor(s) == e;
    }
  }
  check(agree, "sweep and reverse BFS disagree on common vertices");
  check(is_one_tree(bfs).is_tree, "reverse BFS graph is not a one-tree");
  return {"value cap " + std::to_string(max), std::move(tally)};
}

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {{"convergence", "every odd n reaches 1 within the cap", 1'000'000}, suite_convergence},
      {{"reduced-step", "C(n) * 2^a = 3n+1 with C(n) odd", 1'000'000}, suite_reduced_step},
      {{"cross-check", "F-orbit odd values equal the C-orbit", 100'000}, suite_cross_check},
      {{"fsn-roundtrip", "eval_form(encode_fsn(n)) = n", 100'000}, suite_fsn_roundtrip},
      {{"ifsn", "intermediate forms evaluate back at every depth", 10'000}, suite_ifsn},
      {{"length1", "(2^{2k+2}-1)/3 has sequence length 1", 200}, suite_length1},
      {{"length2", "length-2 formula over an (a1, b) grid", 12}, suite_length2},
      {{"length2-enum", "length-2 generator against brute force", 100'000}, suite_length2_enum},
      {{"table1", "first 22 length-2 numbers against the published table", 22}, suite_table1},
      {{"additive", "additive extension on random bases", 100}, suite_additive},
      {{"jump", "additive jump through the trivial cycle", 5}, suite_jump},
      {{"incompleteness", "227 is not an additive extension of a length-1 number", 227},
       suite_incompleteness},
      {{"loops", "length-2 elimination and bounded loop search", 3}, suite_loops},
      {{"partition", "level-0 partition and unique R1/R5 resolution", 1'000'000}, suite_partition},
      {{"x-recursion", "X splits into R1, R5 and X one level up", 500}, suite_x_recursion},
      {{"parity-lemmas", "reverse-step exponent parity by residue class", 100'000},
       suite_parity_lemmas},
      {{"rr-steering", "RR1/RR5 hit the requested residue mod 6", 300}, suite_rr_steering},
      {{"rr-filter", "RR images equal residue-filtered R images", 50}, suite_rr_filter},
      {{"mod6-lemmas", "powers of two modulo 6", 1000}, suite_mod6_lemmas},
      {{"monotonic", "2^j k - 1 climbs with exponent 1", 16}, suite_monotonic},
      {{"graph", "formula sweep is a one-tree and matches reverse BFS", 10'000}, suite_graph},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) {
      out.push_back(e.info);
    }
    return out;
  }();
  return infos;
}

VerifyReport run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& entry : registry()) {
    if (entry.info.name != name) {
      continue;
    }
    const auto started = Clock::now();
    const std::uint64_t max = options.max.value_or(entry.info.default_max);
    SuiteResult result;
    try {
      result = entry.fn(max, options);
    } catch (const std::exception& e) {
      result.range = "max " + std::to_string(max);
      result.tally.failures.push_back(std::string("suite aborted: ") + e.what());
    }
    VerifyReport report;
    report.check_name = entry.info.name;
    report.range = std::move(result.range);
    report.pass_count = result.tally.pass_count;
    report.failures = std::move(result.tally.failures);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
    return report;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + std::string(name) + "'");
}

}  // namespace collatz
