// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "collatz/engine.hpp"
#include "collatz/error.hpp"
#include "collatz/fsn.hpp"
#include "collatz/generate.hpp"
#include "collatz/graph.hpp"
#include "collatz/loops.hpp"
#include "collatz/reverse.hpp"
#include "collatz/verify.hpp"
#include "oracle.hpp"

using namespace collatz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? "," : "") << xs[i];
  }
  out << ')';
  return out.str();
}

Outcome sweep_outcome(const SweepTally& tally) {
  Outcome o;
  if (!tally.failures.empty()) {
    o.fail(std::to_string(tally.failures.size()) + " failures, first: " + tally.failures.front());
  } else {
    o.detail = std::to_string(tally.pass_count) + " checked";
  }
  return o;
}

// 1. The 22 published rows, compared verbatim.
Outcome table1() {
  Outcome o;
  const auto& published = published_length2_table();
  const auto rows = enumerate_length2(22);
  if (rows.size() != 22 || published.size() != 22) {
    o.fail("expected 22 rows");
    return o;
  }
  int mismatches = 0;
  for (std::size_t i = 0; i < 22; ++i) {
    const auto& p = published[i];
    if (rows[i].n.value() != p.n || rows[i].a1 != p.a1 || rows[i].a2 != p.a2) {
      if (mismatches++ == 0) {
        o.fail("row " + std::to_string(i + 1) + " published (" + std::to_string(p.n) + "," +
               std::to_string(p.a1) + "," + std::to_string(p.a2) + ") computed (" + rows[i].n.str() +
               "," + std::to_string(rows[i].a1) + "," + std::to_string(rows[i].a2) + ")");
      }
    }
  }
  if (o.ok) {
    o.detail = "22 rows match, (3,1,4) .. (58253,3,16)";
  } else {
    o.detail += ", " + std::to_string(mismatches) + " mismatching row(s)";
  }
  return o;
}

// 2. Worked examples.
Outcome worked_examples() {
  Outcome o;
  const auto seven = trace(OddPos(7ul), std::nullopt, 100).trace;
  if (seven.exponents != std::vector<Exponent>{1, 1, 2, 3, 4}) {
    o.fail("trace(7) = " + join(seven.exponents));
  }
  const auto five = trace(OddPos(5ul), std::nullopt, 100).trace;
  const OddPos m = additive_next(five, Nat(1));
  const auto m_trace = trace(m, std::nullopt, 100).trace;
  if (m.value() != 453 || m_trace.exponents != std::vector<Exponent>{4, 8}) {
    o.fail("additive_next(trace(5), 1) = " + m.str() + " " + join(m_trace.exponents));
  }
  const OddPos jump = additive_jump(five, Nat(1), 2);
  const auto jump_trace = trace(jump, std::nullopt, 100).trace;
  const auto jump_form = encode_fsn(jump, 100);
  if (jump.value() != 2485509 || jump_trace.exponents != std::vector<Exponent>{4, 2, 20} ||
      jump_form.prefix_sums() != std::vector<Exponent>{0, 4, 6, 26}) {
    o.fail("additive_jump(trace(5), 2, 1) = " + jump.str() + " " + join(jump_trace.exponents) + " " +
           join(jump_form.prefix_sums()));
  }
  if (o.ok) {
    o.detail = "(1,1,2,3,4); 453 (4,8); 2485509 (4,2,20) sums (0,4,6,26)";
  }
  return o;
}

// 3. Convergence of every odd n <= 10^6 under cap 10^4.
Outcome convergence() {
  return sweep_outcome(sharded_sweep(1, 1'000'000, 2, workers(), [](std::uint64_t n) -> std::optional<std::string> {
    const auto r = trace(OddPos(n), std::nullopt, 10'000);
    if (r.reason != StopReason::ReachedOne) {
      return std::to_string(n) + " hit the cap";
    }
    return std::nullopt;
  }));
}

// 4. FSN round trip and IFSN coherence.
Outcome fsn_round_trip() {
  auto round = sharded_sweep(1, 100'000, 2, workers(), [](std::uint64_t n) -> std::optional<std::string> {
    if (eval_form(encode_fsn(OddPos(n), 10'000)).value() != n) {
      return std::to_string(n);
    }
    return std::nullopt;
  });
  auto inter = sharded_sweep(1, 10'000, 2, workers(), [](std::uint64_t n) -> std::optional<std::string> {
    const auto full = trace(OddPos(n), std::nullopt, 10'000).trace;
    Nat m = n;
    for (std::size_t j = 1; j < full.length(); ++j) {
      advance(m);
      const auto form = encode_ifsn(OddPos(n), j, 10'000);
      if (form.terminal() != m || eval_form(form).value() != n) {
        return std::to_string(n) + " at depth " + std::to_string(j);
      }
    }
    return std::nullopt;
  });
  Outcome o = sweep_outcome(round);
  Outcome i = sweep_outcome(inter);
  if (!i.ok) {
    o.fail("ifsn: " + i.detail);
  }
  if (o.ok) {
    o.detail = std::to_string(round.pass_count) + " round trips, " + std::to_string(inter.pass_count) +
               " ifsn starts";
  }
  return o;
}

// 5. Generators.
Outcome generators() {
  Outcome o;
  for (Exponent k = 1; k <= 200; ++k) {
    if (sequence_length(gen_length1(k), 1000) != 1) {
      o.fail("gen_length1(" + std::to_string(k) + ")");
    }
  }
  for (Exponent a1 = 1; a1 <= 12; ++a1) {
    for (Exponent b = 1; b <= 8; ++b) {
      if (sequence_length(gen_length2({a1, b}), 1000) != 2) {
        o.fail("gen_length2(" + std::to_string(a1) + "," + std::to_string(b) + ")");
      }
    }
  }
  // random bases of sequence length 1..4, oracle-checked
  std::mt19937_64 rng(20240611);
  int additive = 0;
  while (additive < 100) {
    const std::uint64_t n = (rng() % 100'000) | 1;
    if (n == 1) {
      continue;
    }
    const auto e = oracle::exponents(n);
    if (e->size() > 4) {
      continue;
    }
    ++additive;
    const auto base = trace(OddPos(n), std::nullopt, 1000).trace;
    const Nat b = 1 + rng() % 3;
    const auto t = trace(additive_next(base, b), std::nullopt, 100'000).trace;
    if (t.length() != base.length() + 1 ||
        !std::equal(base.exponents.begin(), base.exponents.end(), t.exponents.begin())) {
      o.fail("additive_next(" + std::to_string(n) + ", " + b.get_str() + ") = " + join(t.exponents));
    }
  }
  if (o.ok) {
    o.detail = "200 length-1, 96 length-2, 100 additive";
  }
  return o;
}

// 6. Loop elimination.
Outcome loop_elimination() {
  Outcome o;
  using P = std::pair<Exponent, Exponent>;
  if (length2_feasible_pairs() != std::vector<P>{{2, 2}, {3, 1}}) {
    o.fail("feasible pairs differ");
  }
  const auto outcome = loop_candidate({3, 1});
  const auto* rejection = std::get_if<LoopRejection>(&outcome);
  if (!rejection || !rejection->value || rejection->value->str() != "11/7") {
    o.fail("(3,1) not rejected as 11/7");
  }
  const std::pair<std::uint64_t, Exponent> cases[] = {{1, 10}, {2, 10}, {3, 16}};
  for (auto [j, s] : cases) {
    for (const auto& c : search_loops(j, s)) {
      if (c.value.num() != 1) {
        o.fail("j=" + std::to_string(j) + " found " + c.value.str());
      }
    }
    if (search_loops(j, s).empty()) {
      o.fail("j=" + std::to_string(j) + " missed the trivial cycle");
    }
  }
  if (o.ok) {
    o.detail = "pairs [(2,2),(3,1)], (3,1) -> 11/7, only n=1";
  }
  return o;
}

// 7. Partition, uniqueness, X recursion.
Outcome partition() {
  auto tally = sharded_sweep(1, 1'000'000, 2, workers(), [](std::uint64_t n) -> std::optional<std::string> {
    const OddPos v(n);
    const auto level0 = level0_partition(v);
    const auto tag = resolve(v);
    if (level0.evaluate() != v || tag.evaluate() != v || tag.family == Family::X) {
      return std::to_string(n);
    }
    // the resolved tag is the one C(n) dictates
    const auto [next, a] = oracle::step(n);
    const bool r1_side = next % 6 == 1;
    if (tag.a != next / 6 || (tag.family == Family::R1) != r1_side ||
        (r1_side ? 2 * tag.b + 2 : 2 * tag.b + 1) != a) {
      return std::to_string(n) + " resolved to the wrong tag";
    }
    return std::nullopt;
  });
  Outcome o = sweep_outcome(tally);
  for (std::uint64_t a = 0; a <= 500; ++a) {
    for (Exponent k = 0; k <= 12; ++k) {
      if (!x_recursion_check(Nat(a), k)) {
        o.fail("x recursion at a=" + std::to_string(a) + " k=" + std::to_string(k));
      }
    }
  }
  if (o.ok) {
    o.detail += ", x recursion 501x13";
  }
  return o;
}

// 8. Residue steering and powers of two mod 6.
Outcome steering() {
  Outcome o;
  bool covered[3][3] = {};
  for (std::uint64_t a = 0; a <= 300; ++a) {
    for (Exponent b = 0; b <= 20; ++b) {
      for (unsigned c : {1u, 3u, 5u}) {
        const auto cls = mod6_class_from(c);
        const auto s1 = rr1(Nat(a), b, cls);
        const auto s5 = rr5(Nat(a), b, cls);
        if (mod_small(s1.value(), 6) != c || reduced_step(s1).next.value() != 6 * a + 1 ||
            mod_small(s5.value(), 6) != c || reduced_step(s5).next.value() != 6 * a + 5) {
          o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
        covered[a % 3][c / 2] = true;
      }
    }
  }
  int branches = 0;
  for (auto& row : covered) {
    branches += std::count(std::begin(row), std::end(row), true);
  }
  if (branches != 9) {
    o.fail("only " + std::to_string(branches) + " of 9 branches");
  }
  // independent of the library: repeated doubling mod 18
  for (std::uint64_t x = 0; x <= 1000; ++x) {
    auto mod_pow2 = [](std::uint64_t e, unsigned m) {
      unsigned r = 1 % m;
      for (std::uint64_t i = 0; i < e; ++i) r = r * 2 % m;
      return r;
    };
    if (mod_pow2(2 * x + 1, 6) != 2 || mod_pow2(2 * x + 2, 6) != 4 ||
        (mod_pow2(6 * x + 2, 18) + 17) % 18 / 3 % 6 != 1 ||
        (mod_pow2(6 * x + 4, 18) + 17) % 18 / 3 % 6 != 5 ||
        (mod_pow2(6 * x + 6, 18) + 17) % 18 / 3 % 6 != 3) {
      o.fail("power lemma at x=" + std::to_string(x));
    }
  }
  if (!mod6_power_lemmas(1000)) {
    o.fail("mod6_power_lemmas(1000)");
  }
  if (o.ok) {
    o.detail = "301x21x3 steered preimages, 9/9 branches, 5 lemmas to x=1000";
  }
  return o;
}

// 9. Monotone chains.
Outcome monotone() {
  Outcome o;
  struct Case {
    std::uint64_t j, k, start;
  };
  for (const Case& c : {Case{3, 1, 7}, Case{4, 1, 15}, Case{3, 5, 39}, Case{7, 1, 127}}) {
    const auto chain = gen_monotonic(c.j, Nat(c.k));
    if (chain.start.value() != c.start || chain.chain.size() != c.j) {
      o.fail("(" + std::to_string(c.j) + "," + std::to_string(c.k) + ") -> " + chain.start.str());
      continue;
    }
    const auto t = trace(chain.start, std::nullopt, 1000).trace;
    Nat v = chain.start.value();
    for (std::size_t i = 0; i + 1 < chain.chain.size(); ++i) {
      if (chain.chain[i] != v || t.exponents[i] != 1) {
        o.fail("chain of " + chain.start.str() + " leaves the trace at step " + std::to_string(i));
      }
      advance(v);
    }
    if (chain.chain.back() != v) {
      o.fail("chain of " + chain.start.str() + " ends at " + chain.chain.back().get_str());
    }
  }
  const std::vector<Nat> expected{127, 191, 287, 431, 647, 971, 1457};
  if (gen_monotonic(7, Nat(1)).chain != expected) {
    o.fail("chain of 127 differs");
  }
  if (o.ok) {
    o.detail = "7, 15, 39, 127 (7 terms to 1457)";
  }
  return o;
}

// 10. Graph window up to 10^4.
Outcome graph() {
  Outcome o;
  SweepPlan plan;
  plan.value_cap = 10'000;
  plan.depth_cap = 64;
  plan.exponent_cap = 17;
  const auto sweep = build_sweep(plan);
  for (const auto& [s, e] : sweep.out_edges()) {
    const auto step = reduced_step(OddPos(s));
    if (step.next.value() != e.dest || step.exponent != e.exponent) {
      o.fail("edge from " + s.get_str() + " does not follow C");
    }
    if (s == e.dest && !(s == 1 && e.exponent == 2)) {
      o.fail("self-loop at " + s.get_str());
    }
  }
  // out-degree 1: every vertex that is a source appears once (map keys), and
  // every vertex whose successor lies in the window has an edge
  for (const Nat& v : sweep.vertices()) {
    if (!sweep.successor(v) && reduced_step(OddPos(v)).next.value() <= plan.value_cap) {
      o.fail("vertex " + v.get_str() + " without out-edge");
    }
  }
  const auto report = is_one_tree(sweep);
  if (!report.is_tree) {
    o.fail("is_one_tree failed");
  }
  const auto bfs = build_reverse_bfs(plan);
  std::size_t common = 0;
  for (const auto& [s, e] : bfs.out_edges()) {
    if (sweep.contains(s) && sweep.contains(e.dest)) {
      ++common;
      if (sweep.successor(s) != e) {
        o.fail("edge disagreement at " + s.get_str());
      }
    }
  }
  for (const auto& [s, e] : sweep.out_edges()) {
    if (bfs.contains(s) && bfs.contains(e.dest) && bfs.successor(s) != e) {
      o.fail("edge missing from reverse growth at " + s.get_str());
    }
  }
  CollatzGraph replay;
  replay.insert(r1(Nat(0), 0).value(), Nat(1), 2);
  replay.insert(r1(Nat(0), 1).value(), Nat(1), 4);
  if (replay.vertices() != std::set<Nat>{1, 5} || replay.edges() != std::vector<Edge>{{1, 1, 2}, {5, 1, 4}}) {
    o.fail("first two construction steps differ");
  }
  if (o.ok) {
    o.detail = std::to_string(sweep.edge_count()) + " edges, one-tree, " + std::to_string(common) +
               " common edges";
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime bound
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Table-1 reproduction", 1, table1},
      {2, "worked examples", 0, worked_examples},
      {3, "convergence sweep, odd n <= 10^6, cap 10^4", 60, convergence},
      {4, "FSN round trip and IFSN coherence", 0, fsn_round_trip},
      {5, "generator correctness", 0, generators},
      {6, "loop elimination", 5, loop_elimination},
      {7, "reverse partition and uniqueness", 60, partition},
      {8, "RR steering and mod-6 lemmas", 0, steering},
      {9, "monotone chains", 0, monotone},
      {10, "graph window 10^4", 10, graph},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    failed += !o.ok;
    std::printf("%s AC%-2d %-45s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
