#include <gtest/gtest.h>

#include "collatz/engine.hpp"
#include "collatz/error.hpp"
#include "collatz/graph.hpp"
#include "oracle.hpp"

using namespace collatz;

namespace {

SweepPlan plan_for(std::uint64_t cap, std::uint64_t depth = 64, Exponent exp_cap = 0) {
  SweepPlan plan;
  plan.value_cap = cap;
  plan.depth_cap = depth;
  plan.exponent_cap = exp_cap ? exp_cap : mpz_sizeinbase(Nat(cap).get_mpz_t(), 2) + 3;
  return plan;
}

}  // namespace

TEST(Graph, InsertCases) {
  CollatzGraph g;
  EXPECT_EQ(g.insert(Nat(3), Nat(5), 1), InsertCase::NeitherPresent);
  EXPECT_EQ(g.insert(Nat(13), Nat(5), 3), InsertCase::DestPresent);
  EXPECT_EQ(g.insert(Nat(5), Nat(1), 4), InsertCase::SourcePresent);
  EXPECT_EQ(g.insert(Nat(1), Nat(1), 2), InsertCase::BothPresent);
  EXPECT_THROW(g.insert(Nat(5), Nat(1), 4), Error);
  EXPECT_THROW(g.insert(Nat(7), Nat(5), 1), Error);
  EXPECT_THROW(g.insert(Nat(4), Nat(1), 2), Error);
}

TEST(Graph, FirstTwoInsertionsOfTheConstruction) {
  CollatzGraph g;
  EXPECT_EQ(g.insert(r1(Nat(0), 0).value(), Nat(1), 2), InsertCase::NeitherPresent);
  EXPECT_EQ(g.insert(r1(Nat(0), 1).value(), Nat(1), 4), InsertCase::DestPresent);
  EXPECT_EQ(g.vertices(), (std::set<Nat>{1, 5}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 1, 2}, {5, 1, 4}}));
}

TEST(Graph, SweepOrderIsDiagonal) {
  auto steps = sweep_candidates(Nat(100));
  ASSERT_FALSE(steps.empty());
  EXPECT_EQ(steps[0].tag, (PreimageTag{Family::R1, 0, 0}));
  EXPECT_EQ(steps[1].tag, (PreimageTag{Family::R5, 0, 0}));
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const auto& p = steps[i - 1].tag;
    const auto& q = steps[i].tag;
    const Nat dp = p.a + p.b, dq = q.a + q.b;
    ASSERT_TRUE(dp < dq || (dp == dq && (p.a < q.a || (p.a == q.a && p.family == Family::R1))));
  }
}

TEST(Graph, SweepEdgesFollowTheMap) {
  auto g = build_sweep(plan_for(5000));
  for (const auto& [s, e] : g.out_edges()) {
    auto [next, a] = oracle::step(s.get_ui());
    ASSERT_EQ(e.dest, next);
    ASSERT_EQ(e.exponent, a);
    ASSERT_LE(s, 5000);
  }
  for (std::uint64_t n = 1; n <= 5000; n += 2) {
    if (oracle::step(n).first <= 5000) {
      ASSERT_TRUE(g.successor(Nat(n))) << n;
    }
  }
  auto report = is_one_tree(g);
  EXPECT_TRUE(report.is_tree);
}

TEST(Graph, SweepLogRecordsCases) {
  std::vector<SweepStep> log;
  auto g = build_sweep(plan_for(50), &log);
  ASSERT_EQ(log.size(), g.edge_count());
  EXPECT_EQ(log[0].insert_case, InsertCase::NeitherPresent);
  EXPECT_EQ(log[0].source, 1);
  for (const auto& step : log) {
    ASSERT_GE(static_cast<int>(step.insert_case), 1);
    ASSERT_LE(static_cast<int>(step.insert_case), 4);
  }
}

TEST(Graph, ReverseBfsSmallWindow) {
  auto g6 = build_reverse_bfs(plan_for(100, 1, 6));
  EXPECT_EQ(g6.vertices(), (std::set<Nat>{1, 5, 21}));
  auto g8 = build_reverse_bfs(plan_for(100, 1, 8));
  EXPECT_EQ(g8.vertices(), (std::set<Nat>{1, 5, 21, 85}));
  EXPECT_EQ(g8.successor(Nat(85))->exponent, 8u);
}

TEST(Graph, SweepAgreesWithReverseBfs) {
  const auto sweep = build_sweep(plan_for(3000));
  const auto bfs = build_reverse_bfs(plan_for(3000));
  std::size_t common = 0;
  for (const auto& [s, e] : bfs.out_edges()) {
    if (sweep.contains(s) && sweep.contains(e.dest)) {
      ASSERT_EQ(sweep.successor(s), e);
      ++common;
    }
  }
  EXPECT_GT(common, 100u);
  EXPECT_TRUE(is_one_tree(bfs).is_tree);
}

TEST(Graph, OneTreeWitnesses) {
  CollatzGraph orphan;
  orphan.set_value_cap(Nat(100));
  orphan.insert(Nat(1), Nat(1), 2);
  orphan.add_vertex(Nat(3));
  auto r = is_one_tree(orphan);
  EXPECT_FALSE(r.is_tree);
  EXPECT_EQ(r.witness, OneTreeReport::Witness::Orphan);
  EXPECT_EQ(r.witness_vertices, (std::vector<Nat>{3}));

  CollatzGraph frontier;
  frontier.set_value_cap(Nat(10));
  frontier.insert(Nat(7), Nat(11), 1);
  auto f = is_one_tree(frontier);
  EXPECT_TRUE(f.is_tree);
  EXPECT_EQ(f.frontier_count, 1u);
}

TEST(Graph, DotAndJson) {
  CollatzGraph g;
  g.insert(Nat(1), Nat(1), 2);
  g.insert(Nat(5), Nat(1), 4);
  EXPECT_EQ(to_dot(g), "digraph collatz {\n  1;\n  5;\n  1 -> 1 [label=\"2\"];\n  5 -> 1 [label=\"4\"];\n}\n");
  auto doc = to_json(g);
  EXPECT_EQ(doc.at("vertices"), nlohmann::json({"1", "5"}));
  EXPECT_TRUE(doc.at("value_cap").is_null());
  EXPECT_EQ(graph_from_json(doc), g);

  auto big = build_sweep(plan_for(500));
  EXPECT_EQ(graph_from_json(nlohmann::json::parse(to_json(big).dump())), big);
}

TEST(Graph, PlanValidation) {
  SweepPlan plan;
  plan.value_cap = 0;
  EXPECT_THROW(build_sweep(plan), Error);
}
