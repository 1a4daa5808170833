#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using collatz::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, std::optional<std::string> cap_env = std::nullopt) {
  std::ostringstream out, err;
  int code = run(args, out, err, cap_env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TrajArrowNotation) {
  auto r = call({"traj", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7 -1-> 11 -1-> 17 -2-> 13 -3-> 5 -4-> 1\n");
  EXPECT_EQ(call({"traj", "1"}).out, "1 -2-> 1\n");
}

TEST(Cli, TrajJson) {
  auto r = call({"traj", "27", "--json"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("values").at(1), "41");
  EXPECT_EQ(doc.at("stop"), "ReachedOne");
  EXPECT_EQ(doc.at("exponents").size(), 41u);
}

TEST(Cli, TrajErrors) {
  EXPECT_EQ(call({"traj", "8"}).code, 2);
  EXPECT_EQ(call({"traj", "-3"}).code, 2);
  EXPECT_EQ(call({"traj", "abc"}).code, 2);
  EXPECT_EQ(call({"traj", "27", "--cap", "5"}).code, 3);
  EXPECT_EQ(call({"traj", "27"}, "5").code, 3);
  EXPECT_EQ(call({"traj", "27", "--cap", "500"}, "5").code, 0);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
}

TEST(Cli, TrajTarget) {
  EXPECT_EQ(call({"traj", "7", "--target", "13"}).out, "7 -1-> 11 -1-> 17 -2-> 13\n");
}

TEST(Cli, Gen) {
  EXPECT_EQ(call({"gen", "additive", "--base", "5", "--b", "1"}).out, "453\n");
  EXPECT_EQ(call({"gen", "jump", "--base", "5", "--k", "2", "--b", "1"}).out, "2485509\n");
  EXPECT_EQ(call({"gen", "length1", "2"}).out, "21\n");
  EXPECT_EQ(call({"gen", "length2", "1", "1"}).out, "3\n");
  EXPECT_EQ(call({"gen", "enumerate", "3"}).out, "3 1 4\n13 3 4\n53 5 4\n");
  EXPECT_EQ(call({"gen", "monotonic", "3", "1"}).out, "7 -1-> 11 -1-> 17\n");
  EXPECT_EQ(call({"gen", "length2", "0", "1"}).code, 2);
}

TEST(Cli, Loops) {
  EXPECT_EQ(call({"loops", "search", "--j", "2", "--max-sum", "10"}).out, "n=1 exponents=(2,2)\n");
  EXPECT_EQ(call({"loops", "pairs"}).out, "(2,2)\n(3,1)\n");
  auto r = call({"loops", "check", "3", "1"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.out, "rejected NonInteger value=11/7\n");
  EXPECT_EQ(call({"loops", "form", "19", "2"}).out, "true\n");
}

TEST(Cli, Reverse) {
  auto r = call({"reverse", "step", "9", "1"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("no valid exponent"), std::string::npos);
  EXPECT_EQ(call({"reverse", "step", "1", "4"}).out, "5\n");
  EXPECT_EQ(call({"reverse", "step", "7", "1"}).code, 4);
  EXPECT_EQ(call({"reverse", "rr1", "0", "0", "3"}).out, call({"reverse", "r1", "0", "2"}).out);
  EXPECT_EQ(call({"reverse", "resolve", "5"}).out, "R1 a=0 b=1\n");
  EXPECT_EQ(call({"reverse", "partition", "5"}).out, "X a=0 b=0\n");
  EXPECT_EQ(call({"reverse", "classify", "27"}).out, "3\n");
  EXPECT_EQ(call({"reverse", "rr5", "0", "0", "2"}).code, 2);
}

TEST(Cli, FsnRoundTrip) {
  auto r = call({"fsn", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("prefix_sums"),
            nlohmann::json({"0", "1", "2", "4", "7", "11"}));
  auto ifsn = nlohmann::json::parse(call({"fsn", "27", "--depth", "3"}).out);
  EXPECT_EQ(ifsn.at("depth"), 3);
  EXPECT_EQ(ifsn.at("terminal"), "47");
}

TEST(Cli, Graph) {
  auto r = call({"graph", "bfs", "--value-cap", "100", "--depth", "1", "--exp-cap", "8", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("vertices"), nlohmann::json({"1", "5", "21", "85"}));
  auto dot = call({"graph", "sweep", "--value-cap", "5", "--dot"});
  EXPECT_EQ(dot.out.rfind("digraph collatz {\n", 0), 0u);
  EXPECT_NE(dot.out.find("  5 -> 1 [label=\"4\"];"), std::string::npos);
}

TEST(Cli, Verify) {
  EXPECT_EQ(call({"verify", "rr-steering", "--max", "300"}).code, 0);
  EXPECT_EQ(call({"verify", "nope"}).code, 2);
  auto list = call({"verify", "list"});
  EXPECT_NE(list.out.find("partition"), std::string::npos);

  // identical content apart from elapsed
  auto strip = [](std::string s) { return s.substr(0, s.find(" elapsed=")); };
  auto one = call({"verify", "partition", "--max", "20001", "--workers", "1"});
  auto four = call({"verify", "partition", "--max", "20001", "--workers", "4"});
  EXPECT_EQ(strip(one.out), strip(four.out));
}

TEST(Cli, Pure) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(call({"traj", "97", "--json"}).out, call({"traj", "97", "--json"}).out);
  }
}
