#include <gtest/gtest.h>

#include <sstream>

#include "dantzig/cli.hpp"

using namespace dantzig;
using namespace dantzig::cli;

namespace {

struct Run {
  int code;
  Json json;
  std::string text;
};

template <class Options>
Run run(int (*cmd)(const Options&, std::ostream&), const Options& o) {
  std::ostringstream out;
  const int code = cmd(o, out);
  Run r{code, {}, out.str()};
  if (!r.text.empty() && r.text.front() == '{') r.json = Json::parse(r.text);
  return r;
}

VerifyOptions verify_options(Family f, IntVector theta, std::vector<std::string> suites = {"all"}) {
  VerifyOptions o;
  o.family = f;
  o.theta = std::move(theta);
  o.suites = std::move(suites);
  return o;
}

const Json* suite(const Json& report, const std::string& name) {
  for (const auto& s : report["suites"])
    if (s["name"] == name) return &s;
  return nullptr;
}

}  // namespace

TEST(ParseTheta, AcceptsAndRejects) {
  EXPECT_EQ(parse_theta("3,2,4,2"), (IntVector{3, 2, 4, 2}));
  EXPECT_THROW(parse_theta("2"), InputError);
  EXPECT_THROW(parse_theta("2,2"), InputError);
  EXPECT_THROW(parse_theta("2,0,2"), InputError);
  EXPECT_THROW(parse_theta("2,-1,2"), InputError);
  EXPECT_THROW(parse_theta("2,a,2"), InputError);
  EXPECT_THROW(parse_theta("2,2,2,"), InputError);
  EXPECT_THROW(parse_theta("2,,2,2"), InputError);
  EXPECT_THROW(parse_family("lex"), InputError);
}

TEST(Construct, Formats) {
  const auto ext = run(cmd_construct, ConstructOptions{Family::GrLex, {2, 2, 2}, "ext"});
  EXPECT_EQ(ext.code, kPass);
  EXPECT_EQ(parse_ext(ext.text).size(), 7u);
  const auto ine = run(cmd_construct, ConstructOptions{Family::GrevLex, {2, 2, 2}, "ine"});
  EXPECT_EQ(parse_ine(ine.text).size(), 6u);
  EXPECT_TRUE(equivalent_systems(parse_ine(ine.text), grevlex_hrep(GrevlexInstance({2, 2, 2}))));
  const auto js = run(cmd_construct, ConstructOptions{Family::GrLex, {1, 1, 1}, "json"});
  EXPECT_EQ(js.json["schema"], 1);
  EXPECT_EQ(js.json["vertices"].size(), 6u);
  EXPECT_EQ(js.json["merged"][0][0], "v(2,3)");
  EXPECT_THROW(run(cmd_construct, ConstructOptions{Family::GrLex, {2, 2, 2}, "svg"}), InputError);
  EXPECT_THROW(build(Family::GrLex, {2, 2}), InputError);
}

TEST(Verify, AllSuitesPass) {
  const auto r = run(cmd_verify, verify_options(Family::GrLex, {3, 2, 4, 2}));
  EXPECT_EQ(r.code, kPass) << r.text;
  EXPECT_EQ(r.json["result"], "pass");
  EXPECT_EQ(r.json["suites"].size(), all_suites().size());
  EXPECT_EQ((*suite(r.json, "expansion"))["metrics"]["value"], "1");
  EXPECT_EQ((*suite(r.json, "graph"))["metrics"]["diameter"], 3);
  const auto q = run(cmd_verify, verify_options(Family::GrevLex, {2, 1, 3, 1, 2}));
  EXPECT_EQ(q.code, kPass) << q.text;
}

TEST(Verify, OracleOnOnes) {
  const auto r = run(cmd_verify, verify_options(Family::GrevLex, {1, 1, 1, 1, 1}, {"oracle"}));
  EXPECT_EQ(r.code, kPass);
  ASSERT_EQ(r.json["suites"].size(), 1u);
  EXPECT_EQ(r.json["suites"][0]["status"], "pass");
}

TEST(Verify, NonStrictGraphHasNote) {
  const auto r = run(cmd_verify, verify_options(Family::GrLex, {1, 2, 2}, {"graph"}));
  EXPECT_EQ(r.code, kPass) << r.text;
  const auto& s = r.json["suites"][0];
  EXPECT_FALSE(s["notes"].empty());
  EXPECT_EQ(s["metrics"]["chromatic_number"], 3);
}

TEST(Verify, BudgetHandling) {
  auto o = verify_options(Family::GrLex, {2, 2, 2, 2, 2, 2, 2}, {"expansion"});
  const auto explicit_run = run(cmd_verify, o);
  EXPECT_EQ(explicit_run.code, kBudgetExceeded);
  EXPECT_EQ(explicit_run.json["result"], "budget_exceeded");

  o.suites = {"all"};
  o.point_cap = 1000;
  const auto all_run = run(cmd_verify, o);
  EXPECT_EQ(all_run.code, kPass);
  EXPECT_EQ((*suite(all_run.json, "expansion"))["status"], "skipped");
  EXPECT_EQ((*suite(all_run.json, "oracle"))["status"], "skipped");

  o.suites = {"oracle"};
  EXPECT_EQ(run(cmd_verify, o).code, kBudgetExceeded);
  EXPECT_THROW(run(cmd_verify, verify_options(Family::GrLex, {2, 2, 2}, {"nope"})), InputError);
}

TEST(Verify, DeterministicWithoutTimings) {
  const auto o = verify_options(Family::GrevLex, {2, 3, 1, 2});
  EXPECT_EQ(run(cmd_verify, o).text, run(cmd_verify, o).text);
  auto timed = o;
  timed.timings = true;
  EXPECT_TRUE(run(cmd_verify, timed).json["suites"][0].contains("millis"));
  EXPECT_FALSE(run(cmd_verify, o).json["suites"][0].contains("millis"));
}

TEST(Compare, Examples) {
  const auto same = run(cmd_compare, CompareOptions{Family::GrLex, {2, 2, 2, 2}, Family::GrLex, {5, 3, 2, 7}});
  EXPECT_EQ(same.code, kPass);
  EXPECT_EQ(same.json["equal"], true);

  const auto cross = run(cmd_compare, CompareOptions{Family::GrLex, {2, 2, 2}, Family::GrevLex, {2, 2, 2}});
  EXPECT_EQ(cross.json["equal"], false);
  EXPECT_EQ(cross.json["invariants"]["facet_sizes"][0], (std::vector<std::size_t>{5, 4, 4, 3, 3, 3}));
  EXPECT_EQ(cross.json["invariants"]["facet_sizes"][1], (std::vector<std::size_t>{4, 4, 4, 4, 3, 3}));

  const auto ones = run(cmd_compare, CompareOptions{Family::GrevLex, {1, 1, 1, 1}, Family::GrevLex, {2, 3, 4, 5}});
  EXPECT_EQ(ones.json["equal"], true);

  const auto merged = run(cmd_compare, CompareOptions{Family::GrLex, {2, 2, 2, 2}, Family::GrLex, {2, 2, 1, 2}});
  EXPECT_EQ(merged.json["equal"], false);

  EXPECT_THROW(run(cmd_compare, CompareOptions{Family::GrLex, {2, 2, 2}, Family::GrLex, {2, 2, 2, 2}}), InputError);
}

TEST(Graph, JsonAndDot) {
  const auto js = run(cmd_graph, GraphOptions{Family::GrevLex, {2, 2, 2}, "json", 0});
  EXPECT_EQ(js.json["vertex_count"], 7);
  EXPECT_EQ(js.json["edge_count"], 11);
  EXPECT_EQ(js.json["chromatic_number"], 3);
  EXPECT_EQ(js.json["expansion"]["value"], "4/3");
  const auto dot = run(cmd_graph, GraphOptions{Family::GrLex, {2, 2, 2}, "dot", 0});
  EXPECT_EQ(dot.text.rfind("graph grlex {", 0), 0u);
  EXPECT_THROW(run(cmd_graph, GraphOptions{Family::GrLex, {2, 2, 2}, "ine", 0}), InputError);
}
