#include "scc/serialize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "scc/errors.hpp"
#include "scc/tightgen.hpp"
#include "test_support.hpp"

namespace scc {
namespace {

int CountLines(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    count += line.find(needle) != std::string::npos;
  }
  return count;
}

TEST(RationalTest, FormatAndParse) {
  EXPECT_EQ(FormatRational(Rational(2)), "2/1");
  EXPECT_EQ(FormatRational(Rational(202, 200)), "101/100");
  EXPECT_EQ(DisplayRational(Rational(4, 2)), "2");
  EXPECT_EQ(ParseRational("1/100"), Rational(1, 100));
  EXPECT_EQ(ParseRational("3"), 3);
  EXPECT_EQ(ParseRational("-4/6"), Rational(-2, 3));
  for (const char* bad : {"", "1/0", "a/b", "1/2/3", "1.5"}) {
    EXPECT_THROW(ParseRational(bad), InvalidInput) << bad;
  }
}

TEST(InstanceJsonTest, GeneratedInstancesRoundTripByteForByte) {
  for (const GadgetParams& params :
       {GadgetParams{1, 1, 3, 0}, GadgetParams{1, 2, 5, Rational(1, 100)},
        GadgetParams{2, 2, 9, Rational(7, 3)}}) {
    const Instance inst = Generate(params).instance;
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(SerializeInstance(back), text);
    EXPECT_EQ(back.k(), inst.k());
    EXPECT_EQ(back.graph().labels(), inst.graph().labels());
    ASSERT_EQ(back.num_links(), inst.num_links());
    for (LinkIndex i = 0; i < inst.num_links(); ++i) {
      EXPECT_EQ(back.link(i).cost, inst.link(i).cost);
      EXPECT_EQ(back.link(i).tag, inst.link(i).tag);
    }
  }
  const Instance pert = GluedInstance(1, 2, 5, Rational(1, 100)).instance;
  EXPECT_NE(SerializeInstance(pert).find("\"101/100\""), std::string::npos);
}

TEST(InstanceJsonTest, RandomInstancesRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::RandomInstance(rng);
    const std::string text = SerializeInstance(inst);
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
  }
}

TEST(InstanceJsonTest, SchemaErrors) {
  const nlohmann::json good = InstanceToJson(SingleGadget(1, 3).instance);
  auto expect_invalid = [](const nlohmann::json& doc) {
    EXPECT_THROW(InstanceFromJson(doc), InvalidInput) << doc.dump();
  };
  for (const char* key : {"k", "nodes", "edges", "links"}) {
    nlohmann::json doc = good;
    doc.erase(key);
    expect_invalid(doc);
  }
  nlohmann::json doc = good;
  doc["k"] = "three";
  expect_invalid(doc);
  doc = good;
  doc["links"][0]["cost"] = "1/0";
  expect_invalid(doc);
  doc = good;
  doc["links"][0]["tag"] = "green";
  expect_invalid(doc);
  doc = good;
  doc["edges"][0]["v"] = 99;
  expect_invalid(doc);
  doc = good;
  doc["edges"][0]["mult"] = -1;
  expect_invalid(doc);
  doc = good;
  doc["links"][0]["cost"] = "-1/2";
  expect_invalid(doc);
  EXPECT_THROW(ParseInstance("{not json"), InvalidInput);
  EXPECT_THROW(ParseInstance("[]"), InvalidInput);
}

TEST(TraceJsonTest, PerturbedRunHasNoBlueTightLinks) {
  const LabeledInstance li = GluedInstance(1, 2, 5, DefaultEpsilon());
  const RunResult run = scc::Run(li.instance, AnalyticCoreOracle(li), TiePolicy::kHelpfulBlueFirst);
  const nlohmann::json trace = TraceToJson(run, TiePolicy::kHelpfulBlueFirst);
  EXPECT_EQ(trace["policy"], "helpful-blue-first");
  ASSERT_EQ(trace["iterations"].size(), 1u);
  for (const auto& it : trace["iterations"]) {
    for (const auto& e : it["newly_tight"]) {
      const LinkIndex idx = e.get<LinkIndex>();
      EXPECT_EQ(std::count(li.blue_links.begin(), li.blue_links.end(), idx), 0);
    }
  }
  EXPECT_EQ(trace["iterations"][0]["increment"], "1/1");
  EXPECT_EQ(trace["cost"], "10/1");
  EXPECT_EQ(trace["dual_objective"], "4/1");
  EXPECT_TRUE(trace["deletions"].empty());
}

TEST(TraceJsonTest, DualsAndCuts) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  EXPECT_EQ(CutToJson(li.A(2)), (nlohmann::json{7, 8}));
  DualSolution duals;
  duals.Set(li.C(), Rational(1, 2));
  const nlohmann::json doc = DualsToJson(duals);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["y"], "1/2");
  EXPECT_EQ(doc[0]["cut"], CutToJson(li.C()));
}

TEST(ExportDotTest, SingleGadget) {
  const LabeledInstance li = SingleGadget(1, 3);
  const std::string dot = ExportDot(li.instance);
  EXPECT_EQ(dot.rfind("graph scc {", 0), 0u);
  EXPECT_EQ(CountLines(dot, "[label=\"") - CountLines(dot, " -- "), 7);
  EXPECT_EQ(CountLines(dot, "color=green"), 6);  // tx and ar vanish at q = 1
  EXPECT_EQ(CountLines(dot, "style=dashed"), 5);
  EXPECT_NE(dot.find("0 -- 1 [label=\"2\", color=green]"), std::string::npos);
  EXPECT_EQ(dot.find("3 -- 5 [label=\"0\""), std::string::npos);
}

TEST(ExportDotTest, GluedAndLinkless) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  const std::string dot = ExportDot(li.instance);
  EXPECT_EQ(CountLines(dot, "[label=\"") - CountLines(dot, " -- "), 11);
  EXPECT_NE(dot.find("0 -- 1 [label=\"3\", color=green]"), std::string::npos);  // br = k - pq
  EXPECT_EQ(CountLines(dot, "color=blue"), 3);

  const Instance bare(MultiGraph(2, {{0, 1, 1}}), {}, 1);
  EXPECT_EQ(ExportDot(bare).find("dashed"), std::string::npos);
}

}  // namespace
}  // namespace scc
