#include "scc/wgmv.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "scc/errors.hpp"
#include "scc/oracle.hpp"
#include "scc/tightgen.hpp"
#include "test_support.hpp"

namespace scc {
namespace {

std::vector<LinkIndex> Sorted(std::vector<LinkIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<LinkIndex> Concat(const std::vector<LinkIndex>& a,
                              const std::vector<LinkIndex>& b) {
  std::vector<LinkIndex> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

TEST(PolicyTest, NamesRoundTrip) {
  for (TiePolicy p : {TiePolicy::kAdversarialRedFirst, TiePolicy::kHelpfulBlueFirst,
                      TiePolicy::kInputOrder, TiePolicy::kCostAscending}) {
    EXPECT_EQ(ParsePolicy(PolicyName(p)), p);
  }
  EXPECT_FALSE(ParsePolicy("random").has_value());
}

TEST(PolicyTest, OrderByPolicy) {
  const Instance inst(MultiGraph(3, {}),
                      {{0, 1, Rational(2), LinkTag::kBlue},
                       {1, 2, Rational(1), LinkTag::kNone},
                       {0, 2, Rational(1, 2), LinkTag::kRed},
                       {0, 1, Rational(1), LinkTag::kRed}},
                      1);
  auto order = [&](TiePolicy p) {
    std::vector<LinkIndex> links{0, 1, 2, 3};
    OrderByPolicy(inst, p, links);
    return links;
  };
  EXPECT_EQ(order(TiePolicy::kAdversarialRedFirst), (std::vector<LinkIndex>{2, 3, 1, 0}));
  EXPECT_EQ(order(TiePolicy::kHelpfulBlueFirst), (std::vector<LinkIndex>{0, 1, 2, 3}));
  EXPECT_EQ(order(TiePolicy::kInputOrder), (std::vector<LinkIndex>{0, 1, 2, 3}));
  EXPECT_EQ(order(TiePolicy::kCostAscending), (std::vector<LinkIndex>{2, 1, 3, 0}));
}

TEST(Phase1Test, GluedExactCostsRaiseAllCoresOnce) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  const AnalyticCoreOracle oracle(li);
  const Phase1Result r = Phase1(li.instance, oracle, TiePolicy::kAdversarialRedFirst);
  ASSERT_EQ(r.trace.iterations.size(), 1u);
  const Iteration& it = r.trace.iterations[0];
  EXPECT_EQ(it.increment, 1);
  EXPECT_EQ(it.active_cores.size(), 4u);  // p + 2
  for (const Cut& core : it.active_cores) EXPECT_EQ(r.duals.value(core), 1);
  EXPECT_EQ(r.duals.entries().size(), 4u);
  EXPECT_EQ(it.newly_tight.size(), 9u);  // 4p + 1
  // Adversarial order appends every red link before any blue one.
  EXPECT_EQ(r.added, Concat(li.red_links, li.blue_links));
}

TEST(Phase1Test, PerturbedBlueCostsNeverSelectBlue) {
  const LabeledInstance li = GluedInstance(1, 2, 5, DefaultEpsilon());
  for (TiePolicy policy : {TiePolicy::kAdversarialRedFirst, TiePolicy::kHelpfulBlueFirst,
                           TiePolicy::kInputOrder, TiePolicy::kCostAscending}) {
    const Phase1Result r = Phase1(li.instance, AnalyticCoreOracle(li), policy);
    ASSERT_EQ(r.trace.iterations.size(), 1u);
    EXPECT_EQ(Sorted(r.trace.iterations[0].newly_tight), li.red_links);
  }
}

TEST(Phase1Test, EmptyFamilyMeansNoIterations) {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  const Instance inst(MultiGraph(3, edges), {{0, 1, Rational(1)}}, 1);
  const Phase1Result r = Phase1(inst, BruteForceCoreOracle(), TiePolicy::kInputOrder);
  EXPECT_TRUE(r.trace.iterations.empty());
  EXPECT_TRUE(r.added.empty());
  EXPECT_TRUE(r.duals.empty());
}

TEST(Phase1Test, InfeasibleInstanceIsReported) {
  // Node 2 is isolated and no link touches it.
  const Instance inst(MultiGraph(3, {{0, 1, 2}}), {{0, 1, Rational(1)}}, 1);
  EXPECT_THROW(Phase1(inst, BruteForceCoreOracle(), TiePolicy::kInputOrder), Infeasible);
}

TEST(Phase1Test, ZeroCostLinksComeFirstWithZeroIncrement) {
  // Path 0-1-2 with k = 2; a free link 0-2 covers everything.
  const Instance inst(MultiGraph(3, {{0, 1, 1}, {1, 2, 1}}),
                      {{0, 1, Rational(1)}, {0, 2, Rational(0)}, {1, 2, Rational(1)}}, 2);
  const Phase1Result r = Phase1(inst, BruteForceCoreOracle(), TiePolicy::kInputOrder);
  ASSERT_EQ(r.trace.iterations.size(), 1u);
  EXPECT_EQ(r.trace.iterations[0].increment, 0);
  EXPECT_EQ(r.trace.iterations[0].newly_tight, (std::vector<LinkIndex>{1}));
  EXPECT_EQ(DualObjective(r.duals), 0);
}

TEST(ReverseDeleteTest, AdditionOrderDecidesTheSurvivor) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  std::vector<LinkIndex> deleted;
  const auto adversarial =
      ReverseDelete(li.instance, Concat(li.red_links, li.blue_links), &deleted);
  EXPECT_EQ(Sorted(adversarial), li.red_links);
  EXPECT_EQ(li.instance.Cost(adversarial), 10);
  // Blue links are visited last-added-first.
  EXPECT_EQ(deleted, (std::vector<LinkIndex>(li.blue_links.rbegin(), li.blue_links.rend())));

  const auto helpful = ReverseDelete(li.instance, Concat(li.blue_links, li.red_links));
  EXPECT_EQ(Sorted(helpful), li.blue_links);
  EXPECT_EQ(li.instance.Cost(helpful), 4);
}

TEST(ReverseDeleteTest, MinimalInputIsUnchangedAndInfeasibleInputRejected) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  EXPECT_EQ(ReverseDelete(li.instance, li.red_links), li.red_links);
  EXPECT_THROW(ReverseDelete(li.instance, {}), InvalidInput);
}

TEST(RunTest, TightExamples) {
  const LabeledInstance glued = GluedInstance(1, 2, 5);
  const RunResult g = scc::Run(glued.instance, AnalyticCoreOracle(glued),
                          TiePolicy::kAdversarialRedFirst);
  EXPECT_EQ(g.cost, 10);
  EXPECT_EQ(DualObjective(g.duals), 4);
  EXPECT_EQ(g.cost / DualObjective(g.duals), Rational(5 * 2, 2 + 2));
  EXPECT_EQ(g.selected, glued.red_links);

  const LabeledInstance single = SingleGadget(1, 3);
  const RunResult s = scc::Run(single.instance, AnalyticCoreOracle(single),
                          TiePolicy::kAdversarialRedFirst);
  EXPECT_EQ(s.cost, 5);
  EXPECT_EQ(single.instance.Cost(single.blue_links), 3);
  EXPECT_EQ(s.cost / single.instance.Cost(single.blue_links), Rational(5, 3));
}

TEST(RunTest, BruteForceOracleGivesTheSameRunAsTheAnalyticOne) {
  const LabeledInstance li = GluedInstance(1, 3, 7);
  const RunResult a = scc::Run(li.instance, AnalyticCoreOracle(li), TiePolicy::kAdversarialRedFirst);
  const RunResult b = scc::Run(li.instance, BruteForceCoreOracle(), TiePolicy::kAdversarialRedFirst);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.duals, b.duals);
  EXPECT_EQ(a.trace.deletions, b.trace.deletions);
}

TEST(RunTest, EmptyFamilyGivesEmptyOutput) {
  const Instance inst(MultiGraph(2, {{0, 1, 3}}), {{0, 1, Rational(5)}}, 2);
  const RunResult r = scc::Run(inst, BruteForceCoreOracle(), TiePolicy::kInputOrder);
  EXPECT_TRUE(r.selected.empty());
  EXPECT_EQ(r.cost, 0);
}

TEST(DualTest, FeasibilityAndObjective) {
  const LabeledInstance li = GluedInstance(1, 2, 5);
  const RunResult r = scc::Run(li.instance, AnalyticCoreOracle(li), TiePolicy::kAdversarialRedFirst);
  EXPECT_TRUE(DualFeasible(li.instance, r.duals));
  EXPECT_TRUE(DualFeasible(li.instance, DualSolution{}));
  EXPECT_EQ(DualObjective(DualSolution{}), 0);

  DualSolution heavy;
  heavy.Set(li.Singleton(li.gadget_node("t", 1)), 2);
  EXPECT_FALSE(DualFeasible(li.instance, heavy));

  DualSolution not_small;
  not_small.Set(li.Singleton(li.gadget_node("x", 1)), 1);
  EXPECT_THROW(DualFeasible(li.instance, not_small), InvalidInput);
  EXPECT_THROW(heavy.Set(li.C(), -1), InvalidInput);

  const LabeledInstance p3 = GluedInstance(1, 3, 7);
  const RunResult r3 = scc::Run(p3.instance, AnalyticCoreOracle(p3), TiePolicy::kAdversarialRedFirst);
  EXPECT_EQ(DualObjective(r3.duals), 5);
}

// Trace invariants on random instances: dual feasibility after every
// iteration, exact tightness at append time, each link tight at most once,
// deletions drawn from appended links, a minimal feasible output, weak
// duality against the exhaustive optimum and the factor-5 bound.
TEST(RunPropertyTest, RandomInstances) {
  std::mt19937 rng(31337);
  testing::RandomInstanceOptions options;
  options.max_nodes = 7;
  options.max_links = 8;
  int nontrivial = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const Instance inst = testing::RandomInstance(rng, options);
    const RunResult run = scc::Run(inst, BruteForceCoreOracle(), TiePolicy::kCostAscending);

    std::set<LinkIndex> appended;
    DualSolution previous;
    for (std::size_t i = 0; i < run.trace.iterations.size(); ++i) {
      const Iteration& it = run.trace.iterations[i];
      ASSERT_FALSE(it.newly_tight.empty());
      if (i > 0 || it.increment != 0) {
        ASSERT_GT(it.increment, 0);
      }
      ASSERT_TRUE(DualFeasible(inst, it.duals));
      for (LinkIndex e : it.newly_tight) {
        ASSERT_TRUE(appended.insert(e).second);
        ASSERT_EQ(it.duals.Load(inst.link(e)), inst.link(e).cost);
      }
      for (const Cut& core : it.active_cores) {
        ASSERT_EQ(it.duals.value(core), previous.value(core) + it.increment);
      }
      previous = it.duals;
    }
    for (LinkIndex e : run.trace.deletions) ASSERT_TRUE(appended.count(e));

    ASSERT_TRUE(Covers(inst, run.selected));
    if (!run.selected.empty()) ASSERT_TRUE(IsMinimalCover(inst, run.selected));
    const Rational dual = DualObjective(run.duals);
    const Rational opt = testing::EnumeratedOptimum(inst);
    ASSERT_LE(dual, opt);
    ASSERT_LE(run.cost, 5 * dual);
    nontrivial += !run.trace.iterations.empty();

    const RunResult again = scc::Run(inst, BruteForceCoreOracle(), TiePolicy::kCostAscending);
    ASSERT_EQ(again.selected, run.selected);
    ASSERT_EQ(again.duals, run.duals);
  }
  EXPECT_GT(nontrivial, 100);
}

}  // namespace
}  // namespace scc
