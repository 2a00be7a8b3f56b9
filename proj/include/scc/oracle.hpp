#ifndef SCC_ORACLE_HPP_
#define SCC_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scc/covering.hpp"
#include "scc/rational.hpp"
#include "scc/tightgen.hpp"
#include "scc/wgmv.hpp"

namespace scc {

struct OracleOptions {
  std::size_t link_bound = 20;
  std::size_t node_bound = DefaultEnumerationBound();
  unsigned jobs = 1;
};

struct Optimum {
  Rational cost;
  std::vector<LinkIndex> witness;  // ascending
};

// Exact minimum-cost cover by trying every link subset. Ties go to the
// smaller subset, then to the lexicographically smaller index list, so the
// witness does not depend on `jobs`. Throws BoundExceeded above
// `link_bound` links and Infeasible if even the full link set fails.
Optimum BruteForceOptimum(const Instance& instance, std::size_t link_bound = 20,
                          unsigned jobs = 1);

// Optimum of a generated instance from the construction: the star of {r}
// and the stars of every {t_i} are pairwise link-disjoint small cuts, so any
// cover costs at least 2 + p(1+epsilon), and {y_1 r, t_1 b, ..., t_p b}
// attains it. Equals the blue cost p+2 when epsilon is 0. Throws
// BoundExceeded for epsilon > 1, where the star bound is no longer tight.
Optimum AnalyticOptimum(const LabeledInstance& li);

// Pass/fail record of one verifier. Every check is counted; failures carry
// a description naming the offending cut or link.
struct VerificationReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void Check(bool ok, const std::string& what);
};

// Cores of the empty selection, the enumerated slice of small cuts avoiding
// r and not containing C, and every quoted degree and non-membership fact.
VerificationReport VerifyCoresLemma(
    const LabeledInstance& li,
    std::size_t node_bound = DefaultEnumerationBound());

// Red and blue are each feasible and inclusion-minimal, plus the per-link
// coverage and uniqueness facts behind that claim.
VerificationReport VerifyFeasibilityLemma(
    const LabeledInstance& li,
    std::size_t node_bound = DefaultEnumerationBound());

struct GapResult {
  TiePolicy policy;
  std::vector<LinkIndex> alg_links;
  Rational alg_cost;
  Rational opt_cost;
  std::vector<LinkIndex> opt_links;
  // True when opt was taken as the blue cost instead of being enumerated.
  bool opt_is_analytic = false;
  Rational dual_objective;
  Rational ratio;  // alg_cost / opt_cost
  RunResult run;
  VerificationReport checks;  // weak duality and the factor-5 bound
};

GapResult GapExperiment(const LabeledInstance& li, TiePolicy policy,
                        const OracleOptions& options = {});
GapResult GapExperiment(const GadgetParams& params, TiePolicy policy,
                        const OracleOptions& options = {});

struct GapSweepRow {
  int k;
  int p;  // floor((k-1)/2), with q = 1
  Rational ratio;
  Rational formula;  // 5(k-1)/(k+3) for odd k, 5(k-2)/(k+2) for even k
  bool opt_is_analytic;
  bool matches;
};

// Largest-p gadget per k under the adversarial policy. Requires every k >= 3.
std::vector<GapSweepRow> GapSweep(std::span<const int> ks,
                                  const OracleOptions& options = {});

Rational GapFormula(int k);

}  // namespace scc

#endif  // SCC_ORACLE_HPP_
