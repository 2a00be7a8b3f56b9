#ifndef SCC_WGMV_HPP_
#define SCC_WGMV_HPP_

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scc/covering.hpp"
#include "scc/multigraph.hpp"
#include "scc/rational.hpp"

namespace scc {

// Total order used when several links go tight in the same iteration. Phase 2
// visits links in the exact reverse of the resulting addition order.
enum class TiePolicy {
  kAdversarialRedFirst,  // red, then untagged, then blue; input order within
  kHelpfulBlueFirst,     // blue, then untagged, then red; input order within
  kInputOrder,
  kCostAscending,        // cheaper first, input order among equal costs
};

std::string_view PolicyName(TiePolicy policy);
std::optional<TiePolicy> ParsePolicy(std::string_view name);

// Sorts `links` in place into the policy's order.
void OrderByPolicy(const Instance& instance, TiePolicy policy,
                   std::vector<LinkIndex>& links);

// Dual variables y_S of the covering LP, keyed by cut. Absent cuts are zero.
class DualSolution {
 public:
  void Raise(const Cut& s, const Rational& delta);
  void Set(const Cut& s, const Rational& value);

  Rational value(const Cut& s) const;
  const std::map<Cut, Rational>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Sum of y_S over cuts crossed by `link`.
  Rational Load(const Link& link) const;

  bool operator==(const DualSolution& other) const = default;

 private:
  std::map<Cut, Rational> entries_;
};

// Checks y >= 0 and load(e) <= c_e for every link. Throws InvalidInput if a
// keyed cut is not a small cut of the instance.
bool DualFeasible(const Instance& instance, const DualSolution& duals);

Rational DualObjective(const DualSolution& duals);

struct Iteration {
  std::vector<Cut> active_cores;
  Rational increment;
  std::vector<LinkIndex> newly_tight;
  DualSolution duals;  // after this iteration's raise
};

struct RunTrace {
  std::vector<Iteration> iterations;
  std::vector<LinkIndex> deletions;   // in processing order
  std::vector<LinkIndex> final_links; // ascending
};

struct Phase1Result {
  std::vector<LinkIndex> added;  // addition order
  DualSolution duals;
  RunTrace trace;
};

// Uniform dual raising on the active cores until the selection covers.
// Zero-cost links are taken in an increment-0 iteration before any raise.
// Throws Infeasible when some active core is crossed by no remaining link.
Phase1Result Phase1(const Instance& instance, const CoreOracle& oracle,
                    TiePolicy policy);

// Drops links in reverse addition order while coverage is preserved. The
// dropped links are appended to `deletions` when given. Throws InvalidInput
// if `added` does not cover.
std::vector<LinkIndex> ReverseDelete(const Instance& instance,
                                     std::span<const LinkIndex> added,
                                     std::vector<LinkIndex>* deletions = nullptr);

struct RunResult {
  std::vector<LinkIndex> selected;  // ascending
  Rational cost;
  DualSolution duals;
  RunTrace trace;
};

RunResult Run(const Instance& instance, const CoreOracle& oracle,
              TiePolicy policy);

}  // namespace scc

#endif  // SCC_WGMV_HPP_
