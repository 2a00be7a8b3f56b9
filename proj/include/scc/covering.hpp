#ifndef SCC_COVERING_HPP_
#define SCC_COVERING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "scc/multigraph.hpp"
#include "scc/rational.hpp"

namespace scc {

// Red/blue are presentation metadata for generated instances; only tie
// policies look at them.
enum class LinkTag { kNone, kRed, kBlue };

std::string_view TagName(LinkTag tag);

struct Link {
  NodeId u;
  NodeId v;
  Rational cost;
  LinkTag tag = LinkTag::kNone;
};

using LinkIndex = std::size_t;

// A Small Cuts Cover input: cover every cut S with d(S) < k by links. The
// position of a link in `links()` is its identity everywhere else.
class Instance {
 public:
  Instance(MultiGraph graph, std::vector<Link> links, std::int64_t k);

  const MultiGraph& graph() const { return graph_; }
  std::span<const Link> links() const { return links_; }
  const Link& link(LinkIndex i) const { return links_.at(i); }
  std::size_t num_links() const { return links_.size(); }
  std::size_t num_nodes() const { return graph_.num_nodes(); }
  std::int64_t k() const { return k_; }

  // Reference node for symmetry reduction: the node labeled "r" if any,
  // otherwise node 0.
  NodeId root() const { return root_; }

  Rational Cost(std::span<const LinkIndex> selected) const;
  std::vector<LinkIndex> AllLinks() const;

  // Row-major adjacency of the input graph, cached for feasibility checks.
  const std::vector<std::int64_t>& adjacency() const { return adjacency_; }

 private:
  MultiGraph graph_;
  std::vector<Link> links_;
  std::int64_t k_;
  NodeId root_ = 0;
  std::vector<std::int64_t> adjacency_;
};

// Node limit for exhaustive cut enumeration. 22 unless the SCC_ENUM_BOUND
// environment variable holds a positive integer.
std::size_t DefaultEnumerationBound();

bool LinkCrosses(const Link& link, const Cut& s);

bool IsSmallCut(const Instance& instance, const Cut& s);

// Feasibility without enumeration: add every selected link to the graph with
// capacity k. An uncovered small cut is exactly a cut of auxiliary degree
// below k, so the selection covers iff the auxiliary global min cut is >= k.
bool Covers(const Instance& instance, std::span<const LinkIndex> selected);

// Same answer as Covers, by checking every cut that excludes the root.
// Throws BoundExceeded above `node_bound` nodes.
bool CoversByEnumeration(const Instance& instance,
                         std::span<const LinkIndex> selected,
                         std::size_t node_bound = DefaultEnumerationBound());

// Small cuts not crossed by any selected link, restricted to cuts excluding
// the root, sorted by bitset value.
std::vector<Cut> ViolatedCuts(const Instance& instance,
                              std::span<const LinkIndex> selected,
                              std::size_t node_bound = DefaultEnumerationBound());

// Inclusion-minimal members of the (symmetric) violated family, sorted by
// bitset value. A core containing the root is reported as is.
std::vector<Cut> CoresBruteForce(
    const Instance& instance, std::span<const LinkIndex> selected,
    std::size_t node_bound = DefaultEnumerationBound());

// True iff `selected` covers and dropping any single link breaks coverage.
// Throws InvalidInput when `selected` does not cover.
bool IsMinimalCover(const Instance& instance,
                    std::span<const LinkIndex> selected);

// Source of the active cores for the primal-dual loop.
class CoreOracle {
 public:
  virtual ~CoreOracle() = default;
  virtual std::vector<Cut> InitialCores(const Instance& instance) const = 0;
  virtual std::vector<Cut> CoresGiven(
      const Instance& instance, std::span<const LinkIndex> selected) const = 0;
};

class BruteForceCoreOracle : public CoreOracle {
 public:
  explicit BruteForceCoreOracle(
      std::size_t node_bound = DefaultEnumerationBound())
      : node_bound_(node_bound) {}

  std::vector<Cut> InitialCores(const Instance& instance) const override;
  std::vector<Cut> CoresGiven(
      const Instance& instance,
      std::span<const LinkIndex> selected) const override;

 private:
  std::size_t node_bound_;
};

}  // namespace scc

#endif  // SCC_COVERING_HPP_
