#ifndef SCC_MULTIGRAPH_HPP_
#define SCC_MULTIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

using NodeId = std::uint32_t;

// A proper nonempty node subset of a graph on `universe_size()` nodes, stored
// as a bitset. Construction rejects the empty set and the full node set.
class Cut {
 public:
  Cut(std::size_t n, std::span<const NodeId> members);
  Cut(std::size_t n, std::initializer_list<NodeId> members);

  // Bit i of `mask` selects node i. Requires n <= 64.
  static Cut FromMask(std::size_t n, std::uint64_t mask);

  std::size_t universe_size() const { return n_; }
  bool contains(NodeId v) const {
    return v < n_ && ((words_[v / 64] >> (v % 64)) & 1u) != 0;
  }
  std::size_t size() const;
  std::vector<NodeId> members() const;
  Cut complement() const;
  bool is_subset_of(const Cut& other) const;
  bool intersects(const Cut& other) const;

  // Low 64 bits of the bitset; exact whenever universe_size() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  bool operator==(const Cut& other) const = default;
  // Orders by universe size, then by bitset value read as an unsigned integer.
  std::strong_ordering operator<=>(const Cut& other) const;

 private:
  Cut(std::size_t n, std::vector<std::uint64_t> words);
  void Validate() const;

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct Edge {
  NodeId u;
  NodeId v;
  std::int64_t mult;

  bool operator==(const Edge& other) const = default;
};

// Undirected multigraph with parallel edges folded into one record per
// unordered pair. Records are stored with u < v, sorted, and mult >= 1;
// zero-multiplicity inputs are dropped.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // The node's display name, or its index when the graph is unlabeled.
  std::string label(NodeId v) const;
  std::optional<NodeId> FindLabel(std::string_view label) const;

  std::int64_t multiplicity(NodeId u, NodeId v) const;
  std::int64_t TotalMultiplicity() const;

  // Returns a copy with `extra` folded in. Negative totals are rejected, a
  // total of zero removes the pair.
  MultiGraph WithAddedEdges(std::span<const Edge> extra) const;

  // Row-major n x n matrix of multiplicities.
  std::vector<std::int64_t> AdjacencyMatrix() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// d(S): total multiplicity of edges with exactly one end in `s`.
std::int64_t CutDegree(const MultiGraph& g, const Cut& s);

// delta(S) as folded edge records.
std::vector<Edge> DeltaEdges(const MultiGraph& g, const Cut& s);

struct MinCut {
  std::int64_t value;
  // Side of the minimum cut that does not contain node 0.
  Cut witness;
};

// Exact global minimum cut (Stoer-Wagner). Requires n >= 2.
MinCut GlobalMinCut(const MultiGraph& g);

namespace detail {

// Stoer-Wagner on a dense symmetric weight matrix (consumed). Returns the
// minimum cut value and the mask of one side (n <= 64 for the mask to be
// exact). Stops early once any phase cut is below `stop_below`.
struct MatrixCut {
  std::int64_t value;
  std::vector<NodeId> side;
};
MatrixCut StoerWagner(std::vector<std::int64_t> weights, std::size_t n,
                      std::int64_t stop_below);

}  // namespace detail

}  // namespace scc

#endif  // SCC_MULTIGRAPH_HPP_
