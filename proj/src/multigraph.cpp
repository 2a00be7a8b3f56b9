#include "scc/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <utility>

#include "scc/errors.hpp"

namespace scc {

namespace {

std::size_t WordCount(std::size_t n) { return (n + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------------------
// Cut

Cut::Cut(std::size_t n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  Validate();
}

Cut::Cut(std::size_t n, std::span<const NodeId> members)
    : n_(n), words_(WordCount(n), 0) {
  for (NodeId v : members) {
    if (v >= n) {
      throw InvalidInput("cut member " + std::to_string(v) +
                         " out of range for " + std::to_string(n) + " nodes");
    }
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  Validate();
}

Cut::Cut(std::size_t n, std::initializer_list<NodeId> members)
    : Cut(n, std::span<const NodeId>(members.begin(), members.size())) {}

Cut Cut::FromMask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw InvalidInput("Cut::FromMask requires n <= 64");
  if (n < 64 && (mask >> n) != 0) {
    throw InvalidInput("cut mask has bits beyond the node count");
  }
  return Cut(n, std::vector<std::uint64_t>{mask});
}

void Cut::Validate() const {
  const std::size_t count = size();
  if (count == 0) throw InvalidInput("a cut must be nonempty");
  if (count == n_) throw InvalidInput("a cut must be a proper subset of V");
}

std::size_t Cut::size() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::vector<NodeId> Cut::members() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

Cut Cut::complement() const {
  std::vector<std::uint64_t> words(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words[i] = ~words_[i];
  if (n_ % 64 != 0) words.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return Cut(n_, std::move(words));
}

bool Cut::is_subset_of(const Cut& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Cut::intersects(const Cut& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::strong_ordering Cut::operator<=>(const Cut& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// MultiGraph

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges,
                       std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw InvalidInput("label count " + std::to_string(labels_.size()) +
                       " does not match node count " + std::to_string(n_));
  }
  std::map<std::pair<NodeId, NodeId>, std::int64_t> folded;
  for (const Edge& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) +
                         "-" + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw InvalidInput("self-loop at node " + std::to_string(e.u));
    }
    if (e.mult < 0) throw InvalidInput("negative edge multiplicity");
    folded[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  for (const auto& [pair, mult] : folded) {
    if (mult > 0) edges_.push_back({pair.first, pair.second, mult});
  }
}

std::string MultiGraph::label(NodeId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::optional<NodeId> MultiGraph::FindLabel(std::string_view label) const {
  for (NodeId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::int64_t MultiGraph::multiplicity(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair{u, v},
      [](const Edge& e, const std::pair<NodeId, NodeId>& key) {
        return std::pair{e.u, e.v} < key;
      });
  if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
  return 0;
}

std::int64_t MultiGraph::TotalMultiplicity() const {
  std::int64_t total = 0;
  for (const Edge& e : edges_) total += e.mult;
  return total;
}

MultiGraph MultiGraph::WithAddedEdges(std::span<const Edge> extra) const {
  std::map<std::pair<NodeId, NodeId>, std::int64_t> folded;
  for (const Edge& e : edges_) folded[{e.u, e.v}] += e.mult;
  for (const Edge& e : extra) {
    if (e.u == e.v) throw InvalidInput("self-loop at node " + std::to_string(e.u));
    folded[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  std::vector<Edge> merged;
  for (const auto& [pair, mult] : folded) {
    if (mult < 0) throw InvalidInput("edge multiplicity would become negative");
    merged.push_back({pair.first, pair.second, mult});
  }
  return MultiGraph(n_, std::move(merged), labels_);
}

std::vector<std::int64_t> MultiGraph::AdjacencyMatrix() const {
  std::vector<std::int64_t> w(n_ * n_, 0);
  for (const Edge& e : edges_) {
    w[e.u * n_ + e.v] += e.mult;
    w[e.v * n_ + e.u] += e.mult;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Cut queries

namespace {

void RequireMatchingCut(const MultiGraph& g, const Cut& s) {
  if (s.universe_size() != g.num_nodes()) {
    throw InvalidInput("cut is over " + std::to_string(s.universe_size()) +
                       " nodes but the graph has " +
                       std::to_string(g.num_nodes()));
  }
}

}  // namespace

std::int64_t CutDegree(const MultiGraph& g, const Cut& s) {
  RequireMatchingCut(g, s);
  std::int64_t d = 0;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) d += e.mult;
  }
  return d;
}

std::vector<Edge> DeltaEdges(const MultiGraph& g, const Cut& s) {
  RequireMatchingCut(g, s);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) out.push_back(e);
  }
  return out;
}

namespace detail {

MatrixCut StoerWagner(std::vector<std::int64_t> w, std::size_t n,
                      std::int64_t stop_below) {
  // groups[v] lists the original nodes merged into supernode v.
  std::vector<std::vector<NodeId>> groups(n);
  for (NodeId v = 0; v < n; ++v) groups[v] = {v};
  std::vector<NodeId> active(n);
  for (NodeId v = 0; v < n; ++v) active[v] = v;

  MatrixCut best{std::numeric_limits<std::int64_t>::max(), {}};
  std::vector<std::int64_t> key(n);
  std::vector<char> added(n);

  while (active.size() > 1) {
    for (NodeId v : active) {
      key[v] = 0;
      added[v] = 0;
    }
    NodeId prev = active[0];
    NodeId last = active[0];
    for (std::size_t step = 0; step < active.size(); ++step) {
      NodeId pick = active[0];
      bool found = false;
      for (NodeId v : active) {
        if (added[v]) continue;
        if (!found || key[v] > key[pick]) {
          pick = v;
          found = true;
        }
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (NodeId v : active) {
        if (!added[v]) key[v] += w[pick * n + v];
      }
    }
    // The phase cut separates `last` from everything else still active.
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = groups[last];
      if (best.value < stop_below) return best;
    }
    for (NodeId v : active) {
      w[prev * n + v] += w[last * n + v];
      w[v * n + prev] = w[prev * n + v];
    }
    w[prev * n + prev] = 0;
    groups[prev].insert(groups[prev].end(), groups[last].begin(),
                        groups[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return best;
}

}  // namespace detail

MinCut GlobalMinCut(const MultiGraph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw InvalidInput("global minimum cut needs at least 2 nodes");
  auto result = detail::StoerWagner(g.AdjacencyMatrix(), n,
                                    std::numeric_limits<std::int64_t>::min());
  Cut witness(n, result.side);
  if (witness.contains(0)) witness = witness.complement();
  return {result.value, std::move(witness)};
}

}  // namespace scc
