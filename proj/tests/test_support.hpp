// Test-only helpers: random instance generators and brute-force oracles that
// share no code path with the library routines they check.
#ifndef SCC_TESTS_TEST_SUPPORT_HPP_
#define SCC_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "scc/covering.hpp"
#include "scc/multigraph.hpp"
#include "scc/rational.hpp"

namespace scc::testing {

// Degree of the node set `mask` computed straight from the edge records.
inline std::int64_t MaskDegree(const MultiGraph& g, std::uint64_t mask) {
  std::int64_t d = 0;
  for (const Edge& e : g.edges()) {
    const bool in_u = (mask >> e.u) & 1u;
    const bool in_v = (mask >> e.v) & 1u;
    if (in_u != in_v) d += e.mult;
  }
  return d;
}

// Minimum degree over all 2^n - 2 proper cuts.
inline std::int64_t EnumeratedMinCut(const MultiGraph& g) {
  const std::uint64_t full = (std::uint64_t{1} << g.num_nodes()) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    best = std::min(best, MaskDegree(g, mask));
  }
  return best;
}

// Every proper cut with d < k must be crossed by a selected link. No
// symmetry reduction, no shared enumeration code.
inline bool CoversByAllCuts(const Instance& instance,
                            const std::vector<LinkIndex>& selected) {
  const std::size_t n = instance.num_nodes();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (MaskDegree(instance.graph(), mask) >= instance.k()) continue;
    bool crossed = false;
    for (LinkIndex i : selected) {
      const Link& l = instance.link(i);
      if (((mask >> l.u) & 1u) != ((mask >> l.v) & 1u)) crossed = true;
    }
    if (!crossed) return false;
  }
  return true;
}

// Minimum-cost covering subset by plain enumeration with CoversByAllCuts.
inline Rational EnumeratedOptimum(const Instance& instance) {
  const std::size_t m = instance.num_links();
  Rational best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<LinkIndex> chosen;
    Rational cost = 0;
    for (LinkIndex i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) {
        chosen.push_back(i);
        cost += instance.link(i).cost;
      }
    }
    if (best >= 0 && cost >= best) continue;
    if (CoversByAllCuts(instance, chosen)) best = cost;
  }
  return best;
}

inline MultiGraph RandomGraph(std::mt19937& rng, std::size_t n, int max_mult,
                              double density) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, mult(rng)});
    }
  }
  return MultiGraph(n, std::move(edges));
}

struct RandomInstanceOptions {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 8;
  std::size_t max_links = 10;
  int max_mult = 5;
  int max_k = 6;
  bool guarantee_feasible = true;  // include a spanning tree of links
};

// Link costs are small rationals in {0, 1/2, 1, ..., 4}.
inline Instance RandomInstance(std::mt19937& rng,
                               const RandomInstanceOptions& options = {}) {
  std::uniform_int_distribution<std::size_t> node_count(options.min_nodes,
                                                        options.max_nodes);
  const std::size_t n = node_count(rng);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  MultiGraph g = RandomGraph(rng, n, options.max_mult, density(rng));
  std::uniform_int_distribution<int> k_dist(1, options.max_k);
  std::uniform_int_distribution<int> half_units(0, 8);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (options.guarantee_feasible) {
    // Random spanning tree: each node after the first attaches to an
    // earlier node of a random permutation.
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      pairs.emplace_back(order[parent(rng)], order[i]);
    }
  }
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<std::size_t> extra(0, options.max_links);
  const std::size_t target =
      std::min(options.max_links, std::max(pairs.size(), extra(rng)));
  int guard = 0;
  while (pairs.size() < target && guard++ < 1000) {
    NodeId u = node(rng), v = node(rng);
    if (u != v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Link> links;
  for (auto [u, v] : pairs) links.push_back({u, v, Rational(half_units(rng), 2)});
  return Instance(std::move(g), std::move(links), k_dist(rng));
}

inline std::vector<LinkIndex> RandomSubset(std::mt19937& rng, std::size_t m) {
  std::bernoulli_distribution pick(0.5);
  std::vector<LinkIndex> out;
  for (LinkIndex i = 0; i < m; ++i) {
    if (pick(rng)) out.push_back(i);
  }
  return out;
}

}  // namespace scc::testing

#endif  // SCC_TESTS_TEST_SUPPORT_HPP_
