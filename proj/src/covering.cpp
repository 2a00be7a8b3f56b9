#include "scc/covering.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "scc/errors.hpp"

namespace scc {

std::string_view TagName(LinkTag tag) {
  switch (tag) {
    case LinkTag::kRed:
      return "red";
    case LinkTag::kBlue:
      return "blue";
    case LinkTag::kNone:
      break;
  }
  return "none";
}

Instance::Instance(MultiGraph graph, std::vector<Link> links, std::int64_t k)
    : graph_(std::move(graph)), links_(std::move(links)), k_(k) {
  if (k_ < 1) throw InvalidInput("k must be at least 1");
  const std::size_t n = graph_.num_nodes();
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    if (l.u >= n || l.v >= n) {
      throw InvalidInput("link " + std::to_string(i) + " has an endpoint out of range");
    }
    if (l.u == l.v) throw InvalidInput("link " + std::to_string(i) + " is a loop");
    if (l.cost < 0) throw InvalidInput("link " + std::to_string(i) + " has negative cost");
  }
  if (auto r = graph_.FindLabel("r")) root_ = *r;
  adjacency_ = graph_.AdjacencyMatrix();
}

Rational Instance::Cost(std::span<const LinkIndex> selected) const {
  Rational total = 0;
  for (LinkIndex i : selected) total += link(i).cost;
  return total;
}

std::vector<LinkIndex> Instance::AllLinks() const {
  std::vector<LinkIndex> all(links_.size());
  for (LinkIndex i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

std::size_t DefaultEnumerationBound() {
  constexpr std::size_t kDefault = 22;
  const char* env = std::getenv("SCC_ENUM_BOUND");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0) return kDefault;
  return static_cast<std::size_t>(value);
}

bool LinkCrosses(const Link& link, const Cut& s) {
  return s.contains(link.u) != s.contains(link.v);
}

bool IsSmallCut(const Instance& instance, const Cut& s) {
  return CutDegree(instance.graph(), s) < instance.k();
}

namespace {

void RequireValidIndices(const Instance& instance,
                         std::span<const LinkIndex> selected) {
  for (LinkIndex i : selected) {
    if (i >= instance.num_links()) {
      throw InvalidInput("link index " + std::to_string(i) + " out of range");
    }
  }
}

// Bitmask view of an instance for exhaustive enumeration over cuts that
// exclude the root.
class CutEnumerator {
 public:
  CutEnumerator(const Instance& instance, std::span<const LinkIndex> selected,
                std::size_t node_bound)
      : n_(instance.num_nodes()), root_(instance.root()), k_(instance.k()) {
    if (n_ > node_bound) {
      throw BoundExceeded("cut enumeration over " + std::to_string(n_) +
                          " nodes exceeds the bound of " +
                          std::to_string(node_bound));
    }
    if (n_ > 63) throw BoundExceeded("cut enumeration is limited to 63 nodes");
    for (const Edge& e : instance.graph().edges()) {
      edges_.push_back({(std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v),
                        std::uint64_t{1} << e.u, e.mult});
    }
    RequireValidIndices(instance, selected);
    for (LinkIndex i : selected) {
      const Link& l = instance.link(i);
      links_.push_back({(std::uint64_t{1} << l.u) | (std::uint64_t{1} << l.v),
                        std::uint64_t{1} << l.u, 0});
    }
  }

  std::size_t n() const { return n_; }
  std::uint64_t full() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  // Calls `visit(mask)` for every uncovered small cut excluding the root, in
  // increasing mask order. Stops early when `visit` returns false.
  template <typename Visit>
  void ForEachViolated(Visit&& visit) const {
    if (n_ < 2) return;
    const std::uint64_t low_mask = (std::uint64_t{1} << root_) - 1;
    const std::uint64_t count = std::uint64_t{1} << (n_ - 1);
    for (std::uint64_t sub = 1; sub < count; ++sub) {
      const std::uint64_t mask = (sub & low_mask) | ((sub & ~low_mask) << 1);
      if (IsViolated(mask) && !visit(mask)) return;
    }
  }

  bool IsViolated(std::uint64_t mask) const {
    std::int64_t degree = 0;
    for (const Pair& e : edges_) {
      if (Crosses(e, mask)) {
        degree += e.mult;
        if (degree >= k_) return false;
      }
    }
    for (const Pair& l : links_) {
      if (Crosses(l, mask)) return false;
    }
    return true;
  }

 private:
  struct Pair {
    std::uint64_t both;
    std::uint64_t one;
    std::int64_t mult;
  };
  static bool Crosses(const Pair& p, std::uint64_t mask) {
    const std::uint64_t inside = mask & p.both;
    return inside != 0 && inside != p.both;
  }

  std::size_t n_;
  NodeId root_;
  std::int64_t k_;
  std::vector<Pair> edges_;
  std::vector<Pair> links_;
};

}  // namespace

bool Covers(const Instance& instance, std::span<const LinkIndex> selected) {
  RequireValidIndices(instance, selected);
  const std::size_t n = instance.num_nodes();
  if (n < 2) return true;
  std::vector<std::int64_t> w = instance.adjacency();
  for (LinkIndex i : selected) {
    const Link& l = instance.link(i);
    w[l.u * n + l.v] += instance.k();
    w[l.v * n + l.u] += instance.k();
  }
  return detail::StoerWagner(std::move(w), n, instance.k()).value >=
         instance.k();
}

bool CoversByEnumeration(const Instance& instance,
                         std::span<const LinkIndex> selected,
                         std::size_t node_bound) {
  CutEnumerator cuts(instance, selected, node_bound);
  bool covered = true;
  cuts.ForEachViolated([&](std::uint64_t) {
    covered = false;
    return false;
  });
  return covered;
}

std::vector<Cut> ViolatedCuts(const Instance& instance,
                              std::span<const LinkIndex> selected,
                              std::size_t node_bound) {
  CutEnumerator cuts(instance, selected, node_bound);
  std::vector<Cut> out;
  cuts.ForEachViolated([&](std::uint64_t mask) {
    out.push_back(Cut::FromMask(cuts.n(), mask));
    return true;
  });
  return out;
}

std::vector<Cut> CoresBruteForce(const Instance& instance,
                                 std::span<const LinkIndex> selected,
                                 std::size_t node_bound) {
  CutEnumerator cuts(instance, selected, node_bound);
  std::vector<std::uint64_t> family;
  cuts.ForEachViolated([&](std::uint64_t mask) {
    family.push_back(mask);
    family.push_back(cuts.full() & ~mask);
    return true;
  });
  std::sort(family.begin(), family.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  // Every member contains some minimal member, so testing against the
  // minimal members found so far (all of smaller or equal size) suffices.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t m : family) {
    const bool dominated = std::any_of(
        minimal.begin(), minimal.end(),
        [m](std::uint64_t c) { return (c & ~m) == 0; });
    if (!dominated) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<Cut> out;
  for (std::uint64_t m : minimal) out.push_back(Cut::FromMask(cuts.n(), m));
  return out;
}

bool IsMinimalCover(const Instance& instance,
                    std::span<const LinkIndex> selected) {
  if (!Covers(instance, selected)) {
    throw InvalidInput("minimality is only defined for covering link sets");
  }
  std::vector<LinkIndex> rest(selected.begin(), selected.end());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const bool still_covers = Covers(instance, rest);
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(i), selected[i]);
    if (still_covers) return false;
  }
  return true;
}

std::vector<Cut> BruteForceCoreOracle::InitialCores(
    const Instance& instance) const {
  return CoresBruteForce(instance, {}, node_bound_);
}

std::vector<Cut> BruteForceCoreOracle::CoresGiven(
    const Instance& instance, std::span<const LinkIndex> selected) const {
  return CoresBruteForce(instance, selected, node_bound_);
}

}  // namespace scc
