#include "scc/wgmv.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "scc/errors.hpp"

namespace scc {

std::string_view PolicyName(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kAdversarialRedFirst:
      return "adversarial-red-first";
    case TiePolicy::kHelpfulBlueFirst:
      return "helpful-blue-first";
    case TiePolicy::kInputOrder:
      return "input-order";
    case TiePolicy::kCostAscending:
      return "cost-ascending";
  }
  return "unknown";
}

std::optional<TiePolicy> ParsePolicy(std::string_view name) {
  if (name == "adversarial-red-first" || name == "adversarial") {
    return TiePolicy::kAdversarialRedFirst;
  }
  if (name == "helpful-blue-first" || name == "helpful") {
    return TiePolicy::kHelpfulBlueFirst;
  }
  if (name == "input-order") return TiePolicy::kInputOrder;
  if (name == "cost-ascending") return TiePolicy::kCostAscending;
  return std::nullopt;
}

void OrderByPolicy(const Instance& instance, TiePolicy policy,
                   std::vector<LinkIndex>& links) {
  auto tag_rank = [&](LinkIndex i) {
    const LinkTag tag = instance.link(i).tag;
    switch (policy) {
      case TiePolicy::kAdversarialRedFirst:
        return tag == LinkTag::kRed ? 0 : tag == LinkTag::kNone ? 1 : 2;
      case TiePolicy::kHelpfulBlueFirst:
        return tag == LinkTag::kBlue ? 0 : tag == LinkTag::kNone ? 1 : 2;
      default:
        return 0;
    }
  };
  if (policy == TiePolicy::kCostAscending) {
    std::stable_sort(links.begin(), links.end(), [&](LinkIndex a, LinkIndex b) {
      const Rational& ca = instance.link(a).cost;
      const Rational& cb = instance.link(b).cost;
      return ca != cb ? ca < cb : a < b;
    });
    return;
  }
  std::stable_sort(links.begin(), links.end(), [&](LinkIndex a, LinkIndex b) {
    return std::tuple(tag_rank(a), a) < std::tuple(tag_rank(b), b);
  });
}

// ---------------------------------------------------------------------------
// DualSolution

void DualSolution::Raise(const Cut& s, const Rational& delta) {
  Set(s, value(s) + delta);
}

void DualSolution::Set(const Cut& s, const Rational& value) {
  if (value < 0) throw InvalidInput("dual values must be nonnegative");
  entries_[s] = value;
}

Rational DualSolution::value(const Cut& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational DualSolution::Load(const Link& link) const {
  Rational load = 0;
  for (const auto& [cut, y] : entries_) {
    if (LinkCrosses(link, cut)) load += y;
  }
  return load;
}

bool DualFeasible(const Instance& instance, const DualSolution& duals) {
  for (const auto& [cut, y] : duals.entries()) {
    if (!IsSmallCut(instance, cut)) {
      throw InvalidInput("dual variable keyed by a cut that is not small");
    }
    if (y < 0) return false;
  }
  for (const Link& link : instance.links()) {
    if (duals.Load(link) > link.cost) return false;
  }
  return true;
}

Rational DualObjective(const DualSolution& duals) {
  Rational total = 0;
  for (const auto& [cut, y] : duals.entries()) total += y;
  return total;
}

// ---------------------------------------------------------------------------
// Phase 1

Phase1Result Phase1(const Instance& instance, const CoreOracle& oracle,
                    TiePolicy policy) {
  Phase1Result result;
  std::vector<char> in_j(instance.num_links(), 0);

  while (!Covers(instance, result.added)) {
    Iteration iteration;
    iteration.active_cores = result.added.empty()
                                 ? oracle.InitialCores(instance)
                                 : oracle.CoresGiven(instance, result.added);
    if (iteration.active_cores.empty()) {
      throw std::logic_error("core oracle returned no cores for an uncovered family");
    }

    std::vector<Rational> slack(instance.num_links());
    for (LinkIndex i = 0; i < instance.num_links(); ++i) {
      if (!in_j[i]) slack[i] = instance.link(i).cost - result.duals.Load(instance.link(i));
    }

    // Zero-cost links are tight before anything is raised.
    bool has_tight = false;
    for (LinkIndex i = 0; i < instance.num_links(); ++i) {
      if (!in_j[i] && slack[i] == 0) has_tight = true;
    }

    Rational delta = 0;
    if (!has_tight) {
      std::optional<Rational> best;
      for (LinkIndex i = 0; i < instance.num_links(); ++i) {
        if (in_j[i]) continue;
        const Link& link = instance.link(i);
        const auto crossed = std::count_if(
            iteration.active_cores.begin(), iteration.active_cores.end(),
            [&](const Cut& core) { return LinkCrosses(link, core); });
        if (crossed == 0) continue;
        Rational quotient = slack[i] / crossed;
        if (!best || quotient < *best) best = quotient;
      }
      if (!best) {
        throw Infeasible("no remaining link crosses an active core; the links "
                         "cannot cover every small cut");
      }
      delta = *best;
      for (const Cut& core : iteration.active_cores) result.duals.Raise(core, delta);
    }
    iteration.increment = delta;

    for (LinkIndex i = 0; i < instance.num_links(); ++i) {
      if (in_j[i]) continue;
      const Rational s = instance.link(i).cost - result.duals.Load(instance.link(i));
      if (s < 0) throw std::logic_error("dual raise overshot link " + std::to_string(i));
      if (s == 0) iteration.newly_tight.push_back(i);
    }
    OrderByPolicy(instance, policy, iteration.newly_tight);
    for (LinkIndex i : iteration.newly_tight) {
      in_j[i] = 1;
      result.added.push_back(i);
    }
    iteration.duals = result.duals;
    result.trace.iterations.push_back(std::move(iteration));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Phase 2

std::vector<LinkIndex> ReverseDelete(const Instance& instance,
                                     std::span<const LinkIndex> added,
                                     std::vector<LinkIndex>* deletions) {
  std::vector<LinkIndex> current(added.begin(), added.end());
  if (!Covers(instance, current)) {
    throw InvalidInput("reverse delete needs a covering link set");
  }
  for (std::size_t pos = current.size(); pos-- > 0;) {
    const LinkIndex link = current[pos];
    std::vector<LinkIndex> without = current;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(pos));
    if (Covers(instance, without)) {
      current = std::move(without);
      if (deletions != nullptr) deletions->push_back(link);
    }
  }
  return current;
}

RunResult Run(const Instance& instance, const CoreOracle& oracle,
              TiePolicy policy) {
  Phase1Result phase1 = Phase1(instance, oracle, policy);
  RunResult result;
  result.trace = std::move(phase1.trace);
  result.selected = ReverseDelete(instance, phase1.added, &result.trace.deletions);
  std::sort(result.selected.begin(), result.selected.end());
  result.trace.final_links = result.selected;
  result.cost = instance.Cost(result.selected);
  result.duals = std::move(phase1.duals);
  return result;
}

}  // namespace scc
