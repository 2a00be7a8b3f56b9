#include "scc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <bit>
#include <limits>
#include <optional>
#include <set>
#include <thread>

#include "scc/errors.hpp"

namespace scc {

// ---------------------------------------------------------------------------
// Exhaustive optimum

namespace {

struct Candidate {
  std::int64_t cost;  // scaled to the common denominator
  std::uint64_t mask;
};

// (cost, popcount, lexicographic index list) order.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
  if (pa != pb) return pa < pb;
  if (a.mask == b.mask) return false;
  // The lowest index present in exactly one list decides.
  const std::uint64_t lowest = (a.mask ^ b.mask) & ~((a.mask ^ b.mask) - 1);
  return (a.mask & lowest) != 0;
}

std::vector<LinkIndex> MaskToLinks(std::uint64_t mask) {
  std::vector<LinkIndex> out;
  for (LinkIndex i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

Optimum BruteForceOptimum(const Instance& instance, std::size_t link_bound,
                          unsigned jobs) {
  const std::size_t m = instance.num_links();
  if (m > link_bound || m > 62) {
    throw BoundExceeded("exhaustive optimum over " + std::to_string(m) +
                        " links exceeds the bound of " +
                        std::to_string(link_bound));
  }
  if (!Covers(instance, instance.AllLinks())) {
    throw Infeasible("the full link set does not cover every small cut");
  }

  // Integer costs over the common denominator keep the inner loop cheap.
  boost::multiprecision::cpp_int lcm = 1;
  for (const Link& l : instance.links()) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(l.cost));
  }
  std::vector<std::int64_t> scaled(m);
  boost::multiprecision::cpp_int total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto s = boost::multiprecision::numerator(instance.link(i).cost * Rational(lcm));
    total += s;
    if (total > std::numeric_limits<std::int64_t>::max() / 2) {
      throw BoundExceeded("link costs are too large for exhaustive search");
    }
    scaled[i] = static_cast<std::int64_t>(s);
  }

  const std::uint64_t count = std::uint64_t{1} << m;
  auto search = [&](std::uint64_t begin, std::uint64_t end) {
    std::optional<Candidate> best;
    std::vector<LinkIndex> selected;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      std::int64_t cost = 0;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        cost += scaled[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      const Candidate candidate{cost, mask};
      if (best && !Better(candidate, *best)) continue;
      selected = MaskToLinks(mask);
      if (Covers(instance, selected)) best = candidate;
    }
    return best;
  };

  jobs = std::max(1u, jobs);
  std::vector<std::optional<Candidate>> partial(jobs);
  if (jobs == 1) {
    partial[0] = search(0, count);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::min<std::uint64_t>(count, j * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
      workers.emplace_back([&, j, begin, end] { partial[j] = search(begin, end); });
    }
    for (auto& w : workers) w.join();
  }

  std::optional<Candidate> best;
  for (const auto& c : partial) {
    if (c && (!best || Better(*c, *best))) best = c;
  }
  Optimum out;
  out.witness = MaskToLinks(best->mask);
  out.cost = instance.Cost(out.witness);
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

void VerificationReport::Check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

namespace {

std::string Describe(const MultiGraph& g, const Cut& s) {
  std::string out = "{";
  for (NodeId v : s.members()) {
    if (out.size() > 1) out += ",";
    out += g.label(v);
  }
  return out + "}";
}

std::string DescribeLink(const Instance& instance, LinkIndex i) {
  const Link& l = instance.link(i);
  return instance.graph().label(l.u) + instance.graph().label(l.v);
}

void CompareCutLists(VerificationReport& report, const MultiGraph& g,
                     const std::string& what, const std::vector<Cut>& expected,
                     const std::vector<Cut>& found) {
  std::set<Cut> want(expected.begin(), expected.end());
  std::set<Cut> got(found.begin(), found.end());
  for (const Cut& c : want) {
    report.Check(got.count(c) != 0, what + ": missing " + Describe(g, c));
  }
  for (const Cut& c : got) {
    report.Check(want.count(c) != 0, what + ": unexpected " + Describe(g, c));
  }
}

// Links of `pool` crossing `s`.
std::vector<LinkIndex> Crossing(const Instance& instance,
                                std::span<const LinkIndex> pool, const Cut& s) {
  std::vector<LinkIndex> out;
  for (LinkIndex i : pool) {
    if (LinkCrosses(instance.link(i), s)) out.push_back(i);
  }
  return out;
}

}  // namespace

VerificationReport VerifyCoresLemma(const LabeledInstance& li,
                                    std::size_t node_bound) {
  VerificationReport report;
  report.name = "cores";
  const Instance& instance = li.instance;
  const MultiGraph& g = instance.graph();
  const std::size_t n = instance.num_nodes();

  for (const std::string& failure : CheckDegreeIdentities(li)) {
    report.Check(false, "degree identity " + failure);
  }

  const FamilySlices expected = ExpectedFamilySlices(li);
  CompareCutLists(report, g, "cores", expected.cores,
                  CoresBruteForce(instance, {}, node_bound));

  const Cut c = li.C();
  std::vector<Cut> enumerated;
  for (Cut& s : ViolatedCuts(instance, {}, node_bound)) {
    if (!c.is_subset_of(s)) enumerated.push_back(std::move(s));
  }
  CompareCutLists(report, g, "F^r minus F^r_C", expected.fr_minus_frc, enumerated);

  // Non-memberships used to rule out further cores.
  auto not_small = [&](const Cut& s) {
    report.Check(!IsSmallCut(instance, s), Describe(g, s) + " must not be small");
  };
  const NodeId b = li.role("b"), z = li.role("z");
  not_small(li.Singleton(b));
  not_small(li.Singleton(z));
  for (int i = 1; i <= li.params.p; ++i) {
    const NodeId a = li.gadget_node("a", i), x = li.gadget_node("x", i),
                 y = li.gadget_node("y", i);
    not_small(li.Singleton(a));
    not_small(li.Singleton(x));
    not_small(li.Singleton(y));
    not_small(Cut(n, {x, y}));
    not_small(Cut(n, {y, z}));
    not_small(Cut(n, {x, z}));
    not_small(Cut(n, {a, b}));
  }
  return report;
}

VerificationReport VerifyFeasibilityLemma(const LabeledInstance& li,
                                          std::size_t node_bound) {
  VerificationReport report;
  report.name = "feasibility";
  const Instance& instance = li.instance;
  const MultiGraph& g = instance.graph();
  const std::span<const LinkIndex> red = li.red_links;
  const std::span<const LinkIndex> blue = li.blue_links;

  for (auto [name, set] : {std::pair{"red", red}, std::pair{"blue", blue}}) {
    const bool feasible = Covers(instance, set);
    report.Check(feasible, std::string(name) + " links must cover");
    if (feasible) {
      report.Check(IsMinimalCover(instance, set),
                   std::string(name) + " links must be an inclusion-minimal cover");
    }
  }

  const Cut c = li.C();
  std::vector<Cut> with_c;  // small cuts avoiding r that contain C
  std::vector<Cut> unions;  // unions of A_i's
  for (Cut& s : ViolatedCuts(instance, {}, node_bound)) {
    if (c.is_subset_of(s)) {
      with_c.push_back(std::move(s));
    }
  }
  for (const Cut& s : ExpectedFamilySlices(li).fr_minus_frc) {
    bool only_a = true;
    for (int i = 1; i <= li.params.p; ++i) {
      only_a = only_a && !s.contains(li.gadget_node("x", i)) &&
               s.contains(li.gadget_node("t", i)) == s.contains(li.gadget_node("a", i));
    }
    if (only_a) unions.push_back(s);
  }

  auto covers_cut = [&](LinkIndex link, const Cut& s) {
    report.Check(LinkCrosses(instance.link(link), s),
                 DescribeLink(instance, link) + " must cover " + Describe(g, s));
  };
  auto only_cover = [&](std::span<const LinkIndex> pool, const char* color,
                        LinkIndex link, const Cut& s) {
    report.Check(IsSmallCut(instance, s), Describe(g, s) + " must be small");
    const auto crossing = Crossing(instance, pool, s);
    report.Check(crossing.size() == 1 && crossing[0] == link,
                 DescribeLink(instance, link) + " must be the only " + color +
                     " link covering " + Describe(g, s));
  };

  const NodeId r = li.role("r"), b = li.role("b"), z = li.role("z");
  for (int i = 1; i <= li.params.p; ++i) {
    const NodeId t = li.gadget_node("t", i), a = li.gadget_node("a", i),
                 x = li.gadget_node("x", i), y = li.gadget_node("y", i);
    const LinkIndex tx = li.link_between(t, x), ay = li.link_between(a, y),
                    yr = li.link_between(y, r), tb = li.link_between(t, b);
    const Cut ti = li.Singleton(t);

    covers_cut(tx, ti);
    for (const Cut& u : unions) {
      if (u.contains(t)) {
        covers_cut(tx, u);
        covers_cut(tb, u);
      }
    }
    only_cover(red, "red", tx, ti);
    covers_cut(ay, li.X(i));
    only_cover(red, "red", ay, li.X(i));
    covers_cut(yr, li.Y(i));
    for (const Cut& s : with_c) covers_cut(yr, s);
    only_cover(red, "red", yr, li.Y(i));

    covers_cut(tb, ti);
    covers_cut(tb, li.X(i));
    covers_cut(tb, li.Y(i));
    only_cover(blue, "blue", tb, ti);
  }
  const LinkIndex rz = li.link_between(r, z);
  for (const Cut& s : with_c) covers_cut(rz, s);
  only_cover(blue, "blue", rz, li.Singleton(r).complement());
  return report;
}

// ---------------------------------------------------------------------------
// Gap experiments

Optimum AnalyticOptimum(const LabeledInstance& li) {
  if (li.params.epsilon > 1) {
    throw BoundExceeded("analytic optimum requires epsilon <= 1");
  }
  Optimum opt;
  opt.witness.push_back(li.link_between(li.gadget_node("y", 1), li.role("r")));
  for (int i = 1; i <= li.params.p; ++i) {
    opt.witness.push_back(li.link_between(li.gadget_node("t", i), li.role("b")));
  }
  std::sort(opt.witness.begin(), opt.witness.end());
  opt.cost = li.instance.Cost(opt.witness);
  if (!Covers(li.instance, opt.witness)) {
    throw std::logic_error("analytic optimum witness does not cover");
  }
  return opt;
}

GapResult GapExperiment(const LabeledInstance& li, TiePolicy policy,
                        const OracleOptions& options) {
  GapResult result;
  result.policy = policy;
  result.checks.name = "gap";
  const AnalyticCoreOracle oracle(li, options.node_bound);
  result.run = Run(li.instance, oracle, policy);
  result.alg_links = result.run.selected;
  result.alg_cost = result.run.cost;
  result.dual_objective = DualObjective(result.run.duals);

  if (li.instance.num_links() <= options.link_bound) {
    Optimum opt = BruteForceOptimum(li.instance, options.link_bound, options.jobs);
    result.opt_cost = opt.cost;
    result.opt_links = std::move(opt.witness);
  } else {
    result.opt_is_analytic = true;
    Optimum opt = AnalyticOptimum(li);
    result.opt_cost = opt.cost;
    result.opt_links = std::move(opt.witness);
  }
  if (result.opt_cost == 0) {
    throw InvalidInput("ratio is undefined for a zero-cost optimum");
  }
  result.ratio = result.alg_cost / result.opt_cost;

  result.checks.Check(DualFeasible(li.instance, result.run.duals),
                      "duals must be feasible");
  result.checks.Check(result.dual_objective <= result.opt_cost,
                      "weak duality: dual objective " +
                          DisplayRational(result.dual_objective) + " exceeds opt " +
                          DisplayRational(result.opt_cost));
  result.checks.Check(result.alg_cost <= 5 * result.dual_objective,
                      "cost " + DisplayRational(result.alg_cost) +
                          " exceeds 5 times the dual objective");
  return result;
}

GapResult GapExperiment(const GadgetParams& params, TiePolicy policy,
                        const OracleOptions& options) {
  return GapExperiment(Generate(params), policy, options);
}

Rational GapFormula(int k) {
  if (k % 2 != 0) return Rational(5 * (k - 1), k + 3);
  return Rational(5 * (k - 2), k + 2);
}

std::vector<GapSweepRow> GapSweep(std::span<const int> ks,
                                  const OracleOptions& options) {
  std::vector<GapSweepRow> rows;
  for (int k : ks) {
    if (k < 3) throw InvalidInput("gap sweep requires k >= 3");
    const int p = (k - 1) / 2;
    GapResult gap = GapExperiment(GadgetParams{1, p, k, 0},
                                  TiePolicy::kAdversarialRedFirst, options);
    GapSweepRow row{k, p, gap.ratio, GapFormula(k), gap.opt_is_analytic, false};
    row.matches = row.ratio == row.formula && gap.checks.passed();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace scc
