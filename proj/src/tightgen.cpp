#include "scc/tightgen.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "scc/errors.hpp"

namespace scc {

namespace {

constexpr NodeId kR = 0;
constexpr NodeId kB = 1;
constexpr NodeId kZ = 2;
constexpr std::string_view kGadgetBases[] = {"t", "a", "x", "y"};

NodeId GadgetNode(int base_index, int i) {
  return static_cast<NodeId>(3 + 4 * (i - 1) + base_index);
}

std::string GadgetLabel(std::string_view base, int i, int p) {
  if (p == 1) return std::string(base);
  return std::string(base) + "_" + std::to_string(i);
}

LabeledInstance Build(const GadgetParams& params) {
  ValidateParams(params);
  const int q = params.q;
  const int p = params.p;
  const int k = params.k;
  const std::size_t n = 4 * static_cast<std::size_t>(p) + 3;

  std::vector<std::string> labels(n);
  std::map<std::string, NodeId> roles{{"r", kR}, {"b", kB}, {"z", kZ}};
  labels[kR] = "r";
  labels[kB] = "b";
  labels[kZ] = "z";
  for (int i = 1; i <= p; ++i) {
    for (int j = 0; j < 4; ++j) {
      const NodeId v = GadgetNode(j, i);
      labels[v] = GadgetLabel(kGadgetBases[j], i, p);
      roles[labels[v]] = v;
    }
  }

  // Multiplicities solve the degree system of the construction; the shared
  // r-b and z-b bundles use the glued counts, which reduce to k-q and
  // k-q-1 when p == 1.
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i) {
    const NodeId t = GadgetNode(0, i), a = GadgetNode(1, i),
                 x = GadgetNode(2, i), y = GadgetNode(3, i);
    edges.push_back({t, a, k - q});
    edges.push_back({a, kR, q - 1});
    edges.push_back({t, x, q - 1});
    edges.push_back({a, x, 1});
    edges.push_back({x, y, k - q});
    edges.push_back({y, kZ, k - q});
  }
  edges.push_back({kZ, kB, static_cast<std::int64_t>(k) - p * q - 1});
  edges.push_back({kB, kR, static_cast<std::int64_t>(k) - p * q});

  std::vector<Link> links;
  std::vector<LinkIndex> red, blue;
  for (int i = 1; i <= p; ++i) {
    const NodeId t = GadgetNode(0, i), a = GadgetNode(1, i),
                 x = GadgetNode(2, i), y = GadgetNode(3, i);
    for (auto [u, v, cost] : {std::tuple{t, x, 2}, std::tuple{a, y, 1},
                              std::tuple{y, kR, 2}}) {
      red.push_back(links.size());
      links.push_back({u, v, Rational(cost), LinkTag::kRed});
    }
  }
  for (int i = 1; i <= p; ++i) {
    blue.push_back(links.size());
    links.push_back({GadgetNode(0, i), kB, 1 + params.epsilon, LinkTag::kBlue});
  }
  blue.push_back(links.size());
  links.push_back({kR, kZ, 2 + params.epsilon, LinkTag::kBlue});

  LabeledInstance li{
      Instance(MultiGraph(n, std::move(edges), std::move(labels)),
               std::move(links), k),
      params, std::move(roles), std::move(red), std::move(blue)};
  if (auto failures = CheckDegreeIdentities(li); !failures.empty()) {
    throw std::logic_error("generated instance violates " + failures.front());
  }
  return li;
}

}  // namespace

Rational DefaultEpsilon() { return Rational(1, 100); }

void ValidateParams(const GadgetParams& params) {
  if (params.q < 1) throw InvalidInput("requires q >= 1");
  if (params.p < 1) throw InvalidInput("requires p >= 1");
  if (params.p == 1 && params.k < 2 * params.q + 1) {
    throw InvalidInput("requires k >= 2q+1");
  }
  if (params.p >= 2 && params.k < 2 * params.p * params.q + 1) {
    throw InvalidInput("requires k >= 2pq+1");
  }
  if (params.epsilon < 0) throw InvalidInput("requires epsilon >= 0");
}

// ---------------------------------------------------------------------------
// LabeledInstance accessors

NodeId LabeledInstance::role(std::string_view name) const {
  auto it = roles.find(std::string(name));
  if (it == roles.end()) {
    throw InvalidInput("instance has no node labeled " + std::string(name));
  }
  return it->second;
}

NodeId LabeledInstance::gadget_node(std::string_view base, int i) const {
  return role(GadgetLabel(base, i, params.p));
}

LinkIndex LabeledInstance::link_between(NodeId u, NodeId v) const {
  const auto links = instance.links();
  for (LinkIndex i = 0; i < links.size(); ++i) {
    if ((links[i].u == u && links[i].v == v) ||
        (links[i].u == v && links[i].v == u)) {
      return i;
    }
  }
  throw InvalidInput("no link between " + instance.graph().label(u) + " and " +
                     instance.graph().label(v));
}

Cut LabeledInstance::Singleton(NodeId v) const {
  return Cut(instance.num_nodes(), {v});
}

Cut LabeledInstance::A(int i) const {
  return Cut(instance.num_nodes(), {gadget_node("t", i), gadget_node("a", i)});
}

Cut LabeledInstance::X(int i) const {
  return Cut(instance.num_nodes(), {gadget_node("t", i), gadget_node("a", i),
                                    gadget_node("x", i)});
}

Cut LabeledInstance::Y(int i) const {
  return Cut(instance.num_nodes(), {gadget_node("t", i), gadget_node("a", i),
                                    gadget_node("x", i), gadget_node("y", i)});
}

Cut LabeledInstance::C() const {
  std::vector<NodeId> members{role("z")};
  for (int i = 1; i <= params.p; ++i) {
    members.push_back(gadget_node("x", i));
    members.push_back(gadget_node("y", i));
  }
  return Cut(instance.num_nodes(), members);
}

// ---------------------------------------------------------------------------
// Generators

LabeledInstance SingleGadget(int q, int k, const Rational& epsilon) {
  return Build({q, 1, k, epsilon});
}

LabeledInstance GluedInstance(int q, int p, int k, const Rational& epsilon) {
  if (p < 2) throw InvalidInput("requires p >= 2 for the glued instance");
  return Build({q, p, k, epsilon});
}

LabeledInstance Generate(const GadgetParams& params) {
  if (params.p == 1) return SingleGadget(params.q, params.k, params.epsilon);
  return GluedInstance(params.q, params.p, params.k, params.epsilon);
}

LabeledInstance RecoverLabels(Instance instance, std::optional<int> q) {
  const MultiGraph& g = instance.graph();
  int p = 0;
  if (g.FindLabel("t")) {
    p = 1;
  } else {
    while (g.FindLabel("t_" + std::to_string(p + 1))) ++p;
  }
  if (p == 0) throw InvalidInput("instance has no gadget labels (t or t_1)");

  std::map<std::string, NodeId> roles;
  auto require = [&](const std::string& name) {
    auto v = g.FindLabel(name);
    if (!v) throw InvalidInput("instance has no node labeled " + name);
    roles[name] = *v;
  };
  for (const char* axis : {"r", "b", "z"}) require(axis);
  for (int i = 1; i <= p; ++i) {
    for (auto base : kGadgetBases) require(GadgetLabel(base, i, p));
  }

  std::vector<LinkIndex> red, blue;
  for (LinkIndex i = 0; i < instance.num_links(); ++i) {
    if (instance.link(i).tag == LinkTag::kRed) red.push_back(i);
    if (instance.link(i).tag == LinkTag::kBlue) blue.push_back(i);
  }

  GadgetParams params;
  params.p = p;
  params.k = static_cast<int>(instance.k());
  params.q = q.value_or(static_cast<int>(
      instance.k() - g.multiplicity(roles.at(GadgetLabel("t", 1, p)),
                                    roles.at(GadgetLabel("a", 1, p)))));
  params.epsilon = 0;
  for (LinkIndex i : blue) {
    const Link& l = instance.link(i);
    if (l.u == roles.at(GadgetLabel("t", 1, p)) || l.v == roles.at(GadgetLabel("t", 1, p))) {
      params.epsilon = l.cost - 1;
    }
  }
  return LabeledInstance{std::move(instance), params, std::move(roles),
                         std::move(red), std::move(blue)};
}

// ---------------------------------------------------------------------------
// Degree identities

std::vector<std::string> CheckDegreeIdentities(const LabeledInstance& li) {
  std::vector<std::string> failures;
  const MultiGraph& g = li.instance.graph();
  const std::int64_t q = li.params.q;
  const std::int64_t p = li.params.p;
  const std::int64_t k = li.params.k;
  const std::size_t n = li.instance.num_nodes();

  auto expect = [&](const std::string& name, const Cut& s, std::int64_t want) {
    const std::int64_t got = CutDegree(g, s);
    if (got != want) {
      failures.push_back("d(" + name + ") = " + std::to_string(want) +
                         " (found " + std::to_string(got) + ")");
    }
  };
  auto node = [&](std::string_view base, int i) { return li.gadget_node(base, i); };
  auto label = [&](std::string_view base, int i) {
    return GadgetLabel(base, i, li.params.p);
  };

  if (n != 4 * static_cast<std::size_t>(p) + 3) {
    failures.push_back("node count = 4p+3 (found " + std::to_string(n) + ")");
    return failures;
  }

  expect("r", li.Singleton(li.role("r")), k - p);
  expect("b", li.Singleton(li.role("b")), 2 * k - 2 * p * q - 1);
  expect("C", li.C(), k - 1);
  for (int i = 1; i <= p; ++i) {
    expect(label("t", i), li.Singleton(node("t", i)), k - 1);
    expect(label("a", i), li.Singleton(node("a", i)), k);
    expect(label("x", i), li.Singleton(node("x", i)), k);
    expect(label("y", i), li.Singleton(node("y", i)), 2 * k - 2 * q);
    expect(label("A", i), li.A(i), 2 * q - 1);
    expect(label("X", i), li.X(i), k - 1);
    expect(label("Y", i), li.Y(i), k - 1);
  }

  const NodeId b = li.role("b"), z = li.role("z");
  if (p == 1) {
    const NodeId a = node("a", 1), x = node("x", 1), y = node("y", 1);
    expect("z", li.Singleton(z), 2 * k - 2 * q - 1);
    expect("{x,y}", Cut(n, {x, y}), k);
    expect("{y,z}", Cut(n, {y, z}), 2 * k - 2 * q - 1);
    expect("{x,z}", Cut(n, {x, z}),
           CutDegree(g, li.Singleton(x)) + CutDegree(g, li.Singleton(z)));
    expect("{a,b}", Cut(n, {a, b}),
           CutDegree(g, li.Singleton(a)) + CutDegree(g, li.Singleton(b)));
  } else {
    // Unions of A_i's: d = |I|(2q-1). Exhaustive for p <= 16.
    const std::uint64_t subsets = std::uint64_t{1} << std::min<std::int64_t>(p, 16);
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::vector<NodeId> members;
      std::string name;
      std::int64_t count = 0;
      for (int i = 1; i <= p && i <= 16; ++i) {
        if ((mask >> (i - 1)) & 1u) {
          members.push_back(node("t", i));
          members.push_back(node("a", i));
          name += (name.empty() ? "" : "+") + label("A", i);
          ++count;
        }
      }
      expect(name, Cut(n, members), count * (2 * q - 1));
    }
    // No green edge joins two different gadget copies.
    std::vector<int> copy(n, 0);
    for (int i = 1; i <= p; ++i) {
      for (auto base : kGadgetBases) copy[node(base, i)] = i;
    }
    auto copy_of = [&](NodeId v) { return copy[v]; };
    for (const Edge& e : g.edges()) {
      const int cu = copy_of(e.u), cv = copy_of(e.v);
      if (cu != 0 && cv != 0 && cu != cv) {
        failures.push_back("no edge between gadget copies (found " +
                           g.label(e.u) + "-" + g.label(e.v) + ")");
      }
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Analytic cores and family slices

namespace {

std::vector<Cut> AnalyticCores(const LabeledInstance& li) {
  std::vector<Cut> cores{li.Singleton(li.role("r")), li.C()};
  for (int i = 1; i <= li.params.p; ++i) {
    cores.push_back(li.Singleton(li.gadget_node("t", i)));
  }
  std::sort(cores.begin(), cores.end());
  return cores;
}

}  // namespace

AnalyticCoreOracle::AnalyticCoreOracle(const LabeledInstance& li,
                                       std::size_t node_bound)
    : initial_(AnalyticCores(li)), node_bound_(node_bound) {}

std::vector<Cut> AnalyticCoreOracle::InitialCores(const Instance&) const {
  return initial_;
}

std::vector<Cut> AnalyticCoreOracle::CoresGiven(
    const Instance& instance, std::span<const LinkIndex> selected) const {
  if (selected.empty()) return initial_;
  return CoresBruteForce(instance, selected, node_bound_);
}

FamilySlices ExpectedFamilySlices(const LabeledInstance& li) {
  FamilySlices slices;
  slices.cores = AnalyticCores(li);
  const int p = li.params.p;
  const std::size_t n = li.instance.num_nodes();
  if (p > 20) throw BoundExceeded("family slices enumerate 2^p unions; p <= 20");
  auto& out = slices.fr_minus_frc;
  for (int i = 1; i <= p; ++i) {
    out.push_back(li.Singleton(li.gadget_node("t", i)));
    out.push_back(li.X(i));
    out.push_back(li.Y(i));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask) {
    std::vector<NodeId> members;
    for (int i = 1; i <= p; ++i) {
      if ((mask >> (i - 1)) & 1u) {
        members.push_back(li.gadget_node("t", i));
        members.push_back(li.gadget_node("a", i));
      }
    }
    out.push_back(Cut(n, members));
  }
  std::sort(out.begin(), out.end());
  return slices;
}

}  // namespace scc
