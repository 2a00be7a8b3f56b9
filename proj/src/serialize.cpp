#include "scc/serialize.hpp"

#include <sstream>

#include "scc/errors.hpp"

namespace scc {

using nlohmann::json;

namespace {

template <typename T>
T Field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(std::string("instance JSON: missing field \"") + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("instance JSON: bad field \"") + key + "\": " + e.what());
  }
}

NodeId NodeField(const json& obj, const char* key) {
  const auto value = Field<std::int64_t>(obj, key);
  if (value < 0) throw InvalidInput(std::string("instance JSON: negative ") + key);
  return static_cast<NodeId>(value);
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  const MultiGraph& g = instance.graph();
  json nodes = json::array();
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    nodes.push_back({{"id", v}, {"label", g.label(v)}});
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
  }
  json links = json::array();
  for (const Link& l : instance.links()) {
    json tag = nullptr;
    if (l.tag != LinkTag::kNone) tag = std::string(TagName(l.tag));
    links.push_back({{"u", l.u}, {"v", l.v}, {"cost", FormatRational(l.cost)}, {"tag", tag}});
  }
  return {{"k", instance.k()}, {"nodes", nodes}, {"edges", edges}, {"links", links}};
}

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("instance JSON must be an object");
  const auto k = Field<std::int64_t>(doc, "k");
  const auto nodes = Field<json>(doc, "nodes");
  if (!nodes.is_array()) throw InvalidInput("instance JSON: nodes must be an array");

  std::vector<std::string> labels(nodes.size());
  std::vector<char> seen(nodes.size(), 0);
  for (const json& node : nodes) {
    const NodeId id = NodeField(node, "id");
    if (id >= nodes.size() || seen[id]) {
      throw InvalidInput("instance JSON: node ids must be unique and dense");
    }
    seen[id] = 1;
    labels[id] = Field<std::string>(node, "label");
  }

  std::vector<Edge> edges;
  for (const json& e : Field<json>(doc, "edges")) {
    const auto mult = Field<std::int64_t>(e, "mult");
    if (mult < 1) throw InvalidInput("instance JSON: edge multiplicity must be >= 1");
    edges.push_back({NodeField(e, "u"), NodeField(e, "v"), mult});
  }

  std::vector<Link> links;
  for (const json& l : Field<json>(doc, "links")) {
    Link link{NodeField(l, "u"), NodeField(l, "v"),
              ParseRational(Field<std::string>(l, "cost")), LinkTag::kNone};
    if (!l.contains("tag")) throw InvalidInput("instance JSON: missing field \"tag\"");
    const json& tag = l.at("tag");
    if (tag.is_string() && tag == "red") {
      link.tag = LinkTag::kRed;
    } else if (tag.is_string() && tag == "blue") {
      link.tag = LinkTag::kBlue;
    } else if (!tag.is_null()) {
      throw InvalidInput("instance JSON: tag must be \"red\", \"blue\" or null");
    }
    links.push_back(std::move(link));
  }
  return Instance(MultiGraph(nodes.size(), std::move(edges), std::move(labels)),
                  std::move(links), k);
}

std::string SerializeInstance(const Instance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("instance JSON does not parse: ") + e.what());
  }
  return InstanceFromJson(doc);
}

json CutToJson(const Cut& cut) { return cut.members(); }

json DualsToJson(const DualSolution& duals) {
  json out = json::array();
  for (const auto& [cut, y] : duals.entries()) {
    out.push_back({{"cut", CutToJson(cut)}, {"y", FormatRational(y)}});
  }
  return out;
}

json TraceToJson(const RunResult& run, TiePolicy policy) {
  json iterations = json::array();
  for (const Iteration& it : run.trace.iterations) {
    json cores = json::array();
    for (const Cut& c : it.active_cores) cores.push_back(CutToJson(c));
    iterations.push_back({{"active_cores", cores},
                          {"increment", FormatRational(it.increment)},
                          {"newly_tight", it.newly_tight},
                          {"duals", DualsToJson(it.duals)}});
  }
  return {{"policy", PolicyName(policy)},
          {"iterations", iterations},
          {"deletions", run.trace.deletions},
          {"final", run.trace.final_links},
          {"cost", FormatRational(run.cost)},
          {"dual_objective", FormatRational(DualObjective(run.duals))}};
}

json ReportToJson(const VerificationReport& report) {
  return {{"name", report.name},
          {"passed", report.passed()},
          {"checks", report.checks},
          {"failures", report.failures}};
}

json GapToJson(const GapResult& gap) {
  return {{"policy", PolicyName(gap.policy)},
          {"alg_cost", FormatRational(gap.alg_cost)},
          {"alg_links", gap.alg_links},
          {"opt_cost", FormatRational(gap.opt_cost)},
          {"opt_links", gap.opt_links},
          {"opt_is_analytic", gap.opt_is_analytic},
          {"dual_objective", FormatRational(gap.dual_objective)},
          {"ratio", FormatRational(gap.ratio)},
          {"checks", ReportToJson(gap.checks)}};
}

std::string ExportDot(const Instance& instance) {
  const MultiGraph& g = instance.graph();
  std::ostringstream out;
  out << "graph scc {\n";
  out << "  node [shape=circle];\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.mult
        << "\", color=green];\n";
  }
  for (const Link& l : instance.links()) {
    const char* color = l.tag == LinkTag::kRed    ? "red"
                        : l.tag == LinkTag::kBlue ? "blue"
                                                  : "black";
    out << "  " << l.u << " -- " << l.v << " [label=\"" << DisplayRational(l.cost)
        << "\", color=" << color << ", style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scc
