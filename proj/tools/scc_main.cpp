// Command-line front end: generate tight-example instances, run the
// primal-dual solver, run the verifiers, sweep the gap formula and export DOT.
//
// Exit codes: 0 success, 1 verification failure, 2 infeasible, 3 invalid
// input (including I/O errors), 4 enumeration bound exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scc/covering.hpp"
#include "scc/errors.hpp"
#include "scc/oracle.hpp"
#include "scc/serialize.hpp"
#include "scc/tightgen.hpp"
#include "scc/wgmv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitBoundExceeded = 4;

struct ParamFlags {
  std::optional<int> q;
  std::optional<int> p;
  std::optional<int> k;
  std::string epsilon = "0/1";

  bool given() const { return q || p || k; }

  scc::GadgetParams Resolve() const {
    if (!q || !p || !k) throw scc::InvalidInput("--q, --p and --k must be given together");
    return {*q, *p, *k, scc::ParseRational(epsilon)};
  }
};

void AddParamFlags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--q", flags.q, "gadget parameter q >= 1");
  cmd->add_option("--p", flags.p, "number of glued gadget copies (1 = single gadget)");
  cmd->add_option("--k", flags.k, "small-cut threshold");
  cmd->add_option("--epsilon", flags.epsilon,
                  "exact rational added to blue link costs, e.g. 1/100");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scc::InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw scc::InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw scc::InvalidInput("failed writing " + path);
}

scc::TiePolicy ResolvePolicy(const std::string& name) {
  auto policy = scc::ParsePolicy(name);
  if (!policy) throw scc::InvalidInput("unknown tie policy: " + name);
  return *policy;
}

std::string LinkNames(const scc::Instance& instance,
                      const std::vector<scc::LinkIndex>& links) {
  std::string out;
  for (scc::LinkIndex i : links) {
    const scc::Link& l = instance.link(i);
    if (!out.empty()) out += " ";
    out += instance.graph().label(l.u) + "-" + instance.graph().label(l.v);
  }
  return out;
}

// Loads either --in FILE or the generated instance for --q/--p/--k.
scc::LabeledInstance LoadLabeled(const std::string& in_path,
                                 const ParamFlags& flags) {
  if (!in_path.empty()) {
    return scc::RecoverLabels(scc::ParseInstance(ReadFile(in_path)), flags.q);
  }
  return scc::Generate(flags.Resolve());
}

int CmdGenerate(const ParamFlags& flags, const std::string& out_path) {
  const scc::LabeledInstance li = scc::Generate(flags.Resolve());
  WriteOutput(out_path, scc::SerializeInstance(li.instance));
  return kExitOk;
}

int CmdSolve(const std::string& in_path, const ParamFlags& flags,
             const std::string& policy_name, const std::string& trace_path) {
  const scc::TiePolicy policy = ResolvePolicy(policy_name);
  std::optional<scc::LabeledInstance> generated;
  std::optional<scc::Instance> loaded;
  scc::RunResult run;
  if (!in_path.empty()) {
    loaded = scc::ParseInstance(ReadFile(in_path));
    run = scc::Run(*loaded, scc::BruteForceCoreOracle(), policy);
  } else {
    generated = scc::Generate(flags.Resolve());
    run = scc::Run(generated->instance, scc::AnalyticCoreOracle(*generated), policy);
  }
  const scc::Instance& instance = loaded ? *loaded : generated->instance;
  const scc::Rational dual = scc::DualObjective(run.duals);

  if (run.selected.empty()) {
    std::cout << "cost " << scc::DisplayRational(run.cost) << ", empty solution\n";
  } else {
    std::cout << "cost " << scc::DisplayRational(run.cost) << ", dual "
              << scc::DisplayRational(dual);
    if (dual > 0) std::cout << ", ratio " << scc::DisplayRational(run.cost / dual);
    std::cout << "\n";
    std::cout << "links: " << LinkNames(instance, run.selected) << "\n";
  }
  std::cout << "iterations: " << run.trace.iterations.size()
            << ", deleted: " << run.trace.deletions.size() << "\n";
  if (!trace_path.empty()) {
    WriteOutput(trace_path, scc::TraceToJson(run, policy).dump(2) + "\n");
  }
  return kExitOk;
}

int CmdVerify(const std::string& in_path, const ParamFlags& flags,
              const std::string& policy_name, unsigned jobs,
              const std::string& out_path) {
  const scc::LabeledInstance li = LoadLabeled(in_path, flags);
  scc::OracleOptions options;
  options.jobs = jobs;

  const scc::VerificationReport cores = scc::VerifyCoresLemma(li, options.node_bound);
  const scc::VerificationReport feasibility =
      scc::VerifyFeasibilityLemma(li, options.node_bound);
  scc::GapResult gap = scc::GapExperiment(li, ResolvePolicy(policy_name), options);

  std::vector<scc::LinkIndex> red = li.red_links;
  std::sort(red.begin(), red.end());
  if (gap.policy == scc::TiePolicy::kAdversarialRedFirst) {
    gap.checks.Check(gap.alg_links == red, "the algorithm must return the red links");
  }
  if (li.params.epsilon == 0) {
    gap.checks.Check(gap.opt_cost == li.instance.Cost(li.blue_links),
                     "opt must equal the blue cost");
  }
  if (li.params.epsilon <= 1) {
    gap.checks.Check(gap.opt_cost == scc::AnalyticOptimum(li).cost,
                     "opt must equal 2 + p(1+epsilon)");
  }

  const bool passed = cores.passed() && feasibility.passed() && gap.checks.passed();
  nlohmann::json report = {
      {"passed", passed},
      {"params",
       {{"q", li.params.q}, {"p", li.params.p}, {"k", li.params.k},
        {"epsilon", scc::FormatRational(li.params.epsilon)}}},
      {"reports", {scc::ReportToJson(cores), scc::ReportToJson(feasibility)}},
      {"gap", scc::GapToJson(gap)}};
  WriteOutput(out_path, report.dump(2) + "\n");
  return passed ? kExitOk : kExitVerificationFailed;
}

int CmdExperiment(const std::vector<int>& ks, unsigned jobs,
                  const std::string& out_path) {
  scc::OracleOptions options;
  options.jobs = jobs;
  const auto rows = scc::GapSweep(ks, options);
  bool all_match = true;
  nlohmann::json table = nlohmann::json::array();
  std::cout << "k\tp\tratio\tformula\topt\tmatch\n";
  for (const auto& row : rows) {
    all_match = all_match && row.matches;
    std::cout << row.k << "\t" << row.p << "\t" << scc::DisplayRational(row.ratio)
              << "\t" << scc::DisplayRational(row.formula) << "\t"
              << (row.opt_is_analytic ? "analytic" : "enumerated") << "\t"
              << (row.matches ? "yes" : "NO") << "\n";
    table.push_back({{"k", row.k},
                     {"p", row.p},
                     {"ratio", scc::FormatRational(row.ratio)},
                     {"formula", scc::FormatRational(row.formula)},
                     {"opt_is_analytic", row.opt_is_analytic},
                     {"matches", row.matches}});
  }
  if (!out_path.empty()) WriteOutput(out_path, table.dump(2) + "\n");
  return all_match ? kExitOk : kExitVerificationFailed;
}

int CmdExportDot(const std::string& in_path, const std::string& out_path) {
  WriteOutput(out_path, scc::ExportDot(scc::ParseInstance(ReadFile(in_path))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small Cuts Cover: primal-dual solver and tight-example toolkit"};
  app.require_subcommand(1);

  ParamFlags flags;
  std::string in_path;
  std::string out_path;
  std::string trace_path;
  std::string policy = "adversarial-red-first";
  unsigned jobs = 1;
  std::vector<int> ks;

  auto* generate = app.add_subcommand("generate", "write a tight-example instance as JSON");
  AddParamFlags(generate, flags);
  generate->add_option("--out", out_path, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "run the primal-dual algorithm");
  solve->add_option("instance,--in", in_path, "instance JSON file");
  AddParamFlags(solve, flags);
  solve->add_option("--policy", policy,
                    "adversarial-red-first | helpful-blue-first | input-order | cost-ascending");
  solve->add_option("--trace", trace_path, "write the run trace as JSON");

  auto* verify = app.add_subcommand("verify", "check cores, feasibility and the gap on a gadget instance");
  verify->add_option("instance,--in", in_path, "instance JSON file");
  AddParamFlags(verify, flags);
  verify->add_option("--policy", policy, "tie policy for the gap run");
  verify->add_option("--jobs", jobs, "worker threads for exhaustive search")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "report file (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "gap formula sweep at q = 1, maximal p");
  experiment->add_option("--k", ks, "values of k, e.g. --k 5,6,7")->delimiter(',')->required();
  experiment->add_option("--jobs", jobs, "worker threads for exhaustive search")->check(CLI::PositiveNumber);
  experiment->add_option("--out", out_path, "write the table as JSON");

  auto* export_dot = app.add_subcommand("export-dot", "render an instance as Graphviz DOT");
  export_dot->add_option("instance,--in", in_path, "instance JSON file")->required();
  export_dot->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*generate) return CmdGenerate(flags, out_path);
    if (*solve) return CmdSolve(in_path, flags, policy, trace_path);
    if (*verify) return CmdVerify(in_path, flags, policy, jobs, out_path);
    if (*experiment) return CmdExperiment(ks, jobs, out_path);
    if (*export_dot) return CmdExportDot(in_path, out_path);
  } catch (const scc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const scc::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBoundExceeded;
  } catch (const scc::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
