#ifndef SCC_TIGHTGEN_HPP_
#define SCC_TIGHTGEN_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scc/covering.hpp"
#include "scc/rational.hpp"

namespace scc {

// Parameters of the tight-example family. p == 1 is the 7-node gadget,
// p >= 2 glues p gadget copies along the shared axis r, b, z.
struct GadgetParams {
  int q = 1;
  int p = 1;
  int k = 3;
  Rational epsilon = 0;  // added to every blue link cost
};

// Throws InvalidInput naming the violated inequality, e.g.
// "requires k >= 2pq+1".
void ValidateParams(const GadgetParams& params);

Rational DefaultEpsilon();  // 1/100

// Node layout for every p: r = 0, b = 1, z = 2, then t_i, a_i, x_i, y_i at
// 3 + 4(i-1) .. 6 + 4(i-1). Gadget nodes are labeled "t", "a", ... when
// p == 1 and "t_1", "a_1", ... otherwise.
struct LabeledInstance {
  Instance instance;
  GadgetParams params;
  std::map<std::string, NodeId> roles;
  std::vector<LinkIndex> red_links;
  std::vector<LinkIndex> blue_links;

  NodeId role(std::string_view name) const;
  // Gadget node `base` ("t", "a", "x" or "y") of copy i (1-based).
  NodeId gadget_node(std::string_view base, int i) const;
  // The link joining u and v. Throws InvalidInput if there is none.
  LinkIndex link_between(NodeId u, NodeId v) const;

  // Named cuts of the construction.
  Cut Singleton(NodeId v) const;
  Cut A(int i) const;  // {t_i, a_i}
  Cut X(int i) const;  // A_i + x_i
  Cut Y(int i) const;  // X_i + y_i
  Cut C() const;       // {z} + all x_i, y_i
};

// Both generators validate every quoted degree identity at construction and
// throw std::logic_error if one fails.
LabeledInstance SingleGadget(int q, int k, const Rational& epsilon = 0);
LabeledInstance GluedInstance(int q, int p, int k, const Rational& epsilon = 0);

// Routes p == 1 to SingleGadget.
LabeledInstance Generate(const GadgetParams& params);

// Rebuilds roles and red/blue sets from node labels and link tags of an
// instance produced by Generate (for example after a JSON round trip). q is
// inferred from the t-a multiplicity unless given. No degree validation.
LabeledInstance RecoverLabels(Instance instance,
                              std::optional<int> q = std::nullopt);

// Human-readable descriptions of every degree identity that fails; empty
// when the instance matches the construction.
std::vector<std::string> CheckDegreeIdentities(const LabeledInstance& li);

// Initial cores {r}, {t_1}, ..., {t_p}, C taken from the construction. Later
// iterations fall back to exhaustive enumeration.
class AnalyticCoreOracle : public CoreOracle {
 public:
  explicit AnalyticCoreOracle(const LabeledInstance& li,
                              std::size_t node_bound = DefaultEnumerationBound());

  std::vector<Cut> InitialCores(const Instance& instance) const override;
  std::vector<Cut> CoresGiven(
      const Instance& instance,
      std::span<const LinkIndex> selected) const override;

 private:
  std::vector<Cut> initial_;
  std::size_t node_bound_;
};

struct FamilySlices {
  std::vector<Cut> cores;
  // Small cuts avoiding r that do not contain C: {t_i}, every union of
  // A_i's, X_i and Y_i.
  std::vector<Cut> fr_minus_frc;
};

// Both lists sorted by bitset value.
FamilySlices ExpectedFamilySlices(const LabeledInstance& li);

}  // namespace scc

#endif  // SCC_TIGHTGEN_HPP_
