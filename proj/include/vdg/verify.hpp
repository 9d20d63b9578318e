#ifndef VDG_VERIFY_HPP
#define VDG_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdg/auteng.hpp"
#include "vdg/families.hpp"
#include "vdg/graph.hpp"
#include "vdg/perm.hpp"

namespace vdg {

/// Structured outcome of one theorem check on one instance.
struct VerifyReport {
  enum class Hypothesis { holds, fails, not_applicable };
  enum class Conclusion { verified, refuted, skipped };

  std::string theorem_id;
  std::string instance;
  std::string claim;
  Hypothesis hypothesis = Hypothesis::holds;
  std::string hypothesis_witness;
  Conclusion conclusion = Conclusion::skipped;
  std::string conclusion_witness;
  nlohmann::json evidence = nlohmann::json::object();
  double wall_time_secs = 0.0;

  bool refuted() const { return conclusion == Conclusion::refuted; }
  nlohmann::json to_json() const;
};

enum class Criterion { holds, inconclusive };

/// Outcome of the common-neighbor stability test plus the order comparison
/// between Aut(G) and Aut(B(G)).
struct StabilityVerdict {
  std::optional<int> a0;
  Criterion criterion = Criterion::inconclusive;
  std::string criterion_witness;
  Bigint aut_order = 0;
  Bigint double_aut_order = 0;
  bool stable = false;

  nlohmann::json to_json() const;
};

/// Every generator (and a seeded sample of generator products) fixes or swaps
/// the two sides of a connected bipartite graph.
VerifyReport check_bipartition_behavior(const Graph& g, const std::string& instance);

/// The pointwise stabilizer of one side of a connected bipartite vd-graph is
/// trivial.
VerifyReport check_pointwise_fix(const Graph& g, const std::string& instance);

/// g1 (on the sorted part U, re-indexed by position) is attached to g: the
/// restriction map from the U-stabilizer onto Aut(g1) is well defined,
/// injective and onto.
VerifyReport check_attached(const Graph& g, const std::vector<int>& part, const Graph& g1,
                            const std::string& instance);

/// Order equality |S(U)| = |Aut(g1)| plus a seeded spot-check that
/// restriction respects composition.
VerifyReport check_s_u_isomorphism(const Graph& g, const std::vector<int>& part, const Graph& g1,
                                   const std::string& instance);

/// With a side-swapping involution t: |Aut(g)| = 2|S(U)|, t lies outside
/// S(U), and S(U) together with t generates everything. Also reports whether
/// t commutes with the stabilizer generators.
VerifyReport check_semidirect_structure(const Graph& g, const std::vector<int>& part, const Perm& t,
                                        const std::string& instance);

/// The common-neighbor dichotomy: a0 is read off the first edge; holds iff
/// every edge has count a0 and every non-adjacent pair avoids a0.
StabilityVerdict stability_criterion(const Graph& g);

/// Full verdict with both group orders. Throws InvariantError when the
/// criterion holds but the orders deny stability (that would refute the
/// sufficiency theorem and must abort loudly).
StabilityVerdict is_stable(const Graph& g, const AutOptions& options = {});

/// Exhaustive Johnson common-neighbor scan: n-2 on edges, 4 at distance two,
/// 0 farther out. Requires 2 <= k <= n/2.
VerifyReport johnson_neighbor_counts(int n, int k);

/// The degree-0 dichotomy in the doubled Johnson graph J(6,k) x K2 over all
/// layer-0 pairs: the subgraph induced by X(a,b) = {a,b} u N(a,b) u t(N(a,b))
/// has an isolated vertex iff the pair is adjacent.
VerifyReport xab_structure(int n, int k);

/// Detail of one X(a,b) for named-instance assertions.
struct XabDetail {
  std::vector<std::string> members;   // labels of X(a,b)
  std::vector<std::string> isolated;  // labels of degree-0 vertices inside it
  bool adjacent = false;
};
XabDetail xab_detail(int n, int k, const KSubset& a, const KSubset& b);

/// Weichsel connectivity: one component when a factor has an odd cycle, two
/// when both factors are bipartite. Factors must be connected and nontrivial.
VerifyReport weichsel_check(const Graph& g1, const Graph& g2, const std::string& instance);

/// Closed-form automorphism group order for the families the order results
/// cover. Throws InvariantError for specs outside the table.
Bigint expected_aut_order(const FamilySpec& spec);

/// Report id under which a family's order comparison is filed.
std::string order_theorem_id(FamilyKind kind);

/// Builds the family graph and drives every check that applies to it.
std::vector<VerifyReport> verify_family(const FamilySpec& spec, const AutOptions& options = {});

/// Layer-0 vertex list and the layer swap of a bipartite double on 2n
/// vertices (helpers shared by checks and tests).
std::vector<int> double_layer0(int n);
Perm layer_swap(int n);

}  // namespace vdg

#endif  // VDG_VERIFY_HPP
