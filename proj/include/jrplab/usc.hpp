#ifndef JRPLAB_USC_HPP
#define JRPLAB_USC_HPP

#include <vector>

#include "jrplab/quad.hpp"
#include "jrplab/service_function.hpp"

namespace jrplab {

// Set system for universal set cover. Sets are sorted index lists so the
// universe is not limited to the 64-type bitmask range; costs may be exact
// quadratic irrationals (the adversarial instances need square roots).
struct SetSystem {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  std::vector<Quad> costs;

  int collection_size() const { return static_cast<int>(sets.size()); }
  void validate() const;  // indices in range, sorted, costs non-negative
  bool covers_everything() const;
};

// Universal assignment: element e is served by collection set assigned[e],
// which must contain e.
struct Assignment {
  std::vector<int> assigned;
};

struct GreedyResult {
  Assignment assignment;
  std::vector<int> picked;  // collection indices in selection order
};

// Greedy universal cover: repeatedly pick the set minimizing
// c(S)/sqrt(|S ∩ U|) over the still-undefined elements U, assigning all of
// S ∩ U to S. Ratio comparisons are exact; ties break to the lowest index.
GreedyResult usc_greedy(const SetSystem& sys);

// Preimage partition of an assignment. Parts are the nonempty preimages
// a^-1(S); a part whose preimage is a proper subset of S keeps the cost c(S)
// and is flagged, since a bare set system has no function to re-price it.
struct UscPartition {
  std::vector<std::vector<int>> parts;
  std::vector<Quad> costs;
  std::vector<int> source_set;        // collection index backing each part
  std::vector<bool> partial_preimage;
};

UscPartition assignment_to_partition(const SetSystem& sys, const Assignment& a);

// Exponential pipeline for explicit subadditive functions: build the full
// power-set system with c(S) = f(S), run the greedy, and re-price each
// preimage part under f. The induced disjoint function dominates f pointwise.
Partition subadditive_to_disjoint(const ServiceFunctionSpec& f);

// Minimum-cost subfamily covering X, by dynamic programming over the subsets
// of X (|X| <= 20) or brute force over subfamilies (collection <= 20).
// Requires rational costs.
Rat opt_set_cover(const SetSystem& sys, const std::vector<int>& x);

// Adversarial instance that pins the greedy's analysis: sets S, S_1..S_k with
// |S_i| = floor(k / (k-i+1)), |S ∩ S_i| = 1, c(S) = 1 and
// c(S_i) = sqrt(|S_i|/(k-i+1)) - eps*i. The perturbation forces the greedy to
// take S_1..S_k in order. Collection index 0 is S; index i is S_i.
SetSystem gen_jia_tight(int k, const Rat& eps);

}  // namespace jrplab

#endif
