#ifndef JRPLAB_MLA_HPP
#define JRPLAB_MLA_HPP

#include <vector>

#include "jrplab/core.hpp"

namespace jrplab {

// Rooted node-weighted aggregation tree. Node 0 is the root; serving a set V
// of nodes costs the total weight of the minimal subtree connecting V to the
// root. Instances above 64 nodes can be built and serialized, but set-valued
// operations (eval, partitioning) require the bitmask range.
struct MlaInstance {
  std::vector<int> parent;  // parent[0] == -1
  std::vector<Rat> cost;

  int size() const { return static_cast<int>(parent.size()); }
  void validate() const;
  std::vector<std::vector<int>> children() const;  // ascending child index
};

// Nodes not yet placed into a partition part. While the partitioning
// algorithm runs, the active nodes always form a subtree containing the root.
struct ActiveSet {
  TypeSet active = 0;
};

// Sum of node costs over the union of root paths of V; 0 for the empty set.
Rat mla_eval(const MlaInstance& t, TypeSet v);

// An active node v is heavy when both its root path and its active subtree
// cost at most 4*sqrt(n)*c(v). Compared exactly by squaring.
bool is_heavy(const MlaInstance& t, const ActiveSet& act, int v);

struct LightCluster {
  TypeSet members = 0;
  bool forest = false;  // true when built from several sibling subtrees
  int attach = -1;      // subtree root, or the common parent for a forest
};

// Light cluster search: the whole active tree if small enough, otherwise a
// child subtree with size in [sqrt(n), 2*sqrt(n)], otherwise a sibling forest
// accumulated to at least sqrt(n) nodes. Requires a non-empty active set and
// assumes no active node is heavy.
LightCluster find_light_cluster(const MlaInstance& t, const ActiveSet& act);

struct MlaPartitionResult {
  Partition partition;      // tags: heavy / light-I / light-II
  std::vector<int> attach;  // per part: heavy root, or light-cluster root r_K
  long node_visits = 0;     // work counter; stays O(n^2)
};

// Exhausts heavy clusters (children scanned before parents, ascending index),
// then carves one light cluster, and repeats until every node is partitioned.
// Part costs are the service costs of the parts.
MlaPartitionResult mla_partition(const MlaInstance& t);

// Star with root cost sqrt(n) and n-1 unit-cost leaves; n must be a perfect
// square at least 4 so the root cost is rational.
MlaInstance gen_star_mla(int n);

}  // namespace jrplab

#endif
