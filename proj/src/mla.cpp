#include "jrplab/mla.hpp"

namespace jrplab {

namespace {

// Per-instance scratch: static path costs plus one pass of active subtree
// aggregates. Path costs never depend on the active set because every
// ancestor of an active node is itself active.
struct TreeView {
  const MlaInstance* t;
  int n;
  std::vector<std::vector<int>> kids;
  std::vector<int> postorder;   // children before parents, ascending siblings
  std::vector<Rat> path_cost;   // c(R(v))
  std::vector<TypeSet> path_mask;

  explicit TreeView(const MlaInstance& inst) : t(&inst), n(inst.size()) {
    inst.validate();
    if (n > kMaxMaskTypes)
      throw Error(ErrorKind::size, "set operations need at most 64 tree nodes");
    kids = inst.children();
    postorder.reserve(n);
    build_postorder(0);
    path_cost.assign(n, Rat(0));
    path_mask.assign(n, 0);
    for (int v : order_root_first()) {
      if (v == 0) {
        path_cost[v] = inst.cost[v];
        path_mask[v] = type_bit(v);
      } else {
        path_cost[v] = path_cost[inst.parent[v]] + inst.cost[v];
        path_mask[v] = path_mask[inst.parent[v]] | type_bit(v);
      }
    }
  }

  void build_postorder(int v) {
    for (int c : kids[v]) build_postorder(c);
    postorder.push_back(v);
  }

  std::vector<int> order_root_first() const {
    std::vector<int> rev(postorder.rbegin(), postorder.rend());
    return rev;
  }

  // One pass over active nodes: subtree cost, size and member mask.
  struct ActivePass {
    std::vector<Rat> sub_cost;
    std::vector<int> sub_size;
    std::vector<TypeSet> sub_mask;
  };

  ActivePass active_pass(TypeSet act, long* visits) const {
    ActivePass p;
    p.sub_cost.assign(n, Rat(0));
    p.sub_size.assign(n, 0);
    p.sub_mask.assign(n, 0);
    for (int v : postorder) {
      if (!(act & type_bit(v))) continue;
      if (visits) ++*visits;
      p.sub_cost[v] = t->cost[v];
      p.sub_size[v] = 1;
      p.sub_mask[v] = type_bit(v);
      for (int c : kids[v]) {
        if (!(act & type_bit(c))) continue;
        p.sub_cost[v] += p.sub_cost[c];
        p.sub_size[v] += p.sub_size[c];
        p.sub_mask[v] |= p.sub_mask[c];
      }
    }
    return p;
  }

  bool heavy(int v, const ActivePass& p) const {
    const Rat& budget = t->cost[v];
    return leq_scaled_sqrt(path_cost[v], 4, static_cast<unsigned long>(n), budget) &&
           leq_scaled_sqrt(p.sub_cost[v], 4, static_cast<unsigned long>(n), budget);
  }
};

// |set| compared against thresholds sqrt(n) and 2*sqrt(n), by squaring.
bool size_gt_two_sqrt(int s, int n) { return static_cast<long>(s) * s > 4L * n; }
bool size_geq_sqrt(int s, int n) { return static_cast<long>(s) * s >= n; }

LightCluster light_cluster_impl(const TreeView& view, TypeSet act, long* visits) {
  const int n = view.n;
  if (act == 0) throw Error(ErrorKind::state, "light cluster search on empty active set");
  if (!(act & type_bit(0)))
    throw Error(ErrorKind::state, "active set must contain the root");
  auto pass = view.active_pass(act, visits);

  const int total = set_size(act);
  if (!size_gt_two_sqrt(total, n)) {
    LightCluster out;
    out.members = act;
    out.forest = false;
    out.attach = 0;
    return out;
  }

  int u = 0;
  for (;;) {
    int next = -1;
    for (int c : view.kids[u]) {
      if (!(act & type_bit(c))) continue;
      if (size_gt_two_sqrt(pass.sub_size[c], n)) {
        next = c;
        break;
      }
    }
    if (next < 0) break;
    u = next;
  }

  for (int c : view.kids[u]) {
    if (!(act & type_bit(c))) continue;
    if (size_geq_sqrt(pass.sub_size[c], n)) {
      LightCluster out;
      out.members = pass.sub_mask[c];
      out.forest = false;
      out.attach = c;
      return out;
    }
  }

  // Sibling forest: all child subtrees are below sqrt(n); accumulate until
  // the group reaches it. |T_act(u)| > 2*sqrt(n) guarantees enough mass.
  LightCluster out;
  out.forest = true;
  out.attach = u;
  int sz = 0;
  for (int c : view.kids[u]) {
    if (!(act & type_bit(c))) continue;
    out.members |= pass.sub_mask[c];
    sz += pass.sub_size[c];
    if (size_geq_sqrt(sz, n)) return out;
  }
  throw Error(ErrorKind::state, "sibling forest never reached sqrt(n) nodes");
}

}  // namespace

void MlaInstance::validate() const {
  const int n = size();
  if (n < 1) throw Error(ErrorKind::validation, "tree needs at least one node");
  if (cost.size() != parent.size())
    throw Error(ErrorKind::validation, "tree node/cost count mismatch");
  if (parent[0] != -1) throw Error(ErrorKind::validation, "node 0 must be the root");
  for (int v = 0; v < n; ++v) {
    if (cost[v].sign() < 0) throw Error(ErrorKind::validation, "negative node cost");
    if (v > 0 && (parent[v] < 0 || parent[v] >= n))
      throw Error(ErrorKind::validation, "parent index out of range");
  }
  // every node must reach the root without a cycle
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  for (int v = 0; v < n; ++v) {
    int u = v;
    std::vector<int> chain;
    while (u != 0 && state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = parent[u];
      if (u != 0 && state[u] == 1)
        throw Error(ErrorKind::validation, "parent links contain a cycle");
    }
    for (int w : chain) state[w] = 2;
  }
}

std::vector<std::vector<int>> MlaInstance::children() const {
  std::vector<std::vector<int>> kids(size());
  for (int v = 1; v < size(); ++v) kids[parent[v]].push_back(v);
  return kids;
}

Rat mla_eval(const MlaInstance& t, TypeSet v) {
  const int n = t.size();
  if (n > kMaxMaskTypes)
    throw Error(ErrorKind::size, "set operations need at most 64 tree nodes");
  if (v & ~full_mask(n)) throw Error(ErrorKind::domain, "node index out of range");
  if (v == 0) return Rat(0);
  TypeSet bought = 0;
  for_each_type(v, [&](int node) {
    int u = node;
    while (u != -1 && !(bought & type_bit(u))) {
      bought |= type_bit(u);
      u = t.parent[u];
    }
  });
  Rat total = 0;
  for_each_type(bought, [&](int node) { total += t.cost[node]; });
  return total;
}

bool is_heavy(const MlaInstance& t, const ActiveSet& act, int v) {
  TreeView view(t);
  if (v < 0 || v >= t.size()) throw Error(ErrorKind::domain, "node index out of range");
  if (!(act.active & type_bit(v))) throw Error(ErrorKind::state, "node is not active");
  auto pass = view.active_pass(act.active, nullptr);
  return view.heavy(v, pass);
}

LightCluster find_light_cluster(const MlaInstance& t, const ActiveSet& act) {
  TreeView view(t);
  return light_cluster_impl(view, act.active, nullptr);
}

MlaPartitionResult mla_partition(const MlaInstance& t) {
  TreeView view(t);
  const int n = view.n;
  MlaPartitionResult res;
  res.partition.n = n;
  TypeSet act = full_mask(n);

  while (act) {
    // heavy loop runs to exhaustion before any light cluster is carved
    bool clustered = true;
    while (clustered && act) {
      clustered = false;
      auto pass = view.active_pass(act, &res.node_visits);
      for (int v : view.postorder) {
        if (!(act & type_bit(v))) continue;
        ++res.node_visits;
        if (view.heavy(v, pass)) {
          res.partition.parts.push_back(pass.sub_mask[v]);
          res.partition.tags.push_back(PartTag::heavy);
          res.attach.push_back(v);
          act &= ~pass.sub_mask[v];
          clustered = true;
          break;
        }
      }
    }
    if (!act) break;
    LightCluster light = light_cluster_impl(view, act, &res.node_visits);
    res.partition.parts.push_back(light.members);
    res.partition.tags.push_back(light.forest ? PartTag::light_ii : PartTag::light_i);
    res.attach.push_back(light.attach);
    act &= ~light.members;
  }

  res.partition.costs.reserve(res.partition.parts.size());
  for (TypeSet part : res.partition.parts)
    res.partition.costs.push_back(mla_eval(t, part));
  res.partition.validate();
  return res;
}

MlaInstance gen_star_mla(int n) {
  if (n < 4 || !is_perfect_square(mpz_class(n)))
    throw Error(ErrorKind::domain, "star instance needs a perfect square n >= 4");
  MlaInstance t;
  t.parent.assign(n, 0);
  t.parent[0] = -1;
  t.cost.assign(n, Rat(1));
  t.cost[0] = Rat(isqrt_floor(mpz_class(n)), 1);
  return t;
}

}  // namespace jrplab
