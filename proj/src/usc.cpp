#include "jrplab/usc.hpp"

#include <algorithm>

namespace jrplab {

void SetSystem::validate() const {
  if (universe < 1) throw Error(ErrorKind::validation, "set system needs elements");
  if (sets.size() != costs.size())
    throw Error(ErrorKind::validation, "set/cost count mismatch");
  for (const auto& s : sets) {
    if (s.empty()) throw Error(ErrorKind::validation, "empty set in collection");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= universe)
        throw Error(ErrorKind::validation, "set element out of range");
      if (i > 0 && s[i] <= s[i - 1])
        throw Error(ErrorKind::validation, "set elements must be sorted and distinct");
    }
  }
  for (const Quad& c : costs)
    if (c.sign() < 0) throw Error(ErrorKind::validation, "negative set cost");
}

bool SetSystem::covers_everything() const {
  std::vector<bool> seen(universe, false);
  for (const auto& s : sets)
    for (int e : s) seen[e] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GreedyResult usc_greedy(const SetSystem& sys) {
  sys.validate();
  if (!sys.covers_everything())
    throw Error(ErrorKind::coverage, "some element is covered by no set");

  std::vector<bool> undefined(sys.universe, true);
  std::vector<int> live(sys.collection_size());  // |S ∩ U| per set
  for (int s = 0; s < sys.collection_size(); ++s)
    live[s] = static_cast<int>(sys.sets[s].size());

  GreedyResult out;
  out.assignment.assigned.assign(sys.universe, -1);
  int remaining = sys.universe;
  while (remaining > 0) {
    int best = -1;
    for (int s = 0; s < sys.collection_size(); ++s) {
      if (live[s] == 0) continue;
      if (best < 0 ||
          cmp_ratio_over_sqrt(sys.costs[s], static_cast<unsigned long>(live[s]),
                              sys.costs[best], static_cast<unsigned long>(live[best])) < 0)
        best = s;
    }
    if (best < 0) throw Error(ErrorKind::coverage, "undefined elements left uncovered");
    out.picked.push_back(best);
    for (int e : sys.sets[best]) {
      if (!undefined[e]) continue;
      undefined[e] = false;
      out.assignment.assigned[e] = best;
      --remaining;
    }
    for (int s = 0; s < sys.collection_size(); ++s) {
      if (live[s] == 0) continue;
      int cnt = 0;
      for (int e : sys.sets[s]) cnt += undefined[e] ? 1 : 0;
      live[s] = cnt;
    }
  }
  return out;
}

UscPartition assignment_to_partition(const SetSystem& sys, const Assignment& a) {
  if (static_cast<int>(a.assigned.size()) != sys.universe)
    throw Error(ErrorKind::validation, "assignment size mismatch");
  for (int e = 0; e < sys.universe; ++e) {
    const int s = a.assigned[e];
    if (s < 0 || s >= sys.collection_size())
      throw Error(ErrorKind::validation, "assignment points outside the collection");
    if (!std::binary_search(sys.sets[s].begin(), sys.sets[s].end(), e))
      throw Error(ErrorKind::validation, "element assigned to a set not containing it");
  }
  UscPartition out;
  std::vector<int> part_of_set(sys.collection_size(), -1);
  for (int e = 0; e < sys.universe; ++e) {
    const int s = a.assigned[e];
    if (part_of_set[s] < 0) {
      part_of_set[s] = static_cast<int>(out.parts.size());
      out.parts.emplace_back();
      out.costs.push_back(sys.costs[s]);
      out.source_set.push_back(s);
    }
    out.parts[part_of_set[s]].push_back(e);
  }
  out.partial_preimage.resize(out.parts.size());
  for (size_t i = 0; i < out.parts.size(); ++i)
    out.partial_preimage[i] = out.parts[i].size() != sys.sets[out.source_set[i]].size();
  return out;
}

Partition subadditive_to_disjoint(const ServiceFunctionSpec& f) {
  if (!f.as_explicit())
    throw Error(ErrorKind::domain, "power-set pipeline expects an explicit table");
  const int n = f.n();
  if (n > 14)
    throw Error(ErrorKind::size, "power-set pipeline capped at 14 types");

  SetSystem sys;
  sys.universe = n;
  const TypeSet all = full_mask(n);
  sys.sets.reserve((size_t{1} << n) - 1);
  for (TypeSet s = 1; s <= all; ++s) {
    sys.sets.push_back(set_to_indices(s));
    sys.costs.push_back(Quad(f.eval(s)));
  }
  GreedyResult greedy = usc_greedy(sys);
  UscPartition up = assignment_to_partition(sys, greedy.assignment);

  // preimages are themselves sets of the power-set collection: re-price under f
  Partition p;
  p.n = n;
  for (const auto& part : up.parts) {
    const TypeSet mask = indices_to_set(part, n);
    p.parts.push_back(mask);
    p.costs.push_back(f.eval(mask));
  }
  p.validate();
  return p;
}

Rat opt_set_cover(const SetSystem& sys, const std::vector<int>& x) {
  sys.validate();
  for (const Quad& c : sys.costs)
    if (!c.is_rational())
      throw Error(ErrorKind::domain, "optimal cover needs rational costs");
  if (x.empty()) return Rat(0);
  for (int e : x)
    if (e < 0 || e >= sys.universe) throw Error(ErrorKind::domain, "element out of range");

  if (x.size() <= 20) {
    // DP over subsets of X
    std::vector<int> pos(sys.universe, -1);
    for (size_t i = 0; i < x.size(); ++i) {
      if (pos[x[i]] >= 0) throw Error(ErrorKind::domain, "duplicate element in X");
      pos[x[i]] = static_cast<int>(i);
    }
    const std::uint32_t full = (1u << x.size()) - 1;
    std::vector<std::uint32_t> local(sys.collection_size(), 0);
    for (int s = 0; s < sys.collection_size(); ++s)
      for (int e : sys.sets[s])
        if (pos[e] >= 0) local[s] |= 1u << pos[e];
    std::vector<Rat> dp(static_cast<size_t>(full) + 1, Rat(0));
    std::vector<bool> reach(static_cast<size_t>(full) + 1, false);
    reach[0] = true;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const std::uint32_t need = mask & (~mask + 1);
      bool first = true;
      for (int s = 0; s < sys.collection_size(); ++s) {
        if (!(local[s] & need)) continue;
        const std::uint32_t rest = mask & ~local[s];
        if (!reach[rest]) continue;
        const Rat cand = dp[rest] + sys.costs[s].rational_part();
        if (first || cand < dp[mask]) {
          dp[mask] = cand;
          first = false;
        }
      }
      reach[mask] = !first;
    }
    if (!reach[full]) throw Error(ErrorKind::coverage, "X cannot be covered");
    return dp[full];
  }
  if (sys.collection_size() <= 20) {
    // brute force over subfamilies
    std::vector<bool> in_x(sys.universe, false);
    for (int e : x) in_x[e] = true;
    Rat best = 0;
    bool found = false;
    const std::uint32_t families = 1u << sys.collection_size();
    for (std::uint32_t fam = 1; fam < families; ++fam) {
      std::vector<bool> covered(sys.universe, false);
      Rat cost = 0;
      for (int s = 0; s < sys.collection_size(); ++s)
        if (fam & (1u << s)) {
          cost += sys.costs[s].rational_part();
          for (int e : sys.sets[s]) covered[e] = true;
        }
      bool ok = true;
      for (int e : x)
        if (!covered[e]) {
          ok = false;
          break;
        }
      if (ok && (!found || cost < best)) {
        best = cost;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::coverage, "X cannot be covered");
    return best;
  }
  throw Error(ErrorKind::size, "optimal cover needs |X| <= 20 or a collection <= 20");
}

SetSystem gen_jia_tight(int k, const Rat& eps) {
  if (k < 2) throw Error(ErrorKind::domain, "adversarial instance needs k >= 2");
  if (eps.sign() < 0) throw Error(ErrorKind::domain, "perturbation must be non-negative");

  std::vector<int> sizes(k);
  int n = 0;
  for (int i = 1; i <= k; ++i) {
    sizes[i - 1] = k / (k - i + 1);
    n += sizes[i - 1];
  }
  SetSystem sys;
  sys.universe = n;
  // S picks the first element of each block S_i
  std::vector<int> s_members;
  std::vector<std::vector<int>> blocks(k);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < sizes[i]; ++j) blocks[i].push_back(next++);
    s_members.push_back(blocks[i].front());
  }
  sys.sets.push_back(s_members);
  sys.costs.push_back(Quad(Rat(1)));
  for (int i = 1; i <= k; ++i) {
    sys.sets.push_back(blocks[i - 1]);
    Quad cost = Quad::sqrt_of(Rat(sizes[i - 1], static_cast<unsigned long>(k - i + 1)));
    cost = cost.minus(eps * Rat(i));
    if (cost.sign() <= 0)
      throw Error(ErrorKind::domain, "perturbation too large: a set cost became non-positive");
    sys.costs.push_back(cost);
  }
  sys.validate();
  return sys;
}

}  // namespace jrplab
