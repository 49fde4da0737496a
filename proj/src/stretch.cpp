#include "jrplab/stretch.hpp"

#include <algorithm>
#include <memory>

namespace jrplab {

namespace {

// Incremental f evaluation along the representative DFS: push/pop one type at
// a time so leaves cost O(1) instead of a fresh eval.
class IncEval {
 public:
  virtual ~IncEval() = default;
  virtual void push(int type) = 0;
  virtual void pop() = 0;
  virtual Rat current() const = 0;
};

class ExplicitInc : public IncEval {
 public:
  explicit ExplicitInc(const ExplicitFn& fn) : fn_(fn) {}
  void push(int t) override { trail_.push_back(mask_); mask_ |= type_bit(t); }
  void pop() override { mask_ = trail_.back(); trail_.pop_back(); }
  Rat current() const override { return fn_.table[mask_]; }

 private:
  const ExplicitFn& fn_;
  TypeSet mask_ = 0;
  std::vector<TypeSet> trail_;
};

class SymmetricInc : public IncEval {
 public:
  explicit SymmetricInc(const SymmetricFn& fn) : fn_(fn) {}
  void push(int) override { ++count_; }
  void pop() override { --count_; }
  Rat current() const override { return fn_.values[count_]; }

 private:
  const SymmetricFn& fn_;
  int count_ = 0;
};

class DisjointInc : public IncEval {
 public:
  explicit DisjointInc(const DisjointFn& fn)
      : fn_(fn), hit_count_(fn.partition.parts.size(), 0) {}
  void push(int t) override {
    const int part = fn_.partition.part_of(t);
    trail_.push_back(part);
    if (hit_count_[part]++ == 0) sum_ += fn_.partition.costs[part];
  }
  void pop() override {
    const int part = trail_.back();
    trail_.pop_back();
    if (--hit_count_[part] == 0) sum_ -= fn_.partition.costs[part];
  }
  Rat current() const override { return sum_; }

 private:
  const DisjointFn& fn_;
  std::vector<int> hit_count_;
  std::vector<int> trail_;
  Rat sum_ = 0;
};

class MlaInc : public IncEval {
 public:
  explicit MlaInc(const MlaFn& fn) : tree_(fn.tree) {
    const int n = tree_.size();
    path_mask_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      TypeSet m = 0;
      for (int u = v; u != -1; u = tree_.parent[u]) m |= type_bit(u);
      path_mask_[v] = m;
    }
  }
  void push(int t) override {
    const TypeSet added = path_mask_[t] & ~covered_;
    trail_.emplace_back(added, sum_);
    covered_ |= added;
    for_each_type(added, [&](int u) { sum_ += tree_.cost[u]; });
  }
  void pop() override {
    covered_ &= ~trail_.back().first;
    sum_ = trail_.back().second;
    trail_.pop_back();
  }
  Rat current() const override { return sum_; }

 private:
  const MlaInstance& tree_;
  std::vector<TypeSet> path_mask_;
  TypeSet covered_ = 0;
  Rat sum_ = 0;
  std::vector<std::pair<TypeSet, Rat>> trail_;
};

class WeightedInc : public IncEval {
 public:
  explicit WeightedInc(const WeightedFn& fn) : fn_(fn) {}
  void push(int t) override { trail_.push_back(weight_); weight_ += fn_.instance.weights[t]; }
  void pop() override { weight_ = trail_.back(); trail_.pop_back(); }
  Rat current() const override { return fn_.instance.envelope.eval(weight_); }

 private:
  const WeightedFn& fn_;
  Rat weight_ = 0;
  std::vector<Rat> trail_;
};

std::unique_ptr<IncEval> make_inc(const ServiceFunctionSpec& f) {
  if (const auto* e = f.as_explicit()) return std::make_unique<ExplicitInc>(*e);
  if (const auto* s = f.as_symmetric()) return std::make_unique<SymmetricInc>(*s);
  if (const auto* d = f.as_disjoint()) return std::make_unique<DisjointInc>(*d);
  if (const auto* m = f.as_mla()) return std::make_unique<MlaInc>(*m);
  return std::make_unique<WeightedInc>(*f.as_weighted());
}

struct SearchState {
  const std::vector<std::vector<int>>* part_elems;
  const std::vector<Rat>* part_costs;
  IncEval* inc;
  TypeSet mask = 0;
  Rat g = 0;
  std::vector<int> hits;
  StretchReport best;
  bool any = false;

  void consider_leaf() {
    if (mask == 0) return;
    const Rat f_val = inc->current();
    if (f_val.is_zero()) {
      if (g.is_zero()) return;  // 0/0 subsets are skipped
      best.finite = false;      // dominates every finite ratio
      best.witness = mask;
      best.hit_parts = hits;
      any = true;
      return;
    }
    const Rat ratio = g / f_val;
    if (!any || ratio > best.ratio) {
      best.ratio = ratio;
      best.witness = mask;
      best.hit_parts = hits;
      any = true;
    }
  }

  void dfs(size_t i) {
    if (!best.finite) return;  // nothing beats an infinite ratio
    if (i == part_elems->size()) {
      consider_leaf();
      return;
    }
    dfs(i + 1);  // part i not hit
    g += (*part_costs)[i];
    hits.push_back(static_cast<int>(i));
    for (int e : (*part_elems)[i]) {
      mask |= type_bit(e);
      inc->push(e);
      dfs(i + 1);
      inc->pop();
      mask &= ~type_bit(e);
    }
    hits.pop_back();
    g -= (*part_costs)[i];
  }
};

StretchReport stretch_with(const ServiceFunctionSpec& f, const Partition& p,
                           const std::vector<Rat>& costs) {
  std::vector<std::vector<int>> elems;
  elems.reserve(p.parts.size());
  for (TypeSet part : p.parts) elems.push_back(set_to_indices(part));

  auto inc = make_inc(f);
  SearchState st;
  st.part_elems = &elems;
  st.part_costs = &costs;
  st.inc = inc.get();
  st.dfs(0);
  if (!st.any && st.best.finite)
    throw Error(ErrorKind::validation, "stretch undefined: every subset has f = g = 0");
  return st.best;
}

std::vector<Rat> recomputed_costs(const ServiceFunctionSpec& f, const Partition& p) {
  if (p.n != f.n()) throw Error(ErrorKind::domain, "partition universe mismatch");
  p.validate();
  std::vector<Rat> costs;
  costs.reserve(p.parts.size());
  for (TypeSet part : p.parts) costs.push_back(f.eval(part));
  return costs;
}

}  // namespace

StretchReport stretch(const ServiceFunctionSpec& f, const Partition& p) {
  if (f.n() > kMaxExplicitN)
    throw Error(ErrorKind::size, "stretch enumeration capped at 24 types");
  return stretch_with(f, p, recomputed_costs(f, p));
}

StretchReport stretch_exhaustive(const ServiceFunctionSpec& f, const Partition& p) {
  if (f.n() > 20)
    throw Error(ErrorKind::size, "exhaustive stretch capped at 20 types");
  const std::vector<Rat> costs = recomputed_costs(f, p);
  const TypeSet all = full_mask(f.n());
  StretchReport best;
  bool any = false;
  for (TypeSet s = 1; s <= all; ++s) {
    Rat g = 0;
    std::vector<int> hits;
    for (size_t i = 0; i < p.parts.size(); ++i)
      if (p.parts[i] & s) {
        g += costs[i];
        hits.push_back(static_cast<int>(i));
      }
    const Rat f_val = f.eval(s);
    if (f_val.is_zero()) {
      if (g.is_zero()) continue;
      best.finite = false;
      best.witness = s;
      best.hit_parts = std::move(hits);
      return best;
    }
    const Rat ratio = g / f_val;
    if (!any || ratio > best.ratio) {
      best.ratio = ratio;
      best.witness = s;
      best.hit_parts = std::move(hits);
      any = true;
    }
  }
  if (!any)
    throw Error(ErrorKind::validation, "stretch undefined: every subset has f = g = 0");
  return best;
}

namespace {

// Stretch of a size-multiset against a symmetric value table. Only the
// multiset matters: the best adversary hits the h most expensive parts with
// one element each.
struct SymmetricMultisetStretch {
  bool finite = true;
  Rat ratio = Rat(1);
};

SymmetricMultisetStretch multiset_stretch(const std::vector<int>& sizes,
                                          const std::vector<Rat>& values) {
  std::vector<Rat> part_vals;
  part_vals.reserve(sizes.size());
  for (int s : sizes) part_vals.push_back(values[s]);
  std::sort(part_vals.begin(), part_vals.end(), [](const Rat& a, const Rat& b) { return b < a; });
  SymmetricMultisetStretch out;
  bool any = false;
  Rat prefix = 0;
  for (size_t h = 1; h <= part_vals.size(); ++h) {
    prefix += part_vals[h - 1];
    const Rat& denom = values[h];
    if (denom.is_zero()) {
      if (prefix.is_zero()) continue;
      out.finite = false;
      return out;
    }
    const Rat ratio = prefix / denom;
    if (!any || ratio > out.ratio) {
      out.ratio = ratio;
      any = true;
    }
  }
  if (!any) throw Error(ErrorKind::validation, "stretch undefined on this table");
  return out;
}

Partition blocks_of_sizes(int n, const std::vector<int>& sizes, const std::vector<Rat>& values) {
  Partition p;
  p.n = n;
  int next = 0;
  for (int s : sizes) {
    TypeSet part = 0;
    for (int j = 0; j < s; ++j) part |= type_bit(next++);
    p.parts.push_back(part);
    p.costs.push_back(values[s]);
  }
  return p;
}

MinStretchResult min_stretch_symmetric(const ServiceFunctionSpec& f) {
  const int n = f.n();
  if (n > 30) throw Error(ErrorKind::size, "symmetric minimum stretch capped at 30 types");
  const auto& values = f.as_symmetric()->values;
  std::vector<int> sizes;
  bool have_finite = false;
  Rat best_val;
  std::vector<int> best_sizes;
  // enumerate integer partitions of n, sizes non-increasing
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      auto ms = multiset_stretch(sizes, values);
      if (!ms.finite) return;
      if (!have_finite || ms.ratio < best_val) {
        best_val = ms.ratio;
        best_sizes = sizes;
        have_finite = true;
      }
      return;
    }
    for (int s = std::min(remaining, cap); s >= 1; --s) {
      sizes.push_back(s);
      self(self, remaining - s, s);
      sizes.pop_back();
    }
  };
  rec(rec, n, n);
  if (!have_finite)
    throw Error(ErrorKind::validation, "every partition has infinite stretch");
  return {best_val, blocks_of_sizes(n, best_sizes, values)};
}

}  // namespace

MinStretchResult min_stretch_over_partitions(const ServiceFunctionSpec& f) {
  if (f.as_symmetric()) return min_stretch_symmetric(f);
  const int n = f.n();
  if (n > 10) throw Error(ErrorKind::size, "general minimum stretch capped at 10 types");

  std::vector<int> assign(n, 0);
  bool have = false;
  Rat best_val;
  Partition best;
  auto evaluate = [&](int parts_used) {
    Partition p;
    p.n = n;
    p.parts.assign(parts_used, 0);
    for (int e = 0; e < n; ++e) p.parts[assign[e]] |= type_bit(e);
    for (TypeSet part : p.parts) p.costs.push_back(f.eval(part));
    StretchReport r = stretch_with(f, p, p.costs);
    if (!r.finite) return;
    if (!have || r.ratio < best_val) {
      best_val = r.ratio;
      best = p;
      have = true;
    }
  };
  // restricted growth strings enumerate set partitions exactly once
  auto rec = [&](auto&& self, int e, int used) -> void {
    if (e == n) {
      evaluate(used);
      return;
    }
    for (int j = 0; j <= used && j < n; ++j) {
      assign[e] = j;
      self(self, e + 1, used + (j == used ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  if (!have) throw Error(ErrorKind::validation, "every partition has infinite stretch");
  return {best_val, best};
}

}  // namespace jrplab
