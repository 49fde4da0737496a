#include "jrplab/service_function.hpp"

namespace jrplab {

std::string fn_kind_name(FnKind k) {
  switch (k) {
    case FnKind::explicit_table: return "explicit";
    case FnKind::disjoint: return "disjoint";
    case FnKind::mla_tree: return "mla";
    case FnKind::symmetric: return "symmetric";
    case FnKind::weighted_symmetric: return "weighted_symmetric";
  }
  return "explicit";
}

ServiceFunctionSpec ServiceFunctionSpec::make_explicit(int n, std::vector<Rat> table) {
  Universe u(n);
  if (n > kMaxExplicitN)
    throw Error(ErrorKind::size, "explicit tables are capped at 24 types");
  if (table.size() != (size_t{1} << n))
    throw Error(ErrorKind::validation, "explicit table must have exactly 2^n entries");
  if (!table[0].is_zero())
    throw Error(ErrorKind::validation, "explicit table must have f(empty) = 0");
  for (const Rat& v : table)
    if (v.sign() < 0) throw Error(ErrorKind::validation, "explicit table has a negative cost");
  return ServiceFunctionSpec(n, ExplicitFn{std::move(table)});
}

ServiceFunctionSpec ServiceFunctionSpec::make_disjoint(Partition partition) {
  partition.validate();
  const int n = partition.n;
  return ServiceFunctionSpec(n, DisjointFn{std::move(partition)});
}

ServiceFunctionSpec ServiceFunctionSpec::make_mla(MlaInstance tree) {
  tree.validate();
  const int n = tree.size();
  if (n > kMaxMaskTypes)
    throw Error(ErrorKind::size, "service functions need at most 64 tree nodes");
  return ServiceFunctionSpec(n, MlaFn{std::move(tree)});
}

ServiceFunctionSpec ServiceFunctionSpec::make_symmetric(int n, std::vector<Rat> values) {
  Universe u(n);
  if (values.size() != static_cast<size_t>(n) + 1)
    throw Error(ErrorKind::validation, "symmetric table must have n+1 entries");
  if (!values[0].is_zero())
    throw Error(ErrorKind::validation, "symmetric table must have f(0) = 0");
  for (const Rat& v : values)
    if (v.sign() < 0) throw Error(ErrorKind::validation, "symmetric table has a negative cost");
  return ServiceFunctionSpec(n, SymmetricFn{std::move(values)});
}

ServiceFunctionSpec ServiceFunctionSpec::make_weighted(WeightedInstance instance) {
  instance.validate();
  if (!instance.envelope.eval(Rat(0)).is_zero())
    throw Error(ErrorKind::validation, "weighted service function needs ghat(0) = 0");
  const int n = instance.n();
  return ServiceFunctionSpec(n, WeightedFn{std::move(instance)});
}

FnKind ServiceFunctionSpec::kind() const {
  if (as_explicit()) return FnKind::explicit_table;
  if (as_disjoint()) return FnKind::disjoint;
  if (as_mla()) return FnKind::mla_tree;
  if (as_symmetric()) return FnKind::symmetric;
  return FnKind::weighted_symmetric;
}

Rat ServiceFunctionSpec::eval(TypeSet s) const {
  if (s & ~full_mask(n_)) throw Error(ErrorKind::domain, "set outside the universe");
  if (const auto* e = as_explicit()) return e->table[s];
  if (const auto* d = as_disjoint()) return disjoint_eval(d->partition, s);
  if (const auto* m = as_mla()) return mla_eval(m->tree, s);
  if (const auto* sym = as_symmetric()) return sym->values[set_size(s)];
  return as_weighted()->instance.eval(s);
}

bool ServiceFunctionSpec::operator==(const ServiceFunctionSpec& other) const {
  if (n_ != other.n_ || kind() != other.kind()) return false;
  switch (kind()) {
    case FnKind::explicit_table:
      return as_explicit()->table == other.as_explicit()->table;
    case FnKind::disjoint: {
      const Partition& a = as_disjoint()->partition;
      const Partition& b = other.as_disjoint()->partition;
      return a.parts == b.parts && a.costs == b.costs && a.tags == b.tags;
    }
    case FnKind::mla_tree: {
      const MlaInstance& a = as_mla()->tree;
      const MlaInstance& b = other.as_mla()->tree;
      return a.parent == b.parent && a.cost == b.cost;
    }
    case FnKind::symmetric:
      return as_symmetric()->values == other.as_symmetric()->values;
    case FnKind::weighted_symmetric: {
      const WeightedInstance& a = as_weighted()->instance;
      const WeightedInstance& b = other.as_weighted()->instance;
      if (a.weights != b.weights) return false;
      if (a.envelope.total_weight != b.envelope.total_weight) return false;
      if (a.envelope.pieces.size() != b.envelope.pieces.size()) return false;
      for (size_t i = 0; i < a.envelope.pieces.size(); ++i)
        if (a.envelope.pieces[i].sigma != b.envelope.pieces[i].sigma ||
            a.envelope.pieces[i].delta != b.envelope.pieces[i].delta)
          return false;
      return true;
    }
  }
  return false;
}

namespace {

ValidationReport fail_subadditive(TypeSet a, TypeSet b, Rat fa, Rat fb, Rat fu) {
  ValidationReport r;
  r.passed = false;
  r.detail = "subadditivity violated: f(A) + f(B) < f(A u B)";
  r.witness_a = a;
  r.witness_b = b;
  r.values = {std::move(fa), std::move(fb), std::move(fu)};
  return r;
}

ValidationReport check_explicit(const ServiceFunctionSpec& f) {
  const int n = f.n();
  if (n > 12)
    throw Error(ErrorKind::size, "exhaustive pair audit is capped at n <= 12");
  const auto& table = f.as_explicit()->table;
  ValidationReport r;
  if (!table[0].is_zero()) {
    r.passed = false;
    r.detail = "f(empty) != 0";
    return r;
  }
  const TypeSet all = full_mask(n);
  for (TypeSet s = 0; s <= all; ++s) {
    for (int j = 0; j < n; ++j) {
      if (s & type_bit(j)) continue;
      if (table[s] > table[s | type_bit(j)]) {
        r.passed = false;
        r.detail = "monotonicity violated on (S, S u {j})";
        r.witness_a = s;
        r.witness_b = s | type_bit(j);
        r.values = {table[s], table[s | type_bit(j)]};
        return r;
      }
    }
  }
  for (TypeSet a = 0; a <= all; ++a)
    for (TypeSet b = a; b <= all; ++b)
      if (table[a] + table[b] < table[a | b])
        return fail_subadditive(a, b, table[a], table[b], table[a | b]);
  r.detail = "explicit table is monotone subadditive";
  return r;
}

ValidationReport check_symmetric(const ServiceFunctionSpec& f) {
  const int n = f.n();
  const auto& v = f.as_symmetric()->values;
  ValidationReport r;
  for (int s = 1; s <= n; ++s) {
    if (v[s] < v[s - 1]) {
      r.passed = false;
      r.detail = "symmetric values are not non-decreasing";
      r.witness_a = static_cast<TypeSet>(s - 1);
      r.witness_b = static_cast<TypeSet>(s);
      r.values = {v[s - 1], v[s]};
      return r;
    }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      const int u = std::min(a + b, n);
      if (v[a] + v[b] < v[u]) {
        r.passed = false;
        r.detail = "symmetric values violate subadditivity";
        r.witness_a = static_cast<TypeSet>(a);
        r.witness_b = static_cast<TypeSet>(b);
        r.values = {v[a], v[b], v[u]};
        return r;
      }
    }
  r.detail = "symmetric values are monotone subadditive";
  return r;
}

}  // namespace

ValidationReport check_monotone_subadditive(const ServiceFunctionSpec& f) {
  switch (f.kind()) {
    case FnKind::explicit_table:
      return check_explicit(f);
    case FnKind::symmetric:
      return check_symmetric(f);
    case FnKind::disjoint: {
      f.as_disjoint()->partition.validate();
      ValidationReport r;
      r.detail = "disjoint service functions are monotone subadditive by structure";
      return r;
    }
    case FnKind::mla_tree: {
      f.as_mla()->tree.validate();
      ValidationReport r;
      r.detail = "tree service functions are monotone subadditive by structure";
      return r;
    }
    case FnKind::weighted_symmetric: {
      f.as_weighted()->instance.validate();
      ValidationReport r;
      r.detail = "affine envelopes through the origin are monotone subadditive";
      return r;
    }
  }
  return {};
}

ServiceFunctionSpec gen_ceiling_symmetric(int n) {
  if (n < 1 || !is_perfect_square(mpz_class(n)))
    throw Error(ErrorKind::domain, "ceiling construction needs a perfect square n");
  const long root = isqrt_floor(mpz_class(n)).get_si();
  std::vector<Rat> values;
  values.reserve(n + 1);
  for (int s = 0; s <= n; ++s) values.push_back(Rat((s + root - 1) / root));
  return ServiceFunctionSpec::make_symmetric(n, std::move(values));
}

}  // namespace jrplab
