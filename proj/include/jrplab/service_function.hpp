#ifndef JRPLAB_SERVICE_FUNCTION_HPP
#define JRPLAB_SERVICE_FUNCTION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jrplab/core.hpp"
#include "jrplab/mla.hpp"
#include "jrplab/weighted.hpp"

namespace jrplab {

enum class FnKind { explicit_table, disjoint, mla_tree, symmetric, weighted_symmetric };

std::string fn_kind_name(FnKind k);

struct ExplicitFn {
  std::vector<Rat> table;  // indexed by subset bitmask, size 2^n
};

struct DisjointFn {
  Partition partition;
};

struct MlaFn {
  MlaInstance tree;
};

struct SymmetricFn {
  std::vector<Rat> values;  // per cardinality, size n+1
};

struct WeightedFn {
  WeightedInstance instance;
};

// A monotone subadditive service function over the universe, in one of five
// concrete representations. Immutable after construction; eval is pure.
class ServiceFunctionSpec {
 public:
  static ServiceFunctionSpec make_explicit(int n, std::vector<Rat> table);
  static ServiceFunctionSpec make_disjoint(Partition partition);
  static ServiceFunctionSpec make_mla(MlaInstance tree);
  static ServiceFunctionSpec make_symmetric(int n, std::vector<Rat> values);
  static ServiceFunctionSpec make_weighted(WeightedInstance instance);

  int n() const { return n_; }
  FnKind kind() const;

  Rat eval(TypeSet s) const;

  const ExplicitFn* as_explicit() const { return std::get_if<ExplicitFn>(&fn_); }
  const DisjointFn* as_disjoint() const { return std::get_if<DisjointFn>(&fn_); }
  const MlaFn* as_mla() const { return std::get_if<MlaFn>(&fn_); }
  const SymmetricFn* as_symmetric() const { return std::get_if<SymmetricFn>(&fn_); }
  const WeightedFn* as_weighted() const { return std::get_if<WeightedFn>(&fn_); }

  bool operator==(const ServiceFunctionSpec& other) const;

 private:
  ServiceFunctionSpec(int n, std::variant<ExplicitFn, DisjointFn, MlaFn, SymmetricFn, WeightedFn> fn)
      : n_(n), fn_(std::move(fn)) {}

  int n_;
  std::variant<ExplicitFn, DisjointFn, MlaFn, SymmetricFn, WeightedFn> fn_;
};

// Outcome of the monotone/subadditive audit. On failure the first violating
// pair is reported together with the three relevant values.
struct ValidationReport {
  bool passed = true;
  std::string detail;
  std::optional<TypeSet> witness_a;
  std::optional<TypeSet> witness_b;
  std::vector<Rat> values;  // f(A), f(B), f(A u B) for subadditivity failures
};

// Brute-force audit for the table variants (explicit capped at n <= 12),
// structural validation for the others. Checks f(empty) = 0, monotonicity
// over all (S, S u {j}) and pairwise subadditivity.
ValidationReport check_monotone_subadditive(const ServiceFunctionSpec& f);

// Symmetric spec with values[s] = ceil(s / sqrt(n)); n must be a perfect square.
ServiceFunctionSpec gen_ceiling_symmetric(int n);

}  // namespace jrplab

#endif
