#ifndef JRPLAB_CORE_HPP
#define JRPLAB_CORE_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "jrplab/rat.hpp"

namespace jrplab {

// Request types are dense indices 0..n-1; sets of types are bitmasks.
using TypeSet = std::uint64_t;

constexpr int kMaxMaskTypes = 64;   // bitmask representation limit
constexpr int kMaxExplicitN = 24;   // 2^n cost table limit

inline TypeSet type_bit(int i) { return TypeSet{1} << i; }

inline TypeSet full_mask(int n) {
  return n >= kMaxMaskTypes ? ~TypeSet{0} : (TypeSet{1} << n) - 1;
}

inline int set_size(TypeSet s) { return std::popcount(s); }

inline int lowest_type(TypeSet s) { return std::countr_zero(s); }

template <typename Fn>
void for_each_type(TypeSet s, Fn&& fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> set_to_indices(TypeSet s);
TypeSet indices_to_set(const std::vector<int>& idx, int n);

// The universe of request types.
struct Universe {
  int n = 0;

  explicit Universe(int n_in) : n(n_in) {
    if (n < 1) throw Error(ErrorKind::domain, "universe needs at least one type");
    if (n > kMaxMaskTypes)
      throw Error(ErrorKind::size, "bitmask universe capped at 64 types");
  }
  TypeSet all() const { return full_mask(n); }
};

// Provenance of a partition part, recorded by whichever algorithm built it.
enum class PartTag { none, heavy, light_i, light_ii, nice, leftover, z_class, block };

std::string part_tag_name(PartTag tag);
PartTag part_tag_from_name(const std::string& name);

// Disjoint cover of the universe with per-part costs. Induces the disjoint
// service function g(S) = sum of costs over parts intersecting S.
struct Partition {
  int n = 0;
  std::vector<TypeSet> parts;
  std::vector<Rat> costs;
  std::vector<PartTag> tags;  // empty, or one tag per part

  int size() const { return static_cast<int>(parts.size()); }
  void validate() const;
  // Index of the part containing type i, or -1.
  int part_of(int type) const;
};

// g(S) induced by the partition.
Rat disjoint_eval(const Partition& p, TypeSet s);

// Single-part partition covering everything, cost c.
Partition trivial_partition(int n, const Rat& c);

}  // namespace jrplab

#endif
