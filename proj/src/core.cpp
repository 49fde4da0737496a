#include "jrplab/core.hpp"

namespace jrplab {

std::vector<int> set_to_indices(TypeSet s) {
  std::vector<int> out;
  for_each_type(s, [&](int i) { out.push_back(i); });
  return out;
}

TypeSet indices_to_set(const std::vector<int>& idx, int n) {
  TypeSet s = 0;
  for (int i : idx) {
    if (i < 0 || i >= n) throw Error(ErrorKind::domain, "type index out of range");
    if (s & type_bit(i)) throw Error(ErrorKind::validation, "duplicate type index");
    s |= type_bit(i);
  }
  return s;
}

std::string part_tag_name(PartTag tag) {
  switch (tag) {
    case PartTag::none: return "none";
    case PartTag::heavy: return "heavy";
    case PartTag::light_i: return "light-I";
    case PartTag::light_ii: return "light-II";
    case PartTag::nice: return "nice";
    case PartTag::leftover: return "leftover";
    case PartTag::z_class: return "Z_k";
    case PartTag::block: return "block";
  }
  return "none";
}

PartTag part_tag_from_name(const std::string& name) {
  if (name == "none") return PartTag::none;
  if (name == "heavy") return PartTag::heavy;
  if (name == "light-I") return PartTag::light_i;
  if (name == "light-II") return PartTag::light_ii;
  if (name == "nice") return PartTag::nice;
  if (name == "leftover") return PartTag::leftover;
  if (name == "Z_k") return PartTag::z_class;
  if (name == "block") return PartTag::block;
  throw Error(ErrorKind::parse, "unknown part tag: " + name);
}

void Partition::validate() const {
  if (n < 1 || n > kMaxMaskTypes)
    throw Error(ErrorKind::validation, "partition universe size out of range");
  if (parts.empty()) throw Error(ErrorKind::validation, "partition needs at least one part");
  if (costs.size() != parts.size())
    throw Error(ErrorKind::validation, "partition part/cost count mismatch");
  if (!tags.empty() && tags.size() != parts.size())
    throw Error(ErrorKind::validation, "partition part/tag count mismatch");
  TypeSet seen = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw Error(ErrorKind::validation, "empty partition part");
    if (parts[i] & ~full_mask(n))
      throw Error(ErrorKind::validation, "partition part outside universe");
    if (parts[i] & seen) throw Error(ErrorKind::validation, "partition parts overlap");
    if (costs[i].sign() < 0) throw Error(ErrorKind::validation, "negative part cost");
    seen |= parts[i];
  }
  if (seen != full_mask(n))
    throw Error(ErrorKind::validation, "partition does not cover the universe");
}

int Partition::part_of(int type) const {
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] & type_bit(type)) return static_cast<int>(i);
  return -1;
}

Rat disjoint_eval(const Partition& p, TypeSet s) {
  Rat total = 0;
  for (size_t i = 0; i < p.parts.size(); ++i)
    if (p.parts[i] & s) total += p.costs[i];
  return total;
}

Partition trivial_partition(int n, const Rat& c) {
  Partition p;
  p.n = n;
  p.parts = {full_mask(n)};
  p.costs = {c};
  return p;
}

}  // namespace jrplab
