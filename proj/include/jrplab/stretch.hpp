#ifndef JRPLAB_STRETCH_HPP
#define JRPLAB_STRETCH_HPP

#include <vector>

#include "jrplab/service_function.hpp"

namespace jrplab {

// Worst-case ratio of the induced disjoint function against f, with the
// subset attaining it. Subsets with f(S) = 0 = g(S) are skipped; f(S) = 0
// with g(S) > 0 makes the stretch infinite.
struct StretchReport {
  bool finite = true;
  Rat ratio = Rat(1);
  TypeSet witness = 0;
  std::vector<int> hit_parts;  // parts intersecting the witness
};

// max over non-empty S of g(S)/f(S), where g is induced by the partition
// with part costs f(S_i) (recomputed here; stored costs are not trusted).
// Enumerates at most one representative per part, which attains the true
// maximum because dropping surplus elements of a hit part keeps g fixed and
// can only shrink f.
StretchReport stretch(const ServiceFunctionSpec& f, const Partition& p);

// Same quantity by full 2^n enumeration; the cross-check for the reduced
// search. Capped harder because it ignores the partition structure.
StretchReport stretch_exhaustive(const ServiceFunctionSpec& f, const Partition& p);

struct MinStretchResult {
  Rat value;
  Partition best;
};

// Minimum stretch over every partition of the universe, part costs f(S_i).
// General specs enumerate all set partitions (n <= 10); symmetric specs only
// need the multiset of part sizes and reach n <= 30.
MinStretchResult min_stretch_over_partitions(const ServiceFunctionSpec& f);

}  // namespace jrplab

#endif
