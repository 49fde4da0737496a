#ifndef JRPLAB_REGRESSION_HPP
#define JRPLAB_REGRESSION_HPP

#include "jrplab/rat.hpp"

namespace jrplab::regression {

// Frozen bounds measured once on the seeded corpora and asserted thereafter.
// The weighted partition guarantee is O(sqrt(n)) with an unstated constant;
// the corpus (seeds 1..40 per n, n in {4, 8, 12}, weights <= 64) peaked at
// stretch^2 / n = 1156/81 (stretch = 34*sqrt(12)/(9*sqrt(12)) at n = 12,
// ratio 34/9), so C^2 = 16 leaves headroom while still catching growth.
inline const Rat kWeightedC2() { return Rat(16); }

// Greedy adversarial ratios sum(c(S_i))/c(S), certified lower bounds from
// one generator run at eps = 10^-6 (they grow like sqrt(k)*log(k)).
inline const Rat kJiaRatioLower4() { return Rat(4); }
inline const Rat kJiaRatioLower16() { return Rat(12); }
inline const Rat kJiaRatioLower64() { return Rat(33); }

}  // namespace jrplab::regression

#endif
