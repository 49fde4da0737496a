#ifndef JRPLAB_NUMERIC_HPP
#define JRPLAB_NUMERIC_HPP

#include <utility>

#include "jrplab/rat.hpp"

namespace jrplab {

// Certified rational enclosure of ln(n) for integer n >= 1, computed from the
// atanh series after factoring out powers of two. hi - lo stays below 10^-15,
// so callers can budget explicit slack when comparing against it.
std::pair<Rat, Rat> ln_bounds(unsigned long n);

// Certified rational enclosure of sqrt(x) for rational x >= 0.
// Width is at most 2 * 10^-digits.
std::pair<Rat, Rat> sqrt_bounds(const Rat& x, int digits = 12);

}  // namespace jrplab

#endif
