#ifndef JRPLAB_WEIGHTED_HPP
#define JRPLAB_WEIGHTED_HPP

#include <optional>
#include <vector>

#include "jrplab/core.hpp"

namespace jrplab {

// One affine piece sigma + x * delta of a scalar envelope.
struct AffinePiece {
  Rat sigma;
  Rat delta;
};

// Piecewise-affine upper envelope ghat(x) = min_i (sigma_i + x*delta_i) with
// geometrically separated intercepts and slopes: sigma_{i+1} > 2*sigma_i and
// delta_{i+1} < delta_i / 2. Approximates a monotone subadditive scalar
// function within a factor of 8 on {0..W}.
struct AffineEnvelope {
  std::vector<AffinePiece> pieces;  // sorted by increasing sigma
  long total_weight = 1;            // W

  int piece_count() const { return static_cast<int>(pieces.size()); }
  void validate() const;
  Rat eval(const Rat& x) const;
};

// Builds the envelope from samples of g at 0, 1, 2, 4, ..., 2^ceil(log2 W):
// upper concave hull of the doubled sample points, then pruning that enforces
// the sigma/delta gaps while staying within a factor 2 of the hull pointwise.
// The result satisfies g(x) <= ghat(x) <= 8*g(x) for every integer x in
// [0, W] whenever the sampled g is monotone subadditive with g(0) = 0.
AffineEnvelope build_affine_envelope(const std::vector<Rat>& pow2_samples, long w_total);

// sigma_k / delta_{k-1} for 2 <= k <= p; nullopt encodes +infinity when
// delta_{k-1} = 0. Every x at or above the threshold has ghat(x) >= sigma_k.
std::optional<Rat> crossover_threshold(const AffineEnvelope& env, int k);

// Weighted symmetric instance: f(S) = ghat(w(S)) with per-type weights >= 1.
struct WeightedInstance {
  std::vector<Rat> weights;
  AffineEnvelope envelope;

  int n() const { return static_cast<int>(weights.size()); }
  void validate() const;
  Rat weight_of(TypeSet s) const;
  Rat eval(TypeSet s) const { return envelope.eval(weight_of(s)); }
};

// Audit trail of the weighted partitioning run.
struct WeightedPartitionTrace {
  struct Bucket {
    int klass = 1;                // k
    int weight_exp = 0;           // i, types with w in [2^i, 2^(i+1))
    std::vector<TypeSet> nice;    // F_{k,i}: parts of size exactly ceil(sqrt n)
    TypeSet leftover = 0;         // G_{k,i}, possibly empty
  };
  std::vector<TypeSet> class_types;  // X_k, index k-1
  std::vector<TypeSet> z_parts;      // Z_k, index k-1 (0 when empty)
  std::vector<Bucket> buckets;
};

struct WeightedPartitionResult {
  Partition partition;  // tags: Z_k / nice / leftover
  WeightedPartitionTrace trace;
};

// Classifies types by crossover thresholds, splits off the light set Z_k of
// each class, buckets the rest by weight in powers of two, and greedily fills
// parts of size exactly ceil(sqrt(n)) in ascending type order.
WeightedPartitionResult weighted_partition(const WeightedInstance& inst);

// ceil(sqrt(n)) consecutive index blocks, each of size at most ceil(sqrt(n)),
// costed against the supplied symmetric value table (size n+1).
Partition symmetric_partition(int n, const std::vector<Rat>& values);

}  // namespace jrplab

#endif
