#ifndef JRPLAB_GENERATORS_HPP
#define JRPLAB_GENERATORS_HPP

#include <cstdint>

#include "jrplab/online.hpp"
#include "jrplab/service_function.hpp"

namespace jrplab {

// Depth-2 adversarial instance: root v0 (free), child v1 of cost 1, and
// leaves v2..vn under v1 of cost w each, where w approximates
// (sqrt(n ln n) - 1)/(n - 1) from below. Each time step brings one request
// per node v1..vn; v1 accumulates delay at slope 2, the leaves at slope eps.
// Closed-form reference costs for the known serving pattern come along so
// the ratio is checkable without simulating large n.
struct TouitouInstance {
  MlaInstance tree;      // node 0 = v0, node 1 = v1, nodes 2..n = leaves
  RequestStream stream;  // tau rounds, requests ordered by round then node
  Rat w_approx;          // rational w, below the exact value
  Rat eps;
  long rounds = 0;

  Rat alg_ref() const;  // rounds * (1 + (n-1) * w)
  Rat opt_ref() const;  // 2 * rounds
};

// precision_digits bounds the one-sided rounding of w: exact - w <= 10^-d.
// eps <= 0 selects the default w/n.
TouitouInstance gen_touitou(int n, long tau, const Rat& eps = Rat(0),
                            int precision_digits = 6);

// Deterministic corpora. All draws go through a fixed 64-bit engine with
// rejection sampling, so identical seeds give identical instances everywhere.
MlaInstance gen_random_mla(int n, std::uint64_t seed, long cost_lo = 0, long cost_hi = 9);
ServiceFunctionSpec gen_random_symmetric(int n, std::uint64_t seed);
ServiceFunctionSpec gen_random_subadditive(int n, std::uint64_t seed);
RequestStream gen_random_stream(int n, int num_requests, std::uint64_t seed);

// Random partition of the universe into at most max_parts nonempty parts.
std::vector<TypeSet> gen_random_partition(int n, int max_parts, std::uint64_t seed);

// Random weighted symmetric instance: integer weights in [1, max_weight] and
// an envelope built from a random monotone subadditive scalar function.
WeightedInstance gen_random_weighted(int n, long max_weight, std::uint64_t seed);

// Random monotone subadditive scalar function sampled on {0..W}: a sum of
// staircase and capped-linear terms. Used to exercise the envelope builder.
std::vector<Rat> gen_random_scalar_subadditive(long w_total, std::uint64_t seed);

// Resamples a scalar table {0..W} at 0, 1, 2, 4, ..., 2^ceil(log2 W) for the
// envelope builder, extending past W with the constant tail (the extension
// stays monotone subadditive).
std::vector<Rat> pow2_samples(const std::vector<Rat>& scalar_table);

}  // namespace jrplab

#endif
