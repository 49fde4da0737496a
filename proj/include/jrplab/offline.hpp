#ifndef JRPLAB_OFFLINE_HPP
#define JRPLAB_OFFLINE_HPP

#include <utility>

#include "jrplab/online.hpp"

namespace jrplab {

// Brute-force offline optimum: the best batching of requests, each batch
// served at its latest member arrival (lossless for non-decreasing delays,
// since waiting past the last arrival only adds delay and serving earlier is
// infeasible). Subset DP over served sets; capped at 20 requests.
std::pair<Rat, ServiceSchedule> offline_opt(const ServiceFunctionSpec& f,
                                            const RequestStream& stream);

struct Ratio {
  bool infinite = false;
  Rat value = Rat(1);
};

// alg/opt with the empty-instance convention (0,0) -> 1; a positive cost
// against a zero optimum is flagged infinite.
Ratio competitive_ratio(const Rat& alg_cost, const Rat& opt_cost);

}  // namespace jrplab

#endif
