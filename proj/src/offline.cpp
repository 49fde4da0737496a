#include "jrplab/offline.hpp"

#include <algorithm>

namespace jrplab {

namespace {

constexpr int kMaxOfflineRequests = 20;

struct BatchCost {
  Rat cost;
  Rat serve_time;
  TypeSet types;
};

BatchCost batch_cost(const ServiceFunctionSpec& f, const RequestStream& stream,
                     std::uint32_t batch) {
  BatchCost out;
  bool first = true;
  std::uint32_t m = batch;
  while (m) {
    const int idx = std::countr_zero(m);
    m &= m - 1;
    const Request& q = stream.requests[idx];
    out.types |= type_bit(q.type);
    if (first || q.arrival > out.serve_time) out.serve_time = q.arrival;
    first = false;
  }
  out.cost = f.eval(out.types);
  m = batch;
  while (m) {
    const int idx = std::countr_zero(m);
    m &= m - 1;
    out.cost += stream.requests[idx].delay.eval(out.serve_time);
  }
  return out;
}

}  // namespace

std::pair<Rat, ServiceSchedule> offline_opt(const ServiceFunctionSpec& f,
                                            const RequestStream& stream) {
  stream.validate();
  if (stream.n != f.n()) throw Error(ErrorKind::domain, "stream universe mismatch");
  const int nreq = static_cast<int>(stream.requests.size());
  if (nreq > kMaxOfflineRequests)
    throw Error(ErrorKind::size, "offline optimum capped at 20 requests");

  ServiceSchedule sched;
  sched.completion.assign(nreq, std::nullopt);
  sched.delay_cost = Rat(0);
  if (nreq == 0) return {Rat(0), sched};

  const std::uint32_t full = (1u << nreq) - 1;
  std::vector<Rat> dp(static_cast<size_t>(full) + 1, Rat(0));
  std::vector<std::uint32_t> choice(static_cast<size_t>(full) + 1, 0);

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);  // lowest set bit
    const std::uint32_t rest = mask ^ low;
    // every batch containing the earliest-indexed request of the mask
    std::uint32_t sub = rest;
    bool first = true;
    for (;;) {
      const std::uint32_t batch = sub | low;
      const Rat cand = dp[mask ^ batch] + batch_cost(f, stream, batch).cost;
      if (first || cand < dp[mask]) {
        dp[mask] = cand;
        choice[mask] = batch;
        first = false;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }

  // unwind the chosen batches into a schedule
  std::vector<std::uint32_t> batches;
  for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask])
    batches.push_back(choice[mask]);
  for (std::uint32_t batch : batches) {
    BatchCost bc = batch_cost(f, stream, batch);
    Service s;
    s.time = bc.serve_time;
    s.types = bc.types;
    s.part = -1;
    s.cost_g = f.eval(bc.types);
    s.cost_f = s.cost_g;
    std::uint32_t m = batch;
    while (m) {
      const int idx = std::countr_zero(m);
      m &= m - 1;
      s.request_ids.push_back(stream.requests[idx].id);
      sched.completion[idx] = bc.serve_time;
      sched.delay_cost += stream.requests[idx].delay.eval(bc.serve_time);
    }
    sched.services.push_back(std::move(s));
  }
  std::stable_sort(sched.services.begin(), sched.services.end(),
                   [](const Service& a, const Service& b) { return a.time < b.time; });
  return {dp[full], sched};
}

Ratio competitive_ratio(const Rat& alg_cost, const Rat& opt_cost) {
  if (alg_cost.sign() < 0 || opt_cost.sign() < 0)
    throw Error(ErrorKind::domain, "costs must be non-negative");
  Ratio r;
  if (opt_cost.is_zero()) {
    if (alg_cost.is_zero()) return r;  // 1 by convention
    r.infinite = true;
    return r;
  }
  r.value = alg_cost / opt_cost;
  return r;
}

}  // namespace jrplab
