#include "jrplab/online.hpp"

#include <algorithm>

namespace jrplab {

void DelayFn::validate(const Rat& arrival) const {
  if (breakpoints.empty())
    throw Error(ErrorKind::validation, "delay function needs at least one breakpoint");
  if (breakpoints.front().first != arrival)
    throw Error(ErrorKind::validation, "delay function must start at the arrival time");
  if (!breakpoints.front().second.is_zero())
    throw Error(ErrorKind::validation, "delay at arrival must be zero");
  for (size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i].first <= breakpoints[i - 1].first)
      throw Error(ErrorKind::validation, "delay breakpoints must strictly increase in time");
    if (breakpoints[i].second < breakpoints[i - 1].second)
      throw Error(ErrorKind::validation, "delay values must be non-decreasing");
  }
  if (final_slope.sign() < 0)
    throw Error(ErrorKind::validation, "final delay slope must be non-negative");
}

Rat DelayFn::eval(const Rat& t) const {
  if (breakpoints.empty()) throw Error(ErrorKind::validation, "empty delay function");
  if (t < breakpoints.front().first)
    throw Error(ErrorKind::domain, "delay queried before the arrival time");
  // last breakpoint with time <= t
  size_t j = breakpoints.size() - 1;
  for (size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i].first > t) {
      j = i - 1;
      break;
    }
  }
  if (j + 1 < breakpoints.size()) {
    const auto& [t0, v0] = breakpoints[j];
    const auto& [t1, v1] = breakpoints[j + 1];
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
  }
  const auto& [t0, v0] = breakpoints.back();
  return v0 + final_slope * (t - t0);
}

void RequestStream::validate() const {
  if (n < 1 || n > kMaxMaskTypes)
    throw Error(ErrorKind::validation, "request stream universe size out of range");
  for (size_t i = 0; i < requests.size(); ++i) {
    const Request& q = requests[i];
    if (q.id != static_cast<int>(i))
      throw Error(ErrorKind::validation, "request ids must be positional");
    if (q.type < 0 || q.type >= n)
      throw Error(ErrorKind::validation, "request type outside the universe");
    q.delay.validate(q.arrival);
  }
}

Rat RequestStream::last_arrival() const {
  Rat last = 0;
  bool any = false;
  for (const Request& q : requests) {
    if (!any || q.arrival > last) last = q.arrival;
    any = true;
  }
  return last;
}

Rat ServiceSchedule::service_cost_g() const {
  Rat total = 0;
  for (const Service& s : services) total += s.cost_g;
  return total;
}

Rat ServiceSchedule::service_cost_f() const {
  Rat total = 0;
  for (const Service& s : services) total += s.cost_f;
  return total;
}

Rat accumulated_delay(const std::vector<Request>& pending, const Rat& t) {
  Rat total = 0;
  for (const Request& q : pending) {
    if (t < q.arrival) throw Error(ErrorKind::domain, "time precedes a pending arrival");
    total += q.delay.eval(t);
  }
  return total;
}

namespace {

// slope of d on a sub-interval (a, b) that crosses none of its breakpoints
Rat segment_slope(const DelayFn& d, const Rat& a) {
  size_t j = d.breakpoints.size() - 1;
  for (size_t i = 1; i < d.breakpoints.size(); ++i) {
    if (d.breakpoints[i].first > a) {
      j = i - 1;
      break;
    }
  }
  if (j + 1 < d.breakpoints.size()) {
    const auto& [t0, v0] = d.breakpoints[j];
    const auto& [t1, v1] = d.breakpoints[j + 1];
    return (v1 - v0) / (t1 - t0);
  }
  return d.final_slope;
}

struct Engine {
  const Partition& g;
  const RequestStream& stream;
  DelayProbe* probe;
  std::vector<int> type_part;           // type -> part index
  std::vector<std::vector<int>> pending;  // per part, request indices
  std::vector<int> order;               // request indices by (arrival, id)
  size_t arr_pos = 0;
  ServiceSchedule out;

  Engine(const Partition& g_in, const RequestStream& s_in, DelayProbe* p_in)
      : g(g_in), stream(s_in), probe(p_in) {
    type_part.assign(g.n, -1);
    for (int t = 0; t < g.n; ++t) type_part[t] = g.part_of(t);
    pending.resize(g.parts.size());
    order.resize(stream.requests.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return stream.requests[a].arrival < stream.requests[b].arrival;
    });
    out.completion.assign(stream.requests.size(), std::nullopt);
    out.delay_cost = Rat(0);
  }

  void arrivals_at(const Rat& t) {
    while (arr_pos < order.size() && stream.requests[order[arr_pos]].arrival == t) {
      const int idx = order[arr_pos];
      pending[type_part[stream.requests[idx].type]].push_back(idx);
      ++arr_pos;
    }
  }

  Rat accumulator(size_t part, const Rat& t) {
    Rat total = 0;
    for (int idx : pending[part]) total += probe->eval(stream.requests[idx], t);
    return total;
  }

  // earliest t in (now, hi] where the accumulator reaches the part cost
  std::optional<Rat> crossing(size_t part, const Rat& now, const Rat& hi) {
    if (hi <= now) return std::nullopt;
    Rat at_a = accumulator(part, now);
    const Rat& target = g.costs[part];
    if (at_a >= target)
      throw Error(ErrorKind::state, "accumulator already at threshold outside a fire step");
    std::vector<Rat> cuts;
    for (int idx : pending[part])
      for (const auto& [bt, bv] : stream.requests[idx].delay.breakpoints)
        if (bt > now && bt < hi) cuts.push_back(bt);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(hi);
    Rat a = now;
    for (const Rat& b : cuts) {
      Rat slope = 0;
      for (int idx : pending[part]) slope += segment_slope(stream.requests[idx].delay, a);
      const Rat at_b = at_a + slope * (b - a);
      if (at_b >= target) return a + (target - at_a) / slope;
      a = b;
      at_a = at_b;
    }
    return std::nullopt;
  }

  void fire(size_t part, const Rat& t) {
    Service s;
    s.time = t;
    s.part = static_cast<int>(part);
    Rat served_delay = 0;
    for (int idx : pending[part]) {
      const Request& q = stream.requests[idx];
      s.request_ids.push_back(q.id);
      s.types |= type_bit(q.type);
      out.completion[idx] = t;
      served_delay += probe->eval(q, t);
    }
    if (served_delay != g.costs[part])
      throw Error(ErrorKind::state, "fired with accumulated delay != part cost");
    out.delay_cost += served_delay;
    s.cost_g = g.costs[part];
    s.cost_f = g.costs[part];
    out.services.push_back(std::move(s));
    pending[part].clear();
  }

  bool fire_ready(const Rat& now) {
    bool fired = false;
    probe->window(now);
    for (size_t part = 0; part < pending.size(); ++part) {
      if (pending[part].empty()) continue;
      if (accumulator(part, now) >= g.costs[part]) {
        fire(part, now);
        fired = true;
      }
    }
    return fired;
  }

  bool any_pending() const {
    for (const auto& v : pending)
      if (!v.empty()) return true;
    return false;
  }

  ServiceSchedule run(const Rat& horizon) {
    if (order.empty()) return std::move(out);
    const Rat horizon_end = stream.last_arrival() + horizon;
    Rat now = stream.requests[order[0]].arrival;
    arrivals_at(now);
    for (;;) {
      if (fire_ready(now)) continue;
      if (!any_pending()) {
        if (arr_pos == order.size()) break;
        now = stream.requests[order[arr_pos]].arrival;
        arrivals_at(now);
        continue;
      }
      const bool more_arrivals = arr_pos < order.size();
      const Rat hi = more_arrivals ? stream.requests[order[arr_pos]].arrival : horizon_end;
      if (hi <= now) {
        // pending beyond the horizon: report instead of looping forever
        for (const auto& v : pending)
          for (int idx : v) out.unserved.push_back(stream.requests[idx].id);
        std::sort(out.unserved.begin(), out.unserved.end());
        break;
      }
      probe->window(hi);
      std::optional<Rat> fire_at;
      for (size_t part = 0; part < pending.size(); ++part) {
        if (pending[part].empty()) continue;
        auto t = crossing(part, now, hi);
        if (t && (!fire_at || *t < *fire_at)) fire_at = t;
      }
      if (fire_at && (!more_arrivals || *fire_at < hi)) {
        now = *fire_at;  // fire_ready picks it up exactly at the threshold
        continue;
      }
      if (more_arrivals) {
        now = hi;
        arrivals_at(now);  // arrivals first, same-time firings next pass
        continue;
      }
      for (const auto& v : pending)
        for (int idx : v) out.unserved.push_back(stream.requests[idx].id);
      std::sort(out.unserved.begin(), out.unserved.end());
      break;
    }
    return std::move(out);
  }
};

}  // namespace

ServiceSchedule run_disjoint_online(const Partition& g, const RequestStream& stream,
                                    const Rat& horizon, DelayProbe* probe) {
  g.validate();
  stream.validate();
  if (stream.n != g.n) throw Error(ErrorKind::domain, "stream and partition universes differ");
  if (horizon.sign() <= 0) throw Error(ErrorKind::domain, "horizon must be positive");
  DelayProbe direct;
  Engine engine(g, stream, probe ? probe : &direct);
  return engine.run(horizon);
}

ServiceSchedule reduce_and_run(const ServiceFunctionSpec& f, const Partition& p,
                               const RequestStream& stream, const Rat& horizon,
                               DelayProbe* probe) {
  p.validate();
  if (p.n != f.n()) throw Error(ErrorKind::domain, "partition universe mismatch");
  for (size_t i = 0; i < p.parts.size(); ++i)
    if (p.costs[i] != f.eval(p.parts[i]))
      throw Error(ErrorKind::validation, "part cost differs from f on the part");
  ServiceSchedule sched = run_disjoint_online(p, stream, horizon, probe);
  for (Service& s : sched.services) s.cost_f = f.eval(s.types);
  return sched;
}

}  // namespace jrplab
