#ifndef JRPLAB_ONLINE_HPP
#define JRPLAB_ONLINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "jrplab/service_function.hpp"

namespace jrplab {

// Piecewise-linear non-decreasing delay function. Breakpoints start at the
// arrival with value 0; the final slope extends the last segment forever.
struct DelayFn {
  std::vector<std::pair<Rat, Rat>> breakpoints;  // (time, value)
  Rat final_slope = Rat(0);

  void validate(const Rat& arrival) const;
  Rat eval(const Rat& t) const;  // t must not precede the first breakpoint
  // True when the delay stops growing eventually; such a request can starve.
  bool eventually_constant() const { return final_slope.is_zero(); }

  bool operator==(const DelayFn&) const = default;
};

struct Request {
  int id = 0;
  int type = 0;
  Rat arrival;
  DelayFn delay;

  bool operator==(const Request&) const = default;
};

struct RequestStream {
  int n = 0;  // universe size
  std::vector<Request> requests;

  void validate() const;
  Rat last_arrival() const;

  bool operator==(const RequestStream&) const = default;
};

struct Service {
  Rat time;
  std::vector<int> request_ids;
  TypeSet types = 0;
  int part = -1;   // firing part, -1 for offline schedules
  Rat cost_g;      // charge under the disjoint function
  Rat cost_f;      // charge under the original function (reduction runs)
};

struct ServiceSchedule {
  std::vector<Service> services;
  std::vector<std::optional<Rat>> completion;  // per request id
  std::vector<int> unserved;                   // starved request ids
  Rat delay_cost;

  Rat service_cost_g() const;
  Rat service_cost_f() const;
  Rat total_g() const { return service_cost_g() + delay_cost; }
  Rat total_f() const { return service_cost_f() + delay_cost; }
};

// Observation hook for the engine's delay reads. window() announces the
// upper end of the time range about to be observed; tests wrap this to
// assert that decisions never look past the next external event.
struct DelayProbe {
  virtual ~DelayProbe() = default;
  virtual void window(const Rat& upper) { (void)upper; }
  virtual Rat eval(const Request& q, const Rat& t) { return q.delay.eval(t); }
};

// Sum of d_q(t) over the given requests; t must be at or after every arrival.
Rat accumulated_delay(const std::vector<Request>& pending, const Rat& t);

// Runs the disjoint-counter policy: part i fires exactly when its pending
// requests have accumulated delay c_i, serving all of them. Simulation stops
// at the last arrival plus the horizon; requests still pending then are
// reported unserved instead of looping forever.
ServiceSchedule run_disjoint_online(const Partition& g, const RequestStream& stream,
                                    const Rat& horizon = Rat(1048576),
                                    DelayProbe* probe = nullptr);

// Reduction wrapper: simulates under the disjoint function induced by p
// (part costs must equal f(S_i)), then re-prices every fired service under f.
// Both cost ledgers are kept on the schedule.
ServiceSchedule reduce_and_run(const ServiceFunctionSpec& f, const Partition& p,
                               const RequestStream& stream,
                               const Rat& horizon = Rat(1048576),
                               DelayProbe* probe = nullptr);

}  // namespace jrplab

#endif
