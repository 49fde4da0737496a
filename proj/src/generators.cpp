#include "jrplab/generators.hpp"

#include <algorithm>
#include <random>

#include "jrplab/numeric.hpp"
#include "jrplab/weighted.hpp"

namespace jrplab {

namespace {

// Unbiased bounded draw; mt19937_64 output is pinned by the standard, and
// rejection sampling keeps the mapping platform-independent.
std::uint64_t draw_below(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % bound;
}

long draw_range(std::mt19937_64& eng, long lo, long hi) {
  return lo + static_cast<long>(draw_below(eng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Rat TouitouInstance::alg_ref() const {
  const long n = tree.size() - 1;
  return Rat(rounds) * (Rat(1) + Rat(n - 1) * w_approx);
}

Rat TouitouInstance::opt_ref() const { return Rat(2) * Rat(rounds); }

TouitouInstance gen_touitou(int n, long tau, const Rat& eps_in, int precision_digits) {
  if (n < 3) throw Error(ErrorKind::domain, "instance needs n >= 3");
  if (tau < 1) throw Error(ErrorKind::domain, "instance needs at least one round");
  if (precision_digits < 1 || precision_digits > 15)
    throw Error(ErrorKind::domain, "precision digits must be in [1, 15]");

  TouitouInstance out;
  out.rounds = tau;

  // w from below: lower bounds all the way through keep the closed-form
  // reference a valid lower bound on the adversarial ratio.
  const Rat ln_lo = ln_bounds(static_cast<unsigned long>(n)).first;
  const Rat sqrt_lo = sqrt_bounds(Rat(n) * ln_lo, precision_digits + 3).first;
  out.w_approx = (sqrt_lo - Rat(1)) / Rat(n - 1);
  if (out.w_approx.sign() <= 0)
    throw Error(ErrorKind::domain, "w is not positive at this n");
  out.eps = eps_in.sign() > 0 ? eps_in : out.w_approx / Rat(n);

  out.tree.parent.assign(n + 1, 1);
  out.tree.parent[0] = -1;
  out.tree.parent[1] = 0;
  out.tree.cost.assign(n + 1, out.w_approx);
  out.tree.cost[0] = Rat(0);
  out.tree.cost[1] = Rat(1);
  out.tree.validate();

  out.stream.n = n + 1;
  int id = 0;
  for (long t = 1; t <= tau; ++t) {
    for (int node = 1; node <= n; ++node) {
      Request q;
      q.id = id++;
      q.type = node;
      q.arrival = Rat(t);
      q.delay.breakpoints = {{Rat(t), Rat(0)}};
      q.delay.final_slope = node == 1 ? Rat(2) : out.eps;
      out.stream.requests.push_back(std::move(q));
    }
  }
  out.stream.validate();
  return out;
}

MlaInstance gen_random_mla(int n, std::uint64_t seed, long cost_lo, long cost_hi) {
  if (n < 1) throw Error(ErrorKind::domain, "tree needs at least one node");
  if (cost_lo < 0 || cost_hi < cost_lo) throw Error(ErrorKind::domain, "bad cost range");
  std::mt19937_64 eng(seed);
  MlaInstance t;
  t.parent.assign(n, -1);
  t.cost.assign(n, Rat(0));
  for (int v = 1; v < n; ++v) t.parent[v] = static_cast<int>(draw_below(eng, v));
  for (int v = 0; v < n; ++v) t.cost[v] = Rat(draw_range(eng, cost_lo, cost_hi));
  t.validate();
  return t;
}

ServiceFunctionSpec gen_random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  // non-increasing positive increments make the values concave, so subadditive
  std::vector<long> inc(n);
  for (long& x : inc) x = draw_range(eng, 1, 8);
  std::sort(inc.rbegin(), inc.rend());
  std::vector<Rat> values{Rat(0)};
  Rat run = 0;
  for (long x : inc) {
    run += Rat(x);
    values.push_back(run);
  }
  return ServiceFunctionSpec::make_symmetric(n, std::move(values));
}

ServiceFunctionSpec gen_random_subadditive(int n, std::uint64_t seed) {
  if (n > 20) throw Error(ErrorKind::size, "random explicit tables capped at 20 types");
  std::mt19937_64 eng(seed);
  // max of a few additive functions (an XOS function, hence subadditive)
  const int clauses = 3;
  std::vector<std::vector<Rat>> coeff(clauses, std::vector<Rat>(n));
  for (auto& row : coeff)
    for (Rat& c : row) c = Rat(draw_range(eng, 1, 9));
  const TypeSet all = full_mask(n);
  std::vector<Rat> table(size_t{1} << n, Rat(0));
  for (TypeSet s = 1; s <= all; ++s) {
    Rat best = 0;
    for (int j = 0; j < clauses; ++j) {
      Rat sum = 0;
      for_each_type(s, [&](int i) { sum += coeff[j][i]; });
      if (j == 0 || sum > best) best = sum;
    }
    table[s] = best;
  }
  return ServiceFunctionSpec::make_explicit(n, std::move(table));
}

RequestStream gen_random_stream(int n, int num_requests, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::domain, "stream needs a universe");
  std::mt19937_64 eng(seed);
  RequestStream stream;
  stream.n = n;
  for (int i = 0; i < num_requests; ++i) {
    Request q;
    q.id = i;
    q.type = static_cast<int>(draw_below(eng, n));
    q.arrival = Rat(draw_range(eng, 0, 4 * num_requests), 2);
    q.delay.breakpoints.emplace_back(q.arrival, Rat(0));
    const int extra = static_cast<int>(draw_below(eng, 3));  // up to 2 more breakpoints
    Rat t = q.arrival, v = Rat(0);
    for (int b = 0; b < extra; ++b) {
      t += Rat(draw_range(eng, 1, 6), 2);
      v += Rat(draw_range(eng, 0, 6), 2);
      q.delay.breakpoints.emplace_back(t, v);
    }
    q.delay.final_slope = Rat(draw_range(eng, 1, 6), 2);  // always keeps growing
    stream.requests.push_back(std::move(q));
  }
  std::stable_sort(stream.requests.begin(), stream.requests.end(),
                   [](const Request& a, const Request& b) { return a.arrival < b.arrival; });
  for (int i = 0; i < num_requests; ++i) stream.requests[i].id = i;
  stream.validate();
  return stream;
}

std::vector<TypeSet> gen_random_partition(int n, int max_parts, std::uint64_t seed) {
  if (n < 1 || max_parts < 1) throw Error(ErrorKind::domain, "bad partition shape");
  std::mt19937_64 eng(seed);
  const int k = 1 + static_cast<int>(draw_below(eng, std::min(max_parts, n)));
  std::vector<TypeSet> parts(k, 0);
  // one type per part first so none is empty, the rest uniform
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[draw_below(eng, i + 1)]);
  for (int i = 0; i < n; ++i) {
    const int part = i < k ? i : static_cast<int>(draw_below(eng, k));
    parts[part] |= type_bit(order[i]);
  }
  return parts;
}

std::vector<Rat> gen_random_scalar_subadditive(long w_total, std::uint64_t seed) {
  if (w_total < 1) throw Error(ErrorKind::domain, "scalar domain needs W >= 1");
  std::mt19937_64 eng(seed);
  std::vector<Rat> table(w_total + 1, Rat(0));
  // sum of staircases and capped-linear terms, each subadditive and monotone
  const int stairs = 1 + static_cast<int>(draw_below(eng, 2));
  for (int s = 0; s < stairs; ++s) {
    const long step = draw_range(eng, 1, std::max<long>(1, w_total / 2));
    const long price = draw_range(eng, 1, 8);
    for (long x = 1; x <= w_total; ++x)
      table[x] += Rat(price) * Rat((x + step - 1) / step);
  }
  const int caps = static_cast<int>(draw_below(eng, 3));
  for (int c = 0; c < caps; ++c) {
    const long slope = draw_range(eng, 1, 6);
    const long cap = draw_range(eng, 1, 8) * std::max<long>(1, w_total / 4);
    for (long x = 1; x <= w_total; ++x) {
      const Rat lin = Rat(slope) * Rat(x);
      table[x] += lin < Rat(cap) ? lin : Rat(cap);
    }
  }
  return table;
}

std::vector<Rat> pow2_samples(const std::vector<Rat>& scalar_table) {
  if (scalar_table.empty()) throw Error(ErrorKind::domain, "empty scalar table");
  const long total = static_cast<long>(scalar_table.size()) - 1;
  long levels = 0, p = 1;
  while (p < total) {
    p *= 2;
    ++levels;
  }
  std::vector<Rat> samples{scalar_table[0]};
  long x = 1;
  for (long j = 0; j <= levels; ++j) {
    samples.push_back(scalar_table[std::min(x, total)]);
    x *= 2;
  }
  return samples;
}

WeightedInstance gen_random_weighted(int n, long max_weight, std::uint64_t seed) {
  if (n < 1 || max_weight < 1) throw Error(ErrorKind::domain, "bad weighted shape");
  std::mt19937_64 eng(seed);
  WeightedInstance inst;
  long total = 0;
  for (int i = 0; i < n; ++i) {
    const long w = draw_range(eng, 1, max_weight);
    inst.weights.push_back(Rat(w));
    total += w;
  }
  const std::vector<Rat> scalar = gen_random_scalar_subadditive(total, eng());
  inst.envelope = build_affine_envelope(pow2_samples(scalar), total);
  inst.validate();
  return inst;
}

}  // namespace jrplab
