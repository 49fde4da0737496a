#include "jrplab/weighted.hpp"

#include <algorithm>

namespace jrplab {

namespace {

long ceil_log2(long w) {
  long l = 0, p = 1;
  while (p < w) {
    p *= 2;
    ++l;
  }
  return l;
}

// floor(log2(w)) for rational w >= 1
int floor_log2_rat(const Rat& w) {
  int i = 0;
  mpz_class shifted = w.den();
  while (true) {
    mpz_class next = shifted * 2;
    if (w.num() < next) return i;
    shifted = next;
    ++i;
  }
}

struct HullPoint {
  Rat x, y;
};

// Upper hull of points sorted by strictly increasing x (monotone chain).
std::vector<HullPoint> upper_hull(std::vector<HullPoint> pts) {
  std::vector<HullPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep turning clockwise: drop b when it lies on or below chord a-p
      const Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      if (cross.sign() >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

void AffineEnvelope::validate() const {
  if (total_weight < 1) throw Error(ErrorKind::validation, "envelope needs W >= 1");
  if (pieces.empty()) throw Error(ErrorKind::validation, "envelope needs at least one piece");
  if (static_cast<long>(pieces.size()) > ceil_log2(total_weight) + 1)
    throw Error(ErrorKind::validation, "envelope has more than ceil(log2 W) + 1 pieces");
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].sigma.sign() < 0 || pieces[i].delta.sign() < 0)
      throw Error(ErrorKind::validation, "envelope coefficients must be non-negative");
    if (i > 0) {
      if (pieces[i].sigma <= Rat(2) * pieces[i - 1].sigma)
        throw Error(ErrorKind::validation, "envelope intercepts must more than double");
      if (Rat(2) * pieces[i].delta >= pieces[i - 1].delta)
        throw Error(ErrorKind::validation, "envelope slopes must more than halve");
    }
  }
}

Rat AffineEnvelope::eval(const Rat& x) const {
  if (x.sign() < 0) throw Error(ErrorKind::domain, "envelope evaluated at negative weight");
  if (pieces.empty()) throw Error(ErrorKind::validation, "empty envelope");
  Rat best = pieces[0].sigma + x * pieces[0].delta;
  for (size_t i = 1; i < pieces.size(); ++i)
    best = min(best, pieces[i].sigma + x * pieces[i].delta);
  return best;
}

AffineEnvelope build_affine_envelope(const std::vector<Rat>& samples, long w_total) {
  if (w_total < 1) throw Error(ErrorKind::domain, "total weight must be at least 1");
  const long levels = ceil_log2(w_total);  // samples at 0, 1, 2, ..., 2^levels
  if (static_cast<long>(samples.size()) != levels + 2)
    throw Error(ErrorKind::validation, "expected samples at 0, 1, 2, 4, ..., 2^ceil(log2 W)");
  if (!samples[0].is_zero())
    throw Error(ErrorKind::validation, "sampled function must have g(0) = 0");
  for (size_t j = 1; j < samples.size(); ++j) {
    if (samples[j].sign() < 0 || samples[j] < samples[j - 1])
      throw Error(ErrorKind::validation, "sampled function must be monotone non-negative");
    if (j >= 2 && samples[j] > Rat(2) * samples[j - 1])
      throw Error(ErrorKind::validation, "samples violate subadditive doubling g(2x) <= 2 g(x)");
  }

  // Hull of the doubled samples. Doubling buys the headroom that keeps the
  // envelope above g at the integers between consecutive powers of two.
  std::vector<HullPoint> pts;
  pts.push_back({Rat(0), Rat(0)});
  long x = 1;
  for (size_t j = 1; j < samples.size(); ++j) {
    pts.push_back({Rat(x), Rat(2) * samples[j]});
    x *= 2;
  }
  auto hull = upper_hull(std::move(pts));

  // Hull edges as affine pieces, intercepts increasing, slopes decreasing.
  std::vector<AffinePiece> raw;
  if (hull.size() == 1) raw.push_back({hull[0].y, Rat(0)});
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const Rat slope = (hull[i + 1].y - hull[i].y) / (hull[i + 1].x - hull[i].x);
    raw.push_back({hull[i].y - slope * hull[i].x, slope});
  }

  // Gap-enforcing prune. A candidate whose slope has not halved is dominated
  // within factor 2 by the last kept piece; a candidate that halves the slope
  // but misses the intercept gap is kept with its intercept lifted into the
  // gap (the lift is at most the candidate's own intercept, so the pointwise
  // loss stays within factor 2).
  AffineEnvelope env;
  env.total_weight = w_total;
  for (const auto& piece : raw) {
    if (env.pieces.empty()) {
      env.pieces.push_back(piece);
      continue;
    }
    const AffinePiece& last = env.pieces.back();
    if (Rat(2) * piece.delta >= last.delta) continue;
    if (piece.sigma > Rat(2) * last.sigma) {
      env.pieces.push_back(piece);
    } else {
      env.pieces.push_back({last.sigma + piece.sigma, piece.delta});
    }
  }
  env.validate();
  return env;
}

std::optional<Rat> crossover_threshold(const AffineEnvelope& env, int k) {
  if (k < 2 || k > env.piece_count())
    throw Error(ErrorKind::domain, "crossover index must satisfy 2 <= k <= p");
  const Rat& delta_prev = env.pieces[k - 2].delta;
  if (delta_prev.is_zero()) return std::nullopt;
  return env.pieces[k - 1].sigma / delta_prev;
}

void WeightedInstance::validate() const {
  if (weights.empty()) throw Error(ErrorKind::validation, "weighted instance needs types");
  if (n() > kMaxMaskTypes) throw Error(ErrorKind::size, "weighted instance capped at 64 types");
  for (const Rat& w : weights)
    if (w < Rat(1))
      throw Error(ErrorKind::validation, "weights must be >= 1 (rescale the instance)");
  envelope.validate();
}

Rat WeightedInstance::weight_of(TypeSet s) const {
  if (s & ~full_mask(n())) throw Error(ErrorKind::domain, "type index out of range");
  Rat total = 0;
  for_each_type(s, [&](int i) { total += weights[i]; });
  return total;
}

WeightedPartitionResult weighted_partition(const WeightedInstance& inst) {
  inst.validate();
  const int n = inst.n();
  const int p = inst.envelope.piece_count();
  const unsigned long nn = static_cast<unsigned long>(n);
  const long root = static_cast<long>(ceil_sqrt_ul(nn));  // ceil(sqrt(n))

  WeightedPartitionResult res;
  res.partition.n = n;
  auto& trace = res.trace;
  trace.class_types.assign(p, 0);
  trace.z_parts.assign(p, 0);

  // class of j: largest k >= 2 with w_j * delta_{k-1} >= sigma_k, else 1
  for (int j = 0; j < n; ++j) {
    int klass = 1;
    for (int k = 2; k <= p; ++k) {
      const Rat& sigma_k = inst.envelope.pieces[k - 1].sigma;
      const Rat& delta_prev = inst.envelope.pieces[k - 2].delta;
      if (inst.weights[j] * delta_prev >= sigma_k) klass = k;
    }
    trace.class_types[klass - 1] |= type_bit(j);
  }

  auto emit = [&](TypeSet part, PartTag tag) {
    res.partition.parts.push_back(part);
    res.partition.costs.push_back(inst.eval(part));
    res.partition.tags.push_back(tag);
  };

  for (int k = 1; k <= p; ++k) {
    const TypeSet xk = trace.class_types[k - 1];
    if (xk == 0) continue;
    const Rat& sigma_k = inst.envelope.pieces[k - 1].sigma;
    const Rat& delta_k = inst.envelope.pieces[k - 1].delta;

    // light set: w_j * delta_k <= sigma_k / sqrt(n), squared comparison
    TypeSet zk = 0;
    for_each_type(xk, [&](int j) {
      const Rat lhs = inst.weights[j] * delta_k;
      if (Rat(static_cast<long>(nn)) * lhs * lhs <= sigma_k * sigma_k) zk |= type_bit(j);
    });
    trace.z_parts[k - 1] = zk;
    if (zk != 0) emit(zk, PartTag::z_class);

    // remaining types bucketed by floor(log2 w), ascending exponent
    std::vector<std::pair<int, int>> exp_type;  // (exponent, type)
    for_each_type(xk & ~zk, [&](int j) {
      exp_type.emplace_back(floor_log2_rat(inst.weights[j]), j);
    });
    std::sort(exp_type.begin(), exp_type.end());
    size_t a = 0;
    while (a < exp_type.size()) {
      size_t b = a;
      while (b < exp_type.size() && exp_type[b].first == exp_type[a].first) ++b;
      WeightedPartitionTrace::Bucket bucket;
      bucket.klass = k;
      bucket.weight_exp = exp_type[a].first;
      TypeSet current = 0;
      int count = 0;
      for (size_t t = a; t < b; ++t) {  // ascending type index within bucket
        current |= type_bit(exp_type[t].second);
        if (++count == root) {
          bucket.nice.push_back(current);
          emit(current, PartTag::nice);
          current = 0;
          count = 0;
        }
      }
      if (current != 0) {
        bucket.leftover = current;
        emit(current, PartTag::leftover);
      }
      trace.buckets.push_back(std::move(bucket));
      a = b;
    }
  }

  res.partition.validate();
  return res;
}

Partition symmetric_partition(int n, const std::vector<Rat>& values) {
  if (n < 1) throw Error(ErrorKind::domain, "universe needs at least one type");
  if (n > kMaxMaskTypes) throw Error(ErrorKind::size, "partition capped at 64 types");
  if (static_cast<int>(values.size()) != n + 1)
    throw Error(ErrorKind::validation, "symmetric value table must have n+1 entries");
  const int k = static_cast<int>(ceil_sqrt_ul(static_cast<unsigned long>(n)));
  const int base = n / k, rem = n % k;
  Partition p;
  p.n = n;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    const int sz = base + (i < rem ? 1 : 0);
    TypeSet part = 0;
    for (int j = 0; j < sz; ++j) part |= type_bit(next++);
    p.parts.push_back(part);
    p.costs.push_back(values[sz]);
    p.tags.push_back(PartTag::block);
  }
  p.validate();
  return p;
}

}  // namespace jrplab
