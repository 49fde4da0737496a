#ifndef JRPLAB_QUAD_HPP
#define JRPLAB_QUAD_HPP

#include <utility>

#include "jrplab/rat.hpp"

namespace jrplab {

// Exact number of the form  r + q*sqrt(m)  with r, q rational and m a
// square-free positive integer (m = 1 when q = 0). Two such numbers compare
// exactly even when their radicals differ, via a sign-tracked squaring chain;
// no floating point is involved.
class Quad {
 public:
  Quad() : r_(0), q_(0), m_(1) {}
  Quad(const Rat& rational) : r_(rational), q_(0), m_(1) {}  // NOLINT
  Quad(Rat r, Rat q, unsigned long m);

  // sqrt(x) for rational x >= 0, normalized to q*sqrt(m) with m square-free.
  static Quad sqrt_of(const Rat& x);

  const Rat& rational_part() const { return r_; }
  const Rat& radical_coeff() const { return q_; }
  unsigned long radicand() const { return m_; }
  bool is_rational() const { return q_.is_zero(); }

  int sign() const;
  Quad operator-() const { return Quad(-r_, -q_, m_); }
  Quad plus(const Rat& t) const { return Quad(r_ + t, q_, m_); }
  Quad minus(const Rat& t) const { return Quad(r_ - t, q_, m_); }
  Quad times(const Rat& t) const;
  Quad square() const;  // same radical: (r + q*sqrt(m))^2

  // Three-way comparison: sign of (*this - other). Exact for any radicals.
  int cmp(const Quad& other) const;

  bool operator==(const Quad& o) const { return cmp(o) == 0; }
  bool operator<(const Quad& o) const { return cmp(o) < 0; }
  bool operator<=(const Quad& o) const { return cmp(o) <= 0; }
  bool operator>(const Quad& o) const { return cmp(o) > 0; }
  bool operator>=(const Quad& o) const { return cmp(o) >= 0; }

  // Certified rational enclosure [lo, hi] with hi - lo <= 2 * 10^-digits.
  std::pair<Rat, Rat> bounds(int digits = 12) const;

  double approx() const;  // display only
  std::string str() const;

 private:
  Rat r_, q_;
  unsigned long m_;
};

// Compares a/sqrt(u) vs b/sqrt(v) for a, b >= 0 and positive integers u, v.
// This is the selection rule of the universal set cover greedy.
int cmp_ratio_over_sqrt(const Quad& a, unsigned long u, const Quad& b, unsigned long v);

// Splits n into (a, m) with n = a^2 * m and m square-free.
std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& n);

}  // namespace jrplab

#endif
