#include "jrplab/quad.hpp"

#include <sstream>

namespace jrplab {

namespace {

// sign of c + d*sqrt(M), M square-free positive
int sign_two_term(const Rat& c, const Rat& d, unsigned long M) {
  const int sc = c.sign(), sd = d.sign();
  if (sd == 0) return sc;
  if (sc == 0) return sd;
  if (sc == sd) return sc;
  // opposite signs: compare c^2 vs d^2 * M
  const Rat lhs = c * c;
  const Rat rhs = d * d * Rat(static_cast<long>(M));
  if (lhs == rhs) return 0;
  return lhs > rhs ? sc : sd;
}

// sign of q1*sqrt(m1) + q2*sqrt(m2)
int sign_radical_pair(const Rat& q1, unsigned long m1, const Rat& q2, unsigned long m2) {
  const int s1 = q1.sign(), s2 = q2.sign();
  if (s1 == 0) return s2;
  if (s2 == 0) return s1;
  if (s1 == s2) return s1;
  const Rat a = q1 * q1 * Rat(static_cast<long>(m1));
  const Rat b = q2 * q2 * Rat(static_cast<long>(m2));
  if (a == b) return 0;
  return a > b ? s1 : s2;
}

}  // namespace

std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& n) {
  if (n < 0) throw Error(ErrorKind::domain, "square-free split of negative value");
  if (n > mpz_class("1000000000000"))
    throw Error(ErrorKind::size, "radicand too large for exact normalization");
  mpz_class rem = n, root = 1, sf = 1;
  if (rem == 0) return {0, 1};
  for (mpz_class p = 2; p * p <= rem; ++p) {
    if (rem % p != 0) continue;
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) sf *= p;
  }
  sf *= rem;  // leftover is prime (or 1)
  return {root, sf};
}

Quad::Quad(Rat r, Rat q, unsigned long m) : r_(std::move(r)), q_(std::move(q)), m_(m) {
  if (m_ == 0) throw Error(ErrorKind::domain, "radicand must be positive");
  if (q_.is_zero()) {
    m_ = 1;
  } else if (m_ == 1) {
    r_ += q_;
    q_ = 0;
  } else {
    auto [root, sf] = square_free_split(mpz_class(static_cast<long>(m_)));
    if (root != 1) {
      q_ *= Rat(root, 1);
      m_ = sf.get_ui();
      if (m_ == 1) {
        r_ += q_;
        q_ = 0;
      }
    }
  }
}

Quad Quad::sqrt_of(const Rat& x) {
  if (x.sign() < 0) throw Error(ErrorKind::domain, "sqrt of negative rational");
  if (x.is_zero()) return Quad();
  // sqrt(n/d) = sqrt(n*d) / d
  const mpz_class nd = x.num() * x.den();
  auto [root, sf] = square_free_split(nd);
  Rat coeff(root, x.den());
  if (sf == 1) return Quad(coeff);
  return Quad(Rat(0), coeff, sf.get_ui());
}

Quad Quad::times(const Rat& t) const {
  if (t.is_zero()) return Quad();
  return Quad(r_ * t, q_ * t, m_);
}

Quad Quad::square() const {
  // (r + q*sqrt(m))^2 = r^2 + q^2*m + 2*r*q*sqrt(m)
  return Quad(r_ * r_ + q_ * q_ * Rat(static_cast<long>(m_)), Rat(2) * r_ * q_, m_);
}

int Quad::sign() const {
  return sign_two_term(r_, q_, m_);
}

int Quad::cmp(const Quad& other) const {
  const Rat t = r_ - other.r_;
  // sign of t + q_*sqrt(m_) - other.q_*sqrt(other.m_)
  if (m_ == other.m_) return sign_two_term(t, q_ - other.q_, m_);
  const int s = sign_radical_pair(q_, m_, -other.q_, other.m_);
  const int st = t.sign();
  if (st == 0) return s;
  if (s == 0) return st;
  if (s == st) return s;
  // |t| vs |q1*sqrt(m1) + q2*sqrt(m2)| with q2 = -other.q_:
  // square the radical pair: E + F*sqrt(M)
  const Rat q2 = -other.q_;
  const mpz_class m1(static_cast<long>(m_)), m2(static_cast<long>(other.m_));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  const mpz_class ab = (m1 / g) * (m2 / g);  // square-free by coprimality
  const Rat E = q_ * q_ * Rat(m1, 1) + q2 * q2 * Rat(m2, 1);
  const Rat F = Rat(2) * q_ * q2 * Rat(g, 1);
  // sign of t^2 - (E + F*sqrt(ab)); |t| wins -> st, radical wins -> s
  const int rho = sign_two_term(t * t - E, -F, ab.get_ui());
  if (rho == 0) return 0;
  return rho > 0 ? st : s;
}

std::pair<Rat, Rat> Quad::bounds(int digits) const {
  if (q_.is_zero()) return {r_, r_};
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const mpz_class lo_i = isqrt_floor(mpz_class(static_cast<long>(m_)) * scale * scale);
  const Rat lo_s(lo_i, scale), hi_s(lo_i + 1, scale);
  if (q_.sign() > 0) return {r_ + q_ * lo_s, r_ + q_ * hi_s};
  return {r_ + q_ * hi_s, r_ + q_ * lo_s};
}

double Quad::approx() const {
  auto [lo, hi] = bounds(15);
  return (lo.approx() + hi.approx()) / 2.0;
}

std::string Quad::str() const {
  if (q_.is_zero()) return r_.str();
  std::ostringstream os;
  os << r_.str() << " + " << q_.str() << "*sqrt(" << m_ << ")";
  return os.str();
}

int cmp_ratio_over_sqrt(const Quad& a, unsigned long u, const Quad& b, unsigned long v) {
  if (u == 0 || v == 0) throw Error(ErrorKind::domain, "ratio denominators must be positive");
  if (a.sign() < 0 || b.sign() < 0)
    throw Error(ErrorKind::domain, "ratio comparison requires non-negative costs");
  // a/sqrt(u) vs b/sqrt(v)  <=>  a^2 * v vs b^2 * u   (both sides >= 0)
  const Quad lhs = a.square().times(Rat(static_cast<long>(v)));
  const Quad rhs = b.square().times(Rat(static_cast<long>(u)));
  return lhs.cmp(rhs);
}

}  // namespace jrplab
