#include "jrplab/rat.hpp"

namespace jrplab {

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
  v_ = mpq_class(n);
  v_ /= mpq_class(d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw Error(ErrorKind::domain, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size())
    throw Error(ErrorKind::parse, "fraction must be \"num/den\": " + s);
  const std::string ns = s.substr(0, slash);
  const std::string ds = s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    if (t[i] == '0' && t.size() > i + 1) return false;  // no leading zeros
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(ns, true) || !digits_ok(ds, false))
    throw Error(ErrorKind::parse, "malformed fraction: " + s);
  mpz_class num(ns), den(ds);
  if (den <= 0) throw Error(ErrorKind::parse, "denominator must be positive: " + s);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1))
    throw Error(ErrorKind::parse, "fraction not in lowest terms: " + s);
  if (num == 0 && den != 1)
    throw Error(ErrorKind::parse, "zero must be serialized as 0/1: " + s);
  return Rat(num, den);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

bool leq_affine_sqrt(const Rat& x, const Rat& a, unsigned long n, const Rat& b) {
  if (a.sign() < 0) throw Error(ErrorKind::domain, "sqrt coefficient must be >= 0");
  const Rat d = x - b;
  if (d.sign() <= 0) return true;
  // d > 0: d <= a*sqrt(n)  <=>  d^2 <= a^2 * n
  return d * d <= a * a * Rat(static_cast<long>(n));
}

bool leq_scaled_sqrt(const Rat& x, unsigned long k, unsigned long n, const Rat& y) {
  if (x.sign() < 0 || y.sign() < 0)
    throw Error(ErrorKind::domain, "squared comparison needs non-negative operands");
  return x * x <= Rat(static_cast<long>(k * k)) * Rat(static_cast<long>(n)) * y * y;
}

mpz_class isqrt_floor(const mpz_class& x) {
  if (x < 0) throw Error(ErrorKind::domain, "isqrt of negative value");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

mpz_class isqrt_ceil(const mpz_class& x) {
  mpz_class r = isqrt_floor(x);
  if (r * r < x) r += 1;
  return r;
}

bool is_perfect_square(const mpz_class& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

unsigned long ceil_sqrt_ul(unsigned long n) {
  return isqrt_ceil(mpz_class(static_cast<long>(n))).get_ui();
}

}  // namespace jrplab
