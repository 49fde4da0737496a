#ifndef JRPLAB_RAT_HPP
#define JRPLAB_RAT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jrplab {

// Error taxonomy used across the library. Every throwing path carries a kind
// so callers (and tests) can tell a malformed file from an oversized request.
enum class ErrorKind {
  domain,      // argument outside the operation's domain
  state,       // operation invoked in an invalid state
  size,        // exhaustive enumeration cap exceeded
  parse,       // malformed input file
  validation,  // instance violates a structural invariant
  coverage,    // set system cannot cover a requested element
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exact rational scalar. Always canonical: den > 0, gcd(|num|, den) = 1.
// All cost, weight, time and slope values in the library are Rats; nothing
// correctness-critical ever goes through floating point.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}                      // NOLINT: implicit by design
  Rat(long n, unsigned long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  Rat(const mpz_class& n, const mpz_class& d);

  // Parses the canonical "num/den" form. Rejects non-reduced fractions,
  // zero/negative denominators and anything else that would not round-trip.
  static Rat parse(const std::string& s);

  std::string str() const;  // canonical "num/den"

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double approx() const { return v_.get_d(); }  // display only

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  // floor(num/den) as an integer
  mpz_class floor() const;
  mpz_class ceil() const;

 private:
  mpq_class v_;
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// x <= a*sqrt(n) + b, decided exactly by squaring (requires a >= 0).
bool leq_affine_sqrt(const Rat& x, const Rat& a, unsigned long n, const Rat& b);

// x <= k*sqrt(n)*y for x, y >= 0, decided as x^2 <= k^2 * n * y^2.
bool leq_scaled_sqrt(const Rat& x, unsigned long k, unsigned long n, const Rat& y);

// Integer square-root helpers.
mpz_class isqrt_floor(const mpz_class& x);
mpz_class isqrt_ceil(const mpz_class& x);
bool is_perfect_square(const mpz_class& x);
unsigned long ceil_sqrt_ul(unsigned long n);

}  // namespace jrplab

#endif
