#include "jrplab/numeric.hpp"

namespace jrplab {

namespace {

// ln 2 truncated/rounded at 18 digits: certified bracket.
const char* kLn2Lo = "693147180559945309";
const char* kLn2Hi = "693147180559945310";
const mpz_class kLn2Scale("1000000000000000000");

// Enclosure of ln(x) for rational x in [1, 2) via 2*atanh((x-1)/(x+1)).
std::pair<Rat, Rat> ln_unit_interval(const Rat& x) {
  if (x == Rat(1)) return {Rat(0), Rat(0)};
  const Rat z = (x - Rat(1)) / (x + Rat(1));  // in (0, 1/3)
  const Rat z2 = z * z;
  Rat term = z, sum = 0;
  const int kTerms = 25;
  for (int k = 0; k < kTerms; ++k) {
    sum += term / Rat(2 * k + 1);
    term *= z2;
  }
  // remainder of 2*sum: bounded by 2 * z^(2K+1) / ((2K+1)(1-z^2))
  const Rat rem = Rat(2) * term / (Rat(2 * kTerms + 1) * (Rat(1) - z2));
  return {Rat(2) * sum, Rat(2) * sum + rem};
}

}  // namespace

std::pair<Rat, Rat> ln_bounds(unsigned long n) {
  if (n == 0) throw Error(ErrorKind::domain, "ln of zero");
  unsigned long a = 0;
  unsigned long pow = 1;
  while (pow * 2 <= n) {
    pow *= 2;
    ++a;
  }
  const Rat x(static_cast<long>(n), pow);  // in [1, 2)
  auto [ulo, uhi] = ln_unit_interval(x);
  const Rat ln2_lo(mpz_class(kLn2Lo), kLn2Scale);
  const Rat ln2_hi(mpz_class(kLn2Hi), kLn2Scale);
  const Rat am(static_cast<long>(a));
  return {am * ln2_lo + ulo, am * ln2_hi + uhi};
}

std::pair<Rat, Rat> sqrt_bounds(const Rat& x, int digits) {
  if (x.sign() < 0) throw Error(ErrorKind::domain, "sqrt of negative value");
  if (x.is_zero()) return {Rat(0), Rat(0)};
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // sqrt(n/d) = sqrt(n*d)/d
  const mpz_class nd = x.num() * x.den();
  const mpz_class lo_i = isqrt_floor(nd * scale * scale);
  return {Rat(lo_i, x.den() * scale), Rat(lo_i + 1, x.den() * scale)};
}

}  // namespace jrplab
