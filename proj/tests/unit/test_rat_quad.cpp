#include <doctest.h>

#include <cmath>
#include <random>

#include "jrplab/numeric.hpp"
#include "jrplab/quad.hpp"

using namespace jrplab;

TEST_CASE("rat arithmetic is exact and canonical") {
  Rat a(1, 3), b(1, 6);
  CHECK((a + b) == Rat(1, 2));
  CHECK((a - b) == Rat(1, 6));
  CHECK((a * b) == Rat(1, 18));
  CHECK((a / b) == Rat(2));
  CHECK(Rat(-4, 6) == Rat(-2, 3));
  CHECK(Rat(2, 4).str() == "1/2");
  // integer arithmetic is reproduced at den = 1
  CHECK((Rat(7) + Rat(5)) == Rat(12));
  CHECK(Rat(7).is_integer());
}

TEST_CASE("rat parsing is strict") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("0/1") == Rat(0));
  CHECK_THROWS_AS(Rat::parse("2/4"), Error);   // not reduced
  CHECK_THROWS_AS(Rat::parse("3"), Error);     // missing denominator
  CHECK_THROWS_AS(Rat::parse("3/-4"), Error);  // negative denominator
  CHECK_THROWS_AS(Rat::parse("03/4"), Error);  // leading zero
  CHECK_THROWS_AS(Rat::parse("0/2"), Error);   // zero not canonical
  CHECK_THROWS_AS(Rat::parse("a/b"), Error);
}

TEST_CASE("floor and ceil") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(6, 2).floor() == 3);
}

TEST_CASE("affine sqrt comparison") {
  // 11 <= 4*sqrt(3)*1 is false: 121 > 48
  CHECK_FALSE(leq_scaled_sqrt(Rat(11), 4, 3, Rat(1)));
  // 10 <= 4*sqrt(3)*10 holds
  CHECK(leq_scaled_sqrt(Rat(10), 4, 3, Rat(10)));
  // zero budget covers nothing positive
  CHECK_FALSE(leq_scaled_sqrt(Rat(1), 4, 3, Rat(0)));
  CHECK(leq_scaled_sqrt(Rat(0), 4, 3, Rat(0)));
  // x <= 10*sqrt(4) + 2 = 22
  CHECK(leq_affine_sqrt(Rat(22), Rat(10), 4, Rat(2)));
  CHECK_FALSE(leq_affine_sqrt(Rat(221, 10), Rat(10), 4, Rat(2)));
}

TEST_CASE("integer square roots") {
  CHECK(isqrt_floor(mpz_class(17)) == 4);
  CHECK(isqrt_ceil(mpz_class(17)) == 5);
  CHECK(isqrt_ceil(mpz_class(16)) == 4);
  CHECK(is_perfect_square(mpz_class(49)));
  CHECK_FALSE(is_perfect_square(mpz_class(50)));
  CHECK(ceil_sqrt_ul(5) == 3);
  CHECK(ceil_sqrt_ul(1) == 1);
}

TEST_CASE("quad normalization") {
  Quad q = Quad::sqrt_of(Rat(8));  // 2*sqrt(2)
  CHECK(q.radical_coeff() == Rat(2));
  CHECK(q.radicand() == 2);
  CHECK(Quad::sqrt_of(Rat(9)).is_rational());
  CHECK(Quad::sqrt_of(Rat(9)).rational_part() == Rat(3));
  Quad half = Quad::sqrt_of(Rat(1, 2));  // sqrt(2)/2
  CHECK(half.radical_coeff() == Rat(1, 2));
  CHECK(half.radicand() == 2);
}

TEST_CASE("quad comparison across radicals") {
  // sqrt(2) < sqrt(3)
  CHECK(Quad::sqrt_of(Rat(2)).cmp(Quad::sqrt_of(Rat(3))) < 0);
  // 1 + sqrt(2) > sqrt(5)
  CHECK(Quad::sqrt_of(Rat(2)).plus(Rat(1)).cmp(Quad::sqrt_of(Rat(5))) > 0);
  // sqrt(2) + sqrt(3) vs sqrt(10): 2.414+0.318 no, lhs ~ 3.146, rhs ~ 3.162 -> less
  // encoded as (sqrt(2) - sqrt(10)) vs -sqrt(3)
  Quad lhs = Quad::sqrt_of(Rat(2));
  Quad rhs = Quad::sqrt_of(Rat(10));
  // compare via ratio helper instead: (sqrt 2)/sqrt(1) vs (sqrt 10)/sqrt(3)
  CHECK(cmp_ratio_over_sqrt(lhs, 1, rhs, 3) < 0);   // sqrt(2) < sqrt(10/3)
  CHECK(cmp_ratio_over_sqrt(rhs, 5, lhs, 1) == 0);  // sqrt(10/5) == sqrt(2)
  CHECK(cmp_ratio_over_sqrt(rhs, 2, lhs, 1) > 0);   // sqrt(5) > sqrt(2)
  // exact tie across different surds: sqrt(8)/sqrt(2) == sqrt(4)/sqrt(1)
  CHECK(cmp_ratio_over_sqrt(Quad::sqrt_of(Rat(8)), 2, Quad::sqrt_of(Rat(4)), 1) == 0);
}

TEST_CASE("quad comparisons agree with floating point on random cases") {
  std::mt19937_64 eng(12345);
  for (int iter = 0; iter < 500; ++iter) {
    const long a1 = static_cast<long>(eng() % 40), b1 = static_cast<long>(eng() % 8) + 1;
    const long a2 = static_cast<long>(eng() % 40), b2 = static_cast<long>(eng() % 8) + 1;
    const long m1 = static_cast<long>(eng() % 30) + 1, m2 = static_cast<long>(eng() % 30) + 1;
    Quad x = Quad::sqrt_of(Rat(m1)).times(Rat(b1)).plus(Rat(a1 - 20));
    Quad y = Quad::sqrt_of(Rat(m2)).times(Rat(b2)).plus(Rat(a2 - 20));
    const double xd = (a1 - 20) + b1 * std::sqrt(static_cast<double>(m1));
    const double yd = (a2 - 20) + b2 * std::sqrt(static_cast<double>(m2));
    if (std::abs(xd - yd) < 1e-9) continue;  // too close for the double oracle
    CHECK(x.cmp(y) == (xd < yd ? -1 : 1));
  }
}

TEST_CASE("quad enclosures are certified") {
  Quad q = Quad::sqrt_of(Rat(2)).times(Rat(3)).plus(Rat(1));  // 1 + 3*sqrt(2)
  auto [lo, hi] = q.bounds(12);
  CHECK(lo <= hi);
  CHECK(hi - lo <= Rat(6, 1000000000));  // 2 * coeff * 10^-12 scaled
  const double mid = 1 + 3 * std::sqrt(2.0);
  CHECK(lo.approx() <= mid);
  CHECK(hi.approx() >= mid);
}

TEST_CASE("certified log bounds") {
  auto [lo2, hi2] = ln_bounds(2);
  CHECK(lo2 < hi2);
  CHECK(lo2.approx() == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  auto [lo10, hi10] = ln_bounds(10);
  CHECK(lo10.approx() == doctest::Approx(2.302585092994046).epsilon(1e-12));
  CHECK(hi10 - lo10 < Rat(1, 1000000000));
  auto [lo256, hi256] = ln_bounds(256);
  CHECK(lo256.approx() == doctest::Approx(8 * 0.6931471805599453).epsilon(1e-12));
  CHECK(ln_bounds(1).first == Rat(0));
}

TEST_CASE("certified sqrt bounds") {
  auto [lo, hi] = sqrt_bounds(Rat(2), 12);
  CHECK(lo * lo <= Rat(2));
  CHECK(hi * hi >= Rat(2));
  CHECK(hi - lo <= Rat(2, 1000000000000));
  CHECK(sqrt_bounds(Rat(0)).first == Rat(0));
  CHECK(sqrt_bounds(Rat(9, 4)).first == Rat(3, 2));
}
