#include <random>

#include "doctest.h"
#include "latdeg/asymptotics.hpp"
#include "latdeg/counting.hpp"
#include "mp.hpp"

using namespace latdeg;

namespace {

Rational q(const char* text) { return parse_rational(text); }

bool overlap(const CertifiedInterval& a, const CertifiedInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

// arctan(1/x) enclosed by consecutive partial sums of its alternating series.
std::pair<Rational, Rational> arctan_inverse(long x, int terms) {
  Rational sum = 0, prev = 0;
  BigInt power = x;
  for (int k = 0; k <= terms; ++k) {
    prev = sum;
    const Rational t = make_rational(1, BigInt(2 * k + 1) * power);
    sum += (k % 2 == 0) ? t : Rational(-t);
    power *= x * x;
  }
  return {std::min(prev, sum), std::max(prev, sum)};
}

Rational choose2(const Rational& x) { return x * (x - 1) / 2; }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("interval arithmetic encloses pointwise results") {
  std::mt19937_64 rng(99);
  const auto rnd = [&] { return make_rational(big_from_i64(static_cast<std::int64_t>(rng() % 2001) - 1000), big_from_i64(1 + rng() % 97)); };
  for (int i = 0; i < 300; ++i) {
    Rational a0 = rnd(), a1 = rnd(), b0 = rnd(), b1 = rnd();
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const CertifiedInterval A(a0, a1), B(b0, b1);
    for (int j = 0; j < 5; ++j) {
      const Rational x = a0 + (a1 - a0) * Rational(j, 4), y = b0 + (b1 - b0) * Rational((j * 3) % 5, 4);
      REQUIRE((A + B).contains(x + y));
      REQUIRE((A - B).contains(x - y));
      REQUIRE((A * B).contains(x * y));
      if (B.lo > 0 || B.hi < 0) REQUIRE((A / B).contains(x / y));
    }
    const CertifiedInterval r = A.rounded(8);
    REQUIRE(r.contains(A));
  }
  CHECK_THROWS_AS(CertifiedInterval(1, 2) / CertifiedInterval(-1, 1), std::domain_error);
  CHECK_THROWS(CertifiedInterval(2, 1));
}

TEST_CASE("zeta examples") {
  const auto z2 = zeta_interval(2, 1);
  CHECK(z2.lo == Rational(3, 2));
  CHECK(z2.hi == 2);
  const auto z3 = zeta_interval(3, 1000);
  // quoted digits are truncated, so compare against their rounding band
  CHECK(overlap(z3, CertifiedInterval(q("1.20205685"), q("1.20205695"))));
  CHECK(z3.width() <= q("1/1000000"));
  CHECK(z3.contains(mp::zeta(3)));
  const auto z = zeta_interval(2, 10000);
  CHECK(z.contains(mp::zeta(2)));
  CHECK(overlap(z, CertifiedInterval(q("1.64493405"), q("1.64493415"))));
  CHECK_THROWS_WITH(zeta_interval(1, 10), doctest::Contains("divergent"));
}

TEST_CASE("zeta encloses the high-precision value") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const unsigned s = 2 + rng() % 11;
    const std::uint64_t K = 1 + rng() % 3000;
    CAPTURE(s);
    CAPTURE(K);
    CHECK(zeta_interval(s, K).contains(mp::zeta(s)));
  }
}

TEST_CASE("collinear constant examples") {
  const auto c4 = collinear_leading_constant(4);
  CHECK(abs(c4.midpoint() - q("3.8316")) < q("0.00005"));
  CHECK(c4.contains(mp::collinear_constant(4)));
  const auto c5 = collinear_leading_constant(5);
  CHECK(abs(c5.midpoint() - q("2.9617")) < q("0.00005"));
  CHECK(c5.contains(mp::collinear_constant(5)));
  CHECK(abs(collinear_leading_constant(1000).midpoint() - 2) < q("0.01"));
  CHECK_THROWS_WITH(collinear_leading_constant(3), doctest::Contains("formula requires r > 3"));
}

TEST_CASE("collinear constant over 4! matches the circle-hypergraph line term") {
  const CertifiedInterval lhs = collinear_leading_constant(4, 10000) / CertifiedInterval::point(24);
  const CertifiedInterval pi = pi_interval();
  const CertifiedInterval rhs =
      CertifiedInterval::point(Rational(7, 360)) * pi * pi / zeta_interval(3, 10000);
  CHECK(overlap(lhs, rhs));
  CHECK(lhs.contains(mp::collinear_quadruple_density()));
  CHECK(rhs.contains(mp::collinear_quadruple_density()));
}

TEST_CASE("pi enclosure agrees with two independent series") {
  const CertifiedInterval pi = pi_interval();
  CHECK(pi.width() <= q("1/10000000000000000000000000000000000000000000000000"));
  // 16 atan(1/5) - 4 atan(1/239)
  const auto [a5, b5] = arctan_inverse(5, 45);
  const auto [a239, b239] = arctan_inverse(239, 15);
  const CertifiedInterval machin(16 * a5 - 4 * b239, 16 * b5 - 4 * a239);
  // 4 atan(1/2) + 4 atan(1/3)
  const auto [a2, b2] = arctan_inverse(2, 100);
  const auto [a3, b3] = arctan_inverse(3, 70);
  const CertifiedInterval euler(4 * (a2 + a3), 4 * (b2 + b3));
  CHECK(machin.width() < q("1/10000000000000000000000000000000000000000000000000000000"));
  CHECK(euler.width() < q("1/10000000000000000000000000000000000000000000000000000000"));
  CHECK(pi.contains(machin));
  CHECK(pi.contains(euler));
}

TEST_CASE("f(a, b) examples and positivity") {
  CHECK(f_ab(2, 1) == Rational(2117, 345600));
  CHECK(f_ab(3, 1) == make_rational(20672, 9331200));
  for (std::int64_t a = 2; a <= 100; ++a)
    for (std::int64_t b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) REQUIRE(f_ab(a, b) > 0);
  CHECK_THROWS(f_ab(2, 2));
  CHECK_THROWS(f_ab(4, 2));
  CHECK_THROWS(f_ab(1, 3));
}

TEST_CASE("gamma examples") {
  const auto g2 = gamma_interval(2);
  const Rational exact = Rational(4, 15) + Rational(2117, 86400);
  const Rational ulp = make_rational(1, BigInt(1) << 120);
  CHECK(g2.lo <= exact);
  CHECK(exact - g2.lo < ulp);
  CHECK(g2.hi >= exact + Rational(11, 10));
  CHECK(g2.hi - exact - Rational(11, 10) < ulp);
  CHECK(abs(g2.lo - q("0.29117")) < q("0.000005"));
  CHECK(abs(g2.hi - q("1.39117")) < q("0.000005"));
  CHECK_THROWS(gamma_interval(1));
}

TEST_CASE("gamma encloses the high-precision partial sum") {
  for (std::int64_t N : {2, 3, 17, 100, 333}) {
    CAPTURE(N);
    const auto iv = gamma_interval(N);
    const Rational v = mp::gamma_partial(N);
    CHECK(iv.contains(v));
    // the lower end is the partial sum less at most one grid step per term
    CHECK(v - iv.lo < q("1/1000000000000000000000000000000"));
    CHECK(iv.hi - iv.lo >= Rational(11, 5 * N));
  }
}

TEST_CASE("gamma certificate is internally consistent") {
  const GammaCertificate c = gamma_certificate(300);
  BigInt total = 0;
  std::uint64_t terms = 0, inexact = 0;
  std::int64_t next = 2;
  for (const auto& ch : c.chunks) {
    CHECK(ch.a_lo == next);
    next = ch.a_hi + 1;
    total += ch.floor_sum;
    terms += ch.terms;
    inexact += ch.inexact_terms;
  }
  CHECK(next == 301);
  CHECK(c.s_lo == make_rational(total, BigInt(1) << c.frac_bits));
  CHECK(c.rounding_budget == make_rational(BigInt(static_cast<unsigned long>(inexact)), BigInt(1) << c.frac_bits));
  CHECK(c.tail_bound == Rational(11, 1500));
  CHECK(c.interval.lo == Rational(4, 15) + c.s_lo);
  // coprime pairs 1 <= b < a <= 300
  std::uint64_t pairs = 0;
  for (std::int64_t a = 2; a <= 300; ++a)
    for (std::int64_t b = 1; b < a; ++b) pairs += std::gcd(a, b) == 1;
  CHECK(terms == pairs);
}

TEST_CASE("gamma width shrinks as N doubles") {
  const Rational slack = make_rational(1, BigInt(1) << 60);
  Rational prev = gamma_interval(10).width();
  for (std::int64_t N = 20; N <= 1280; N *= 2) {
    const Rational w = gamma_interval(N).width();
    CHECK(w < prev + slack);
    prev = w;
  }
}

TEST_CASE("partial tails respect the 2.2/N bound") {
  const GammaCertificate far = gamma_certificate(2000);
  for (std::int64_t N : {10, 100}) {
    const GammaCertificate near = gamma_certificate(N);
    const Rational tail_upper = far.s_hi - near.s_lo;
    CHECK(tail_upper > 0);
    CHECK(tail_upper <= Rational(11, 5 * N));
  }
}

TEST_CASE("area examples") {
  CHECK(area_P_prime(2, 1, 20, 10) == 0);
  CHECK(area_P_prime(2, 1, 0, 10) == 100);
  CHECK(area_P_prime(2, 1, -10, 10) == Rational(500, 3));
  CHECK_THROWS_WITH(area_P_prime(2, 1, 21, 10), doctest::Contains("axis misses the square"));
  CHECK_THROWS_WITH(area_P_prime(2, 1, -11, 10), doctest::Contains("axis misses the square"));
}

TEST_CASE("area predictor reproduces f(a, b) m^5") {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    for (std::int64_t m : {50, 100}) {
      Rational half = 0;
      for (std::int64_t c = (b - a) * m + 1; c <= 2 * b * m; ++c)
        half += choose2(area_P_prime(a, b, c, m) / (4 * (a * a + b * b)));
      const Rational target = f_ab(a, b) * Rational(BigInt(m) * m * m * m * m);
      const Rational ratio = 2 * half / target;
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(m);
      CAPTURE(to_decimal(ratio, 6));
      CHECK(ratio > q("0.8"));
      CHECK(ratio < q("1.2"));
    }
  }
}

TEST_CASE("growth formula examples") {
  const GrowthValue f = predicted_growth({GrowthId::FAff, 4, 1, 3}, 100);
  CHECK(f.n_exponent == 2);
  CHECK(f.log_exponent == 0);
  CHECK(f.leading == 10000);
  CHECK(f.exact);
  const GrowthValue a = predicted_growth({GrowthId::AAffine, 2, 1, 4}, 10);
  CHECK(a.n_exponent == 5);
  CHECK(a.leading == 100000);
  const GrowthValue l = predicted_growth({GrowthId::LLinear, 3, 1, 3}, 10);
  CHECK(l.n_exponent == 3);
  CHECK(l.log_exponent == 1);
  CHECK(l.leading == 1000);
  CHECK(l.approx(10) == doctest::Approx(1000 * std::log(10.0)));
  CHECK_THROWS(predicted_growth({GrowthId::AAffine, 2, 2, 4}, 10));
  for (GrowthId id : {GrowthId::FAff, GrowthId::GLin, GrowthId::AAffine, GrowthId::LLinear})
    CHECK(parse_growth_id(to_string(id)) == id);
}

TEST_CASE("growth formula tracks exact counts") {
  // log-log slope of A(n, 2, 1, r) between n = 128 and 256 against the predicted one
  for (std::int64_t r : {3, 4, 5}) {
    const GrowthFormula f{GrowthId::AAffine, 2, 1, r};
    const double predicted = std::log2(predicted_growth(f, 256).approx(256) / predicted_growth(f, 128).approx(128));
    const double c128 = count_collinear_fast(128, static_cast<std::size_t>(r)).count.get_d();
    const double c256 = count_collinear_fast(256, static_cast<std::size_t>(r)).count.get_d();
    CAPTURE(r);
    CHECK(std::abs(std::log2(c256 / c128) - predicted) < 0.15);
  }
}

TEST_CASE("spencer examples") {
  CHECK(spencer_bound(2, 4, 1) == 4);
  const Rational s = spencer_bound(3, 9, 3);
  CHECK(s <= 6);
  CHECK(6 - s < make_rational(1, BigInt(1) << 40));
  const Rational c = q("0.51983");
  for (long n : {1000L, 1000000L}) {
    const Rational V = Rational(BigInt(n) * n);
    const Rational E = c * Rational(BigInt(n) * n * n * n * n);
    CHECK(spencer_bound(4, V, E) > Rational(7 * n, 12));
  }
  CHECK_THROWS(spencer_bound(4, 16, 0));
}

TEST_CASE("forbidden quadruple density") {
  const CertifiedInterval c = forbidden_quadruple_density();
  CHECK(c.hi <= q("0.51983"));
  CHECK(c.width() <= q("0.0006"));
  CHECK(c.contains(gamma_interval(5500).midpoint() + q("0.15965")));
}

}
