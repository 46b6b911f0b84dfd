#include <symweb/laurent.hpp>
#include <symweb/fraction.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace symweb;

namespace {
LaurentHalf Q(int half) { return LaurentHalf::monomial(half); }
}

TEST_CASE("quantum integers match their closed form") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == LaurentHalf(1));
  CHECK(qint(2) == Q(2) + Q(-2));
  // [3] = q^2 + 1 + q^-2
  CHECK(qint(3) == Q(4) + Q(0) + Q(-4));
  CHECK_THROWS_AS(qint(-1), std::invalid_argument);
}

TEST_CASE("quantum integers satisfy the telescoping identity") {
  // (q - q^-1) [a] = q^a - q^-a
  const LaurentHalf lhs_factor = Q(2) - Q(-2);
  for (int a = 0; a <= 20; ++a) {
    CHECK(lhs_factor * qint(a) == LaurentHalf::q_power(a) - LaurentHalf::q_power(-a));
  }
  // [2][a] = [a+1] + [a-1]
  for (int a = 1; a <= 20; ++a) {
    CHECK(qint(2) * qint(a) == qint(a + 1) + qint(a - 1));
  }
}

TEST_CASE("factorials and binomials") {
  CHECK(qfact(0) == LaurentHalf(1));
  CHECK(qfact(1) == LaurentHalf(1));
  CHECK(qfact(2) == qint(2));
  // [3]! = q^3 + 2q + 2q^-1 + q^-3
  CHECK(qfact(3) == Q(6) + LaurentHalf::monomial(2, 2) + LaurentHalf::monomial(-2, 2) + Q(-6));
  // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
  CHECK(qbinom(4, 2) ==
        Q(8) + Q(4) + LaurentHalf::monomial(0, 2) + Q(-4) + Q(-8));
  CHECK(qbinom(3, 0) == LaurentHalf(1));
  CHECK(qbinom(3, 3) == LaurentHalf(1));
  CHECK(qbinom(2, 3).is_zero());
  CHECK(qbinom(0, 1).is_zero());
}

TEST_CASE("binomial of a negative upper argument") {
  // [-2 choose 2] = [-2][-3]/[2]! = [2][3]/[2] = [3]
  CHECK(qbinom(-2, 2) == qint(3));
  CHECK(qbinom(-1, 1) == -qint(1));
  // [-a choose b] = (-1)^b [a+b-1 choose b]
  for (int a = 1; a <= 5; ++a)
    for (int b = 0; b <= 4; ++b) {
      LaurentHalf rhs = qbinom(a + b - 1, b);
      if (b % 2 != 0) rhs = -rhs;
      CHECK(qbinom(-a, b) == rhs);
    }
}

TEST_CASE("binomials divide the factorial products exactly") {
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= a; ++b) {
      CHECK(qbinom(a, b) * qfact(b) * qfact(a - b) == qfact(a));
    }
}

TEST_CASE("ring arithmetic basics") {
  const LaurentHalf p = Q(2) + Q(-2);            // [2]
  const LaurentHalf r = Q(-2) + Q(-10);          // q^-1 + q^-5
  CHECK(p * r == Q(0) + Q(-4) + Q(-8) + Q(-12));  // 1 + q^-2 + q^-4 + q^-6
  CHECK((p - p).is_zero());
  CHECK(-p == LaurentHalf() - p);
  CHECK(p * LaurentHalf() == LaurentHalf());
  CHECK((p * r).str() == "1 + q^-2 + q^-4 + q^-6");
}

TEST_CASE("bar involution") {
  const LaurentHalf p = Q(3) + LaurentHalf::monomial(0, 5) - Q(-4);
  CHECK(bar(bar(p)) == p);
  CHECK(bar(qint(7)) == qint(7));
  const LaurentHalf a = Q(1) + Q(-3), b = Q(5) - Q(0);
  CHECK(bar(a * b) == bar(a) * bar(b));
  CHECK(bar(a + b) == bar(a) + bar(b));
}

TEST_CASE("exact division") {
  const LaurentHalf num = qfact(4);
  CHECK(num.divide_exact(qint(2)).value() * qint(2) == num);
  CHECK(num.divide_exact(qint(3)).value() * qint(3) == num);
  CHECK(!qint(3).divide_exact(qint(2)).has_value());
  CHECK(!(Q(2) + LaurentHalf(1)).divide_exact(LaurentHalf::monomial(0, 2)).has_value());
  // Monomial units always divide.
  CHECK(qint(5).divide_exact(Q(-7)).value() == qint(5) * Q(7));
  CHECK_THROWS_AS(qint(2).divide_exact(LaurentHalf()), std::invalid_argument);
  CHECK(LaurentHalf().divide_exact(qint(2)).value().is_zero());
}

TEST_CASE("printing") {
  CHECK(LaurentHalf().str() == "0");
  CHECK(LaurentHalf(-3).str() == "-3");
  CHECK(Q(2).str() == "q");
  CHECK(Q(-2).str() == "q^-1");
  CHECK(Q(1).str() == "q^1/2");
  CHECK(Q(-3).str() == "q^-3/2");
  CHECK(LaurentHalf::monomial(4, -2).str() == "-2*q^2");
  CHECK((Q(2) - Q(-2)).str() == "q - q^-1");
  CHECK((-qint(2)).str() == "-q - q^-1");
}

TEST_CASE("parsing round-trips") {
  const char* samples[] = {"0",       "1",          "-3",           "q",
                           "q^-1",    "q^1/2",      "q^-3/2",       "2*q^2",
                           "q - q^-1", "1 + q^-2 + q^-4 + q^-6", "-q + 5", "3*q^{5/2} - 2"};
  for (const char* s : samples) {
    const LaurentHalf p = LaurentHalf::parse(s);
    CHECK(LaurentHalf::parse(p.str()) == p);
  }
  CHECK(LaurentHalf::parse("q^{3/2}") == Q(3));
  CHECK(LaurentHalf::parse("2q") == LaurentHalf::monomial(2, 2));
  CHECK_THROWS_AS(LaurentHalf::parse(""), parse_error);
  CHECK_THROWS_AS(LaurentHalf::parse("q^"), parse_error);
  CHECK_THROWS_AS(LaurentHalf::parse("+ q"), parse_error);
}

TEST_CASE("fractions reduce opportunistically") {
  const LaurentFrac f(qfact(3), qint(3));
  CHECK(f.is_polynomial());
  CHECK(f.require_polynomial() == qint(2) * qint(1));
  const LaurentFrac g(LaurentHalf(1), qint(2));
  CHECK(!g.is_polynomial());
  CHECK_THROWS_AS(g.require_polynomial(), exact_division_error);
  CHECK(g + g == LaurentFrac(LaurentHalf(2), qint(2)));
  // 1/[2] + (q + q^-1 - 1)/[2] = 1
  CHECK(g + LaurentFrac(qint(2) - LaurentHalf(1), qint(2)) == LaurentFrac(1));
  CHECK((g * LaurentFrac(qint(2))).is_polynomial());
}

TEST_CASE("fraction equality cross-multiplies") {
  const LaurentFrac a(qint(3), qint(2));
  const LaurentFrac b(qint(3) * qint(5), qint(2) * qint(5));
  CHECK(a == b);
  CHECK(a != LaurentFrac(qint(3), qint(4)));
  CHECK(LaurentFrac().is_zero());
  CHECK(LaurentFrac(LaurentHalf(), qint(2)) == LaurentFrac());
}

TEST_CASE("fraction arithmetic stays exact") {
  const LaurentFrac half = LaurentFrac::inverse_of(qint(2));
  LaurentFrac acc;
  for (int t = 0; t < 4; ++t) acc += half;
  // 4/[2] times [2]/4 is one
  CHECK(acc * LaurentFrac(qint(2), LaurentHalf(4)) == LaurentFrac(1));
  CHECK((-half + half).is_zero());
  CHECK(bar(half) == half);
  const LaurentFrac m(LaurentHalf::monomial(3), qint(3));
  CHECK(bar(m) == LaurentFrac(LaurentHalf::monomial(-3), qint(3)));
}
