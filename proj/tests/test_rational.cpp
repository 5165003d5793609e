#include <doctest.h>

#include <random>

#include "arrkit/rational.hpp"

using arrkit::Rational;

// every mixed-path op is replayed against plain mpq_class arithmetic
namespace {

mpq_class ref(const Rational& r) { return r.to_mpq(); }

Rational from_mpq(const mpq_class& q) { return Rational(q); }

}  // namespace

TEST_CASE("construction and normalization") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 5).is_one());
  CHECK(Rational(2, 4).den_small() == 2);
  CHECK(Rational(7).is_integer());
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK(Rational(-22, 7).str() == "-22/7");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("arithmetic agrees with gmp on random small values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  for (int it = 0; it < 2000; ++it) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK(ref(a + b) == ref(a) + ref(b));
    CHECK(ref(a - b) == ref(a) - ref(b));
    CHECK(ref(a * b) == ref(a) * ref(b));
    if (!b.is_zero()) CHECK(ref(a / b) == ref(a) / ref(b));
    CHECK((a < b) == (ref(a) < ref(b)));
    Rational c = a;
    c.add_mul(b, Rational(7, 3));
    CHECK(ref(c) == ref(a) + ref(b) * mpq_class(7, 3));
  }
}

TEST_CASE("promotion across the int64 boundary and back") {
  // 2^62 numerators: products overflow int64 but fit the slow path
  Rational big(1LL << 62);
  Rational r = big * big;
  CHECK(!r.is_small());
  CHECK(ref(r) == mpq_class(mpz_class(1) << 124));
  // dividing back down must demote to the inline representation
  Rational s = r / big;
  CHECK(s.is_small());
  CHECK(s == big);

  Rational t(1, (1LL << 31) + 11);
  Rational u = t * t * t;  // denominator ~ 2^93
  CHECK(!u.is_small());
  Rational v = u / (t * t);
  CHECK(v.is_small());
  CHECK(v == t);
}

TEST_CASE("sums with huge intermediate terms stay exact") {
  // harmonic-like sum where denominators force repeated promotion
  Rational acc(0);
  mpq_class want(0);
  for (int k = 1; k <= 40; ++k) {
    long long d = 1000000007LL - k;
    acc += Rational(1, d);
    want += mpq_class(1, static_cast<unsigned long>(d));
  }
  CHECK(ref(acc) == want);

  // alternating series telescoping to zero, mixing big and small
  Rational z(0);
  Rational giant = from_mpq(
      mpq_class(mpz_class("123456789012345678901234567890"), mpz_class(7)));
  z += giant;
  z -= giant;
  CHECK(z.is_zero());
  CHECK(z.is_small());
}

TEST_CASE("inverse and negate") {
  Rational a(-8, 28);
  CHECK(a.inverse() == Rational(-7, 2));
  Rational b = a;
  b.negate();
  CHECK(b == Rational(2, 7));
  CHECK((-a) == b);
}
