#include <doctest.h>

#include "arrkit/poly.hpp"

using namespace arrkit;

namespace {

Poly x(int nv, int i) { return Poly::variable(nv, i); }

}  // namespace

TEST_CASE("monomial packing is lex order") {
  // packed words compare like lex with x0 heaviest
  Mono a = mono_pack({2, 0, 0});
  Mono b = mono_pack({1, 1, 0});
  Mono c = mono_pack({1, 0, 1});
  Mono d = mono_pack({0, 2, 0});
  CHECK(a > b);
  CHECK(b > c);
  CHECK(c > d);
  CHECK(mono_deg(a, 3) == 2);
  CHECK(mono_mul(b, c) == mono_pack({2, 1, 1}));
  CHECK(mono_divides(mono_pack({2, 1, 1}), b, 3));
  CHECK(!mono_divides(b, c, 3));
  CHECK(mono_div(mono_pack({2, 1, 1}), b) == c);
}

TEST_CASE("monomial bases") {
  CHECK(dim_degree(3, 2) == 6);
  CHECK(dim_degree(4, 5) == 56);
  CHECK(dim_degree(3, -1) == 0);
  const auto& basis = monomial_basis(3, 2);
  REQUIRE(basis.size() == 6);
  // lex descending
  for (size_t i = 0; i + 1 < basis.size(); ++i) CHECK(basis[i] > basis[i + 1]);
  for (size_t i = 0; i < basis.size(); ++i)
    CHECK(mono_index(3, 2, basis[i]) == static_cast<int>(i));
  const auto& excl = monomial_basis_excl(3, 2, 1);
  REQUIRE(excl.size() == 3);  // x^2, xz, z^2
  for (Mono m : excl) CHECK(mono_exp(m, 3, 1) == 0);
}

TEST_CASE("product with a frozen expansion") {
  int nv = 2;
  Poly x2 = x(nv, 0) * x(nv, 0);
  Poly y2 = x(nv, 1) * x(nv, 1);
  Poly p = (x2 - y2) * (x2 - y2 * Rational(4));
  // x^4 - 5 x^2 y^2 + 4 y^4
  Poly want = pow(x(nv, 0), 4);
  want += pow(x(nv, 1), 4) * Rational(4);
  want -= pow(x(nv, 0), 2) * pow(x(nv, 1), 2) * Rational(5);
  CHECK(p == want);
  CHECK(p.degree() == 4);
  CHECK(p.is_homogeneous());
  CHECK(p.str() == "x^4 - 5*x^2*y^2 + 4*y^4");
}

TEST_CASE("derivative, eval, substitute") {
  int nv = 3;
  Poly f = x(nv, 0) * x(nv, 1) * x(nv, 2);  // xyz
  Poly fx = f.derivative(0);
  CHECK(fx == x(nv, 1) * x(nv, 2));
  CHECK(f.eval({Rational(2), Rational(3), Rational(5)}) == Rational(30));

  // substitute into a 2-variable ring: x->u, y->u+v, z->v
  int nw = 2;
  std::vector<Poly> im = {x(nw, 0), x(nw, 0) + x(nw, 1), x(nw, 1)};
  Poly g = f.substitute(im);
  CHECK(g.nvars() == 2);
  Poly want = x(nw, 0) * (x(nw, 0) + x(nw, 1)) * x(nw, 1);
  CHECK(g == want);
}

TEST_CASE("exact division") {
  int nv = 3;
  Poly f = (x(nv, 0) + x(nv, 1)) * (x(nv, 0) - x(nv, 2)) *
           (x(nv, 1) + x(nv, 2) * Rational(3));
  auto q = f.divide_exact(x(nv, 0) + x(nv, 1));
  REQUIRE(q.has_value());
  CHECK(*q == (x(nv, 0) - x(nv, 2)) * (x(nv, 1) + x(nv, 2) * Rational(3)));
  CHECK(!f.divide_exact(x(nv, 0) + x(nv, 2)).has_value());
  CHECK(!f.divide_exact(x(nv, 0) * x(nv, 0)).has_value());
  // dividing the zero polynomial is fine
  auto z = Poly(nv).divide_exact(x(nv, 0));
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("dense round trip") {
  int nv = 3, d = 3;
  Poly f = pow(x(nv, 0), 3) - x(nv, 0) * x(nv, 1) * x(nv, 2) * Rational(7, 2);
  auto v = f.dense(d);
  CHECK(v.size() == monomial_basis(nv, d).size());
  CHECK(Poly::from_dense(nv, d, v) == f);
}

TEST_CASE("unipoly arithmetic and division") {
  UniPoly t = UniPoly::t();
  // (t-1)(t-2)(t-5) = t^3 - 8t^2 + 17t - 10
  UniPoly p = UniPoly::constant(Rational(1));
  for (long long r : {1, 2, 5}) p = p.mul_linear(Rational(r));
  CHECK(p.coeff(3) == Rational(1));
  CHECK(p.coeff(2) == Rational(-8));
  CHECK(p.coeff(1) == Rational(17));
  CHECK(p.coeff(0) == Rational(-10));
  CHECK(p.eval(Rational(2)).is_zero());
  CHECK(p.integer_roots(10) == std::vector<long long>{1, 2, 5});

  UniPoly d = UniPoly::constant(Rational(1)).mul_linear(Rational(2));
  CHECK(d.divides(p));
  auto [q, r] = p.divmod(d);
  CHECK(r.is_zero());
  CHECK(q * d == p);
  UniPoly bad = UniPoly::constant(Rational(1)).mul_linear(Rational(3));
  CHECK(!bad.divides(p));
  CHECK(!p.divide_exact(bad).has_value());

  // repeated roots reported with multiplicity
  UniPoly sq = d * d;
  CHECK(sq.integer_roots(5) == std::vector<long long>{2, 2});
  CHECK(p.str("t") == "t^3 - 8*t^2 + 17*t - 10");
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(4, 7) == Rational(0));
}
