#include <doctest.h>

#include "arrkit/arrangement.hpp"
#include "arrkit/catalog.hpp"

using namespace arrkit;

TEST_CASE("hyperplane normalization") {
  Hyperplane h = Hyperplane::from({Rational(0), Rational(-2), Rational(4)});
  CHECK(h.a == std::vector<Rational>{Rational(0), Rational(1), Rational(-2)});
  Hyperplane g = Hyperplane::from({Rational(0), Rational(1, 2), Rational(-1)});
  CHECK(g == h);
  CHECK(h.str() == "y - 2*z");
  CHECK_THROWS_AS(Hyperplane::from({Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("make_arrangement rejects duplicates and bad lengths") {
  CHECK_THROWS_AS(make_arrangement(2, {{Rational(1), Rational(1)},
                                       {Rational(2), Rational(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_arrangement(3, {{Rational(1), Rational(0)}}),
                  std::invalid_argument);
  Arrangement a = make_arrangement(
      2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(a.size() == 2);
  CHECK(a.index_of(Hyperplane::from({Rational(0), Rational(3)})) == 1);
  CHECK(a.index_of(Hyperplane::from({Rational(1), Rational(1)})) == -1);
}

TEST_CASE("defining polynomial degree") {
  Arrangement a = catalog_tangent();
  Poly q = defining_polynomial(a);
  CHECK(q.degree() == 4);
  Multiplicity m = {2, 1, 1, 1};
  CHECK(defining_polynomial(a, &m).degree() == 5);
}

TEST_CASE("add and delete invert each other") {
  Arrangement a = catalog_factor();
  Hyperplane h = Hyperplane::from({Rational(1), Rational(5), Rational(7)});
  Arrangement b = add_hyperplane(a, h);
  CHECK(b.size() == a.size() + 1);
  CHECK_THROWS_AS(add_hyperplane(b, h), std::invalid_argument);
  Arrangement c = delete_hyperplane(b, b.size() - 1);
  CHECK(canonical_key(c) == canonical_key(a));
  CHECK_THROWS_AS(delete_hyperplane(a, a.size()), std::out_of_range);
}

TEST_CASE("restriction of factor to y=0 has two lines") {
  Arrangement a = catalog_factor();
  int iy = a.index_of(Hyperplane::from({Rational(0), Rational(1), Rational(0)}));
  REQUIRE(iy >= 0);
  Restriction r = restrict_arrangement(a, iy);
  CHECK(r.arr.nvars == 2);
  CHECK(r.arr.size() == 2);
  // restricted planes partition the deleted arrangement's traces
  size_t covered = 0;
  for (const auto& pre : r.preimages) covered += pre.size();
  CHECK(covered == static_cast<size_t>(a.size() - 1));
}

TEST_CASE("ziegler restriction of coned shi b2 at the cone") {
  Arrangement a = catalog_shi_b(2);
  REQUIRE(a.size() == 9);
  int iz = a.index_of(
      Hyperplane::from({Rational(0), Rational(0), Rational(1)}));
  REQUIRE(iz == 0);
  ZieglerRestriction z = ziegler_restrict(a, iz);
  CHECK(z.restricted.size() == 4);
  Multiplicity want = {2, 2, 2, 2};
  CHECK(z.mult == want);
  CHECK(mult_total(z.mult) == 8);
  // the section picks one genuine preimage per line
  for (size_t k = 0; k < z.section.size(); ++k) {
    bool found = false;
    for (int j : z.preimages[k]) found = found || j == z.section[k];
    CHECK(found);
  }
}

TEST_CASE("essentialization") {
  // two planes in 3-space: rank 2, essentialization lives in 2 variables
  Arrangement a = make_arrangement(3, {{Rational(1), Rational(0), Rational(0)},
                                       {Rational(0), Rational(1), Rational(0)}});
  CHECK(!is_essential(a));
  Essentialization e = essentialize(a);
  CHECK(e.rank == 2);
  CHECK(e.arr.nvars == 2);
  CHECK(e.arr.size() == 2);
  CHECK(is_essential(e.arr));
  CHECK(is_essential(catalog_b3()));
}

TEST_CASE("file round trip is byte exact") {
  std::string text = write_arrangement(catalog_b3());
  ParsedArrangement p = parse_arrangement(text);
  CHECK(write_arrangement(p.arr) == text);
  CHECK(!p.mult.has_value());

  // messy input normalizes to the same file forever after
  std::string messy =
      "# comment line\n"
      "vars: 3\n"
      "  2 0 0   # doubled x\n"
      "0 -1/2 1\n\n";
  ParsedArrangement q = parse_arrangement(messy);
  std::string first = write_arrangement(q.arr);
  CHECK(write_arrangement(parse_arrangement(first).arr) == first);
  CHECK(q.arr.hyperplanes[0].str() == "x");

  // multiplicity column round trip
  Multiplicity m = {3, 1};
  std::string wm = write_arrangement(q.arr, &m);
  ParsedArrangement pm = parse_arrangement(wm);
  REQUIRE(pm.mult.has_value());
  CHECK(*pm.mult == m);
  CHECK(write_arrangement(pm.arr, &*pm.mult) == wm);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_arrangement("vars: 3\n1 0 0\n1 2\n");
    FAIL("expected parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_arrangement("vars: 2\n0.5 1\n");
    FAIL("expected parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_WITH(parse_arrangement("1 0 0\n"),
                    doctest::Contains("vars:"));
}

TEST_CASE("subarrangement and localization keep ambient coordinates") {
  Arrangement a = catalog_b3();
  Arrangement sub = subarrangement(a, {0, 2, 5});
  CHECK(sub.nvars == 3);
  CHECK(sub.size() == 3);
  CHECK(sub.hyperplanes[0] == a.hyperplanes[0]);
}

TEST_CASE("canonical key ignores ordering") {
  Arrangement a = make_arrangement(
      2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  Arrangement b = make_arrangement(
      2, {{Rational(0), Rational(2)}, {Rational(5), Rational(0)}});
  CHECK(canonical_key(a) == canonical_key(b));
  Multiplicity m1 = {1, 2};
  Multiplicity m2 = {2, 1};
  CHECK(canonical_key(a, &m1) == canonical_key(b, &m2));
  CHECK(canonical_key(a, &m1) != canonical_key(a, &m2));
}
