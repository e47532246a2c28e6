#include <doctest.h>

#include <sstream>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/io.hpp"
#include "oracles.hpp"

using namespace moufang;

TEST_CASE("spec parsing round trips") {
  CHECK(ConstructionSpec::parse("cyclic(6)").to_string() == "cyclic(6)");
  CHECK(ConstructionSpec::parse("ea3(3)").to_string() == "ea3(3)");
  CHECK(ConstructionSpec::parse("cml81").to_string() == "cml81");
  CHECK(ConstructionSpec::parse("product(cml81,cyclic(3))").to_string() ==
        "product(cml81,cyclic(3))");
  CHECK(ConstructionSpec::parse("product(product(cyclic(2),cyclic(3)),ea3(1))").to_string() ==
        "product(product(cyclic(2),cyclic(3)),ea3(1))");
  CHECK(ConstructionSpec::parse("  product ( ea3 ( 2 ) , cyclic ( 2 ) ) ").to_string() ==
        "product(ea3(2),cyclic(2))");
}

TEST_CASE("spec parsing rejects bad input") {
  for (const char* bad : {"", "foo", "cyclic", "cyclic()", "cyclic(x)", "cyclic(0)",
                          "cyclic(-3)", "product(cyclic(2)", "product(cyclic(2))",
                          "cml81 x", "cyclic(2))", "ea3(2,3)"}) {
    CHECK_THROWS_AS(ConstructionSpec::parse(bad), FormatError);
  }
}

TEST_CASE("resolved order and size limits") {
  CHECK(ConstructionSpec::parse("cyclic(2048)").resolved_order() == 2048);
  CHECK(ConstructionSpec::parse("ea3(6)").resolved_order() == 729);
  CHECK(ConstructionSpec::parse("product(cml81,cyclic(3))").resolved_order() == 243);
  CHECK_THROWS_AS(ConstructionSpec::parse("cyclic(2049)").resolved_order(), SizeOverflow);
  CHECK_THROWS_AS(ConstructionSpec::parse("ea3(7)").resolved_order(), SizeOverflow);
  CHECK_THROWS_AS(ConstructionSpec::parse("product(cyclic(100),cyclic(100))").resolved_order(),
                  SizeOverflow);
  CHECK_THROWS_AS(build("ea3(7)"), SizeOverflow);
}

TEST_CASE("cyclic construction") {
  FiniteLoop z6 = build("cyclic(6)");
  CHECK(z6 == fixtures::z6());
  CHECK(build("cyclic(1)").order() == 1);
  FiniteLoop z5 = build("cyclic(5)");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(z5.mul(i, j) == (i + j) % 5);
}

TEST_CASE("elementary abelian construction") {
  CHECK(build("ea3(0)").order() == 1);
  FiniteLoop e2 = build("ea3(2)");
  CHECK(e2.order() == 9);
  CHECK(e2.exponent() == 3);
  CHECK(is_associative(e2).passed());
  CHECK(is_commutative(e2).passed());
}

TEST_CASE("order-81 fixture basics") {
  FiniteLoop L = build_cml81();
  CHECK(L.order() == 81);
  CHECK(L.identity() == 0);
  CHECK(L.cml());
  CHECK(is_associative(L).failed());
  CHECK(L.exponent() == 3);

  // e1 = (1,0,0,0), e2 = (0,1,0,0): product is (1,1,0,0) with no twist
  // contribution on the last coordinate (d' = 0, bc' - b'c = 1*0 - 0*0... ).
  CHECK(L.mul(27, 9) == 36);
  // Twist appears one level down: (e1*e2)*e3 vs e1*(e2*e3) differ centrally.
  CHECK(L.associator(27, 9, 3) == 1);
  CHECK(L.associator(9, 27, 3) == 2);  // antisymmetric in the first pair

  std::vector<int> gens = cml81_generators();
  CHECK(gens == std::vector<int>{27, 9, 3});
  CHECK(generate(L, gens).order() == 81);
  CHECK(generate(L, {27, 9}).order() == 9);  // two generators stay associative
}

TEST_CASE("product construction") {
  FiniteLoop p = build("product(cyclic(2),cyclic(3))");
  CHECK(p.order() == 6);
  CHECK(p.exponent() == 6);
  FiniteLoop big = build("product(cml81,cyclic(3))");
  CHECK(big.order() == 243);
  CHECK(big.cml());
  CHECK(is_associative(big).failed());
  // Component arithmetic: (x1,y1)*(x2,y2) at index x*3+y.
  FiniteLoop c81 = build_cml81();
  for (int x1 : {0, 27, 40})
    for (int y1 : {0, 1, 2})
      for (int x2 : {0, 9, 53})
        for (int y2 : {0, 1, 2})
          CHECK(big.mul(x1 * 3 + y1, x2 * 3 + y2) ==
                c81.mul(x1, x2) * 3 + (y1 + y2) % 3);
}

TEST_CASE("construction is deterministic") {
  for (const char* text : {"cyclic(7)", "ea3(3)", "cml81", "product(cml81,cyclic(2))"}) {
    std::ostringstream a, b;
    write_loop(a, build(text));
    write_loop(b, build(text));
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("every built loop is certified commutative Moufang") {
  for (const char* text :
       {"cyclic(1)", "cyclic(5)", "ea3(2)", "cml81", "product(cyclic(2),cyclic(2))",
        "product(cml81,cyclic(3))"}) {
    FiniteLoop L = build(text);
    CHECK(L.cml());
  }
}
