#include <random>

#include "clift/laurent.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace clift;

namespace {

VarTableRef xyz() { return VarTable::make({"x", "y", "z"}); }

LaurentPoly v(const VarTableRef& t, const std::string& name) {
  return LaurentPoly::var(t, name);
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("table construction") {
  auto t = VarTable::make({"x", "y"});
  CHECK(t->size() == 2);
  CHECK_THROWS_AS(VarTable::make({"x", "x"}), InputError);
  CHECK_THROWS_AS(VarTable::make({""}), InputError);
}

TEST_CASE("arithmetic identities") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  auto one = LaurentPoly::constant(t, 1);
  CHECK((one + power(x, -1) * y) * x == x + y);
  CHECK((x - x).zero());
  CHECK((x * y).term_count() == 1);
}

TEST_CASE("canonical rendering") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y"), z = v(t, "z");
  auto two = LaurentPoly::constant(t, 2);
  CHECK((x * x - y * y).str() == "x^2 - y^2");
  auto one = LaurentPoly::constant(t, 1);
  CHECK((one + power(x, -1) * y).str() == "1 + x^-1*y");
  CHECK(LaurentPoly::constant(t, Rat(-3) / 2).str() == "-3/2");
  CHECK(LaurentPoly(t).str() == "0");
  CHECK((two * x - two * y).str() == "2*x - 2*y");
  // The documented example shape.
  auto f = x * x * y - LaurentPoly::constant(t, Rat(1) / 2) * z +
           LaurentPoly::constant(t, 3) + power(x, -1);
  CHECK(f.str() == "x^2*y - 1/2*z + 3 + x^-1");
}

TEST_CASE("operands over different tables merge by name") {
  auto ta = VarTable::make({"x", "y"});
  auto tb = VarTable::make({"y", "z"});
  auto f = v(ta, "x") + v(ta, "y");
  auto g = v(tb, "y") + v(tb, "z");
  auto sum = f + g;
  CHECK(sum.str() == "x + 2*y + z");
  // Name-based equality across distinct tables.
  CHECK(v(ta, "y") == v(tb, "y"));
}

TEST_CASE("power") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  auto two = LaurentPoly::constant(t, 2);
  CHECK(power(x + y, 2) == x * x + two * x * y + y * y);
  CHECK(power(x + y, 0) == LaurentPoly::constant(t, 1));
  CHECK(power(two * x, -3).str() == "1/8*x^-3");
  CHECK_THROWS_AS(power(x + y, -1), InputError);
  CHECK_THROWS_AS(power(LaurentPoly(t), -1), InputError);
}

TEST_CASE("exact division on fixed examples") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");

  auto q = exact_divide(x * x - y * y, x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);

  q = exact_divide(x + y, x);
  REQUIRE(q.has_value());
  CHECK(q->str() == "1 + x^-1*y");

  CHECK_FALSE(exact_divide(x * x + y, x + y).has_value());
  CHECK(*exact_divide(x, x) == LaurentPoly::constant(t, 1));
  CHECK(exact_divide(LaurentPoly(t), x)->zero());
  CHECK_THROWS_AS(exact_divide(x, LaurentPoly(t)), InputError);
}

TEST_CASE("division round trip on random polynomials") {
  std::mt19937_64 rng(17);
  auto t = xyz();
  for (int trial = 0; trial < 300; ++trial) {
    auto p = clift::testing::random_poly(rng, t, -2, 2);
    auto q = clift::testing::random_poly(rng, t, -2, 2);
    auto got = exact_divide(p * q, q);
    REQUIRE(got.has_value());
    CHECK(*got == p);
    CHECK(*got * q == p * q);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(19);
  auto t = xyz();
  for (int trial = 0; trial < 100; ++trial) {
    auto a = clift::testing::random_poly(rng, t, -2, 2);
    auto b = clift::testing::random_poly(rng, t, -2, 2);
    auto c = clift::testing::random_poly(rng, t, -2, 2);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).zero());
  }
}

TEST_CASE("exponent ranges") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  auto f = x * x + power(x, -1) * y;
  auto rx = f.exponent_range("x");
  REQUIRE(rx.has_value());
  CHECK(rx->first == -1);
  CHECK(rx->second == 2);
  auto ry = f.exponent_range("y");
  REQUIRE(ry.has_value());
  CHECK(ry->first == 0);
  CHECK(ry->second == 1);
  auto rz = f.exponent_range("z");
  REQUIRE(rz.has_value());
  CHECK(*rz == std::pair<int, int>{0, 0});
  CHECK_FALSE(LaurentPoly(t).exponent_range("x").has_value());
}

TEST_CASE("polynomial predicate") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  CHECK(is_polynomial(x + y));
  CHECK(is_polynomial(LaurentPoly::constant(t, 7)));
  CHECK(is_polynomial(LaurentPoly(t)));
  CHECK_FALSE(is_polynomial(power(x, -1) + y));
  CHECK_FALSE(is_polynomial(x * power(y, -2)));
}

TEST_CASE("substitution") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y"), z = v(t, "z");

  std::map<std::string, LaurentPoly> bind{{"x", z * z}};
  CHECK(substitute(x + y, bind) == z * z + y);

  // Unbound variables pass through.
  CHECK(substitute(x, {}) == x);

  // Binding to zero kills the terms that contain the variable.
  std::map<std::string, LaurentPoly> zero{{"x", LaurentPoly(t)}};
  CHECK(substitute(x * y + z, zero) == z);

  // A negative power needs a unit image.
  std::map<std::string, LaurentPoly> pole{{"x", LaurentPoly(t)}};
  CHECK_THROWS_AS(substitute(power(x, -1), pole), InputError);
  std::map<std::string, LaurentPoly> nonunit{{"x", y + z}};
  CHECK_THROWS_AS(substitute(power(x, -1), nonunit), InputError);
  std::map<std::string, LaurentPoly> unit{{"x", LaurentPoly::constant(t, 2) * y}};
  CHECK(substitute(power(x, -1), unit).str() == "1/2*y^-1");

  // Substitution is a ring map on random data.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = clift::testing::random_poly(rng, t, 0, 2);
    auto g = clift::testing::random_poly(rng, t, 0, 2);
    std::map<std::string, LaurentPoly> b{
        {"x", clift::testing::random_poly(rng, t, 0, 1)}};
    CHECK(substitute(f * g, b) == substitute(f, b) * substitute(g, b));
    CHECK(substitute(f + g, b) == substitute(f, b) + substitute(g, b));
  }
}

TEST_CASE("evaluation") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  std::map<std::string, Rat> at{{"x", 3}, {"y", 1}, {"z", 0}};
  CHECK(eval(x * x - y, at) == 8);
  CHECK(eval(power(x, -2), at) == Rat(1) / 9);
  std::map<std::string, Rat> zero{{"x", 0}, {"y", 1}, {"z", 0}};
  CHECK_THROWS_AS(eval(power(x, -1), zero), InputError);
  CHECK(eval(LaurentPoly(t), at) == 0);
}

TEST_CASE("leading term follows the graded order") {
  auto t = xyz();
  auto x = v(t, "x"), y = v(t, "y");
  auto f = y * y + x;  // degree 2 beats degree 1
  CHECK(f.str() == "y^2 + x");
  auto g = x * y + y * y;  // same degree, lex on exponents decides
  CHECK(g.str() == "x*y + y^2");
}

}  // TEST_SUITE
