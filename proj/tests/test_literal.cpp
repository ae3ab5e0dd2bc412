#include "doctest.h"
#include "qef/literal.hpp"

using qef::Gf2k;
using qef::RatFunc;
using qef::parse_gf2k_literal;
using qef::parse_ratfunc_literal;

TEST_SUITE("literal") {

TEST_CASE("single symbols parse to the expected elements") {
  const int k = 2;
  CHECK(parse_ratfunc_literal("t", k) == RatFunc::t(k));
  CHECK(parse_ratfunc_literal("w", k) == RatFunc::constant(Gf2k::gen(k)));
  CHECK(parse_ratfunc_literal("0", k) == RatFunc::zero(k));
  CHECK(parse_ratfunc_literal("1", k) == RatFunc::one(k));
  // k = 1 is legal: the generator is 1
  CHECK(parse_gf2k_literal("w", 1) == Gf2k(1, 1));
}

TEST_CASE("precedence, exponents and parentheses") {
  const int k = 2;
  const RatFunc t = RatFunc::t(k), one = RatFunc::one(k);
  const RatFunc w = RatFunc::constant(Gf2k::gen(k));
  CHECK(parse_ratfunc_literal("w*t+1", k) == w * t + one);
  CHECK(parse_ratfunc_literal("w*(t+1)", k) == w * t + w);
  CHECK(parse_ratfunc_literal("t^3+w^2*t", k) == t.pow(3) + w * w * t);
  CHECK(parse_ratfunc_literal("(t+1)^2", k) == t * t + one);
  CHECK(parse_ratfunc_literal("((t))", k) == t);
  CHECK(parse_ratfunc_literal("t^0", k) == one);
  CHECK(parse_ratfunc_literal("  t ^ 2\t+ 1 ", k) == t * t + one);
}

TEST_CASE("division builds reduced rational functions") {
  const int k = 2;
  const RatFunc t = RatFunc::t(k), one = RatFunc::one(k);
  const RatFunc w = RatFunc::constant(Gf2k::gen(k));
  const RatFunc r = parse_ratfunc_literal("(t^3+w)/(t+1)", k);
  CHECK(r == (t.pow(3) + w) / (t + one));
  CHECK(parse_ratfunc_literal("t/t", k) == one);
  CHECK(!parse_ratfunc_literal("1/(t^2)", k).is_polynomial());
  CHECK(parse_ratfunc_literal("1/w", k) ==
        RatFunc::constant(Gf2k::gen(k).inv()));
}

TEST_CASE("malformed input is rejected") {
  const int k = 2;
  for (const char* bad : {"", "2", "x", "w^", "(t", "t)", "+t", "t++1",
                          "1/0", "t^9999", "t^2^2", "w w", "2t"})
    CHECK_THROWS_AS(parse_ratfunc_literal(bad, k), qef::Error);
  CHECK_THROWS_AS(parse_ratfunc_literal("t", 0), qef::Error);
  CHECK_THROWS_AS(parse_ratfunc_literal("t", 17), qef::Error);
}

TEST_CASE("field constants restrict the grammar") {
  // over GF(4) the generator satisfies w^2 + w = 1
  CHECK(parse_gf2k_literal("w^2+w", 2) == Gf2k(2, 1));
  CHECK(parse_gf2k_literal("w/w", 2) == Gf2k(2, 1));
  // a quotient that reduces to a constant is a constant
  CHECK(parse_gf2k_literal("(t+1)/(t+1)", 2) == Gf2k(2, 1));
  CHECK_THROWS_AS(parse_gf2k_literal("t", 2), qef::Error);
  CHECK_THROWS_AS(parse_gf2k_literal("w+t^2", 2), qef::Error);
}

}  // TEST_SUITE
