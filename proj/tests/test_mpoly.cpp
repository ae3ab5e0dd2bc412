#include "doctest.h"
#include "qef/mpoly.hpp"

#include <memory>
#include <random>

using qef::MCtx;
using qef::MCtxPtr;
using qef::MPoly;

namespace {

MPoly random_mpoly(std::mt19937_64& rng, const MCtxPtr& ctx, int nterms,
                   int maxexp) {
  MPoly p(ctx);
  for (int i = 0; i < nterms; ++i) {
    qef::MKey key;
    for (int v = 0; v < ctx->nvars(); ++v)
      key = key.with_lane(v, int(rng() % uint64_t(maxexp + 1)));
    p += MPoly::monomial(ctx, key);
  }
  return p;
}

}  // namespace

TEST_SUITE("mpoly") {

TEST_CASE("characteristic-2 basics") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"x", "y", "z"});
  MPoly x = MPoly::var(ctx, "x"), y = MPoly::var(ctx, "y"),
        z = MPoly::var(ctx, "z");
  CHECK((x + x).is_zero());
  CHECK((x + y) * (x + y) == x * x + y * y);
  // Freshman's dream at fourth powers.
  MPoly lhs = (x + y + z).pow(4);
  MPoly rhs = x.pow(4) + y.pow(4) + z.pow(4);
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "x^4+y^4+z^4");
}

TEST_CASE("ring axioms on random samples") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"a", "b", "c"});
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    MPoly p = random_mpoly(rng, ctx, 4, 3);
    MPoly q = random_mpoly(rng, ctx, 4, 3);
    MPoly r = random_mpoly(rng, ctx, 3, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + p == MPoly::zero(ctx));
    CHECK(p * MPoly::one(ctx) == p);
  }
}

TEST_CASE("derivative kills even exponents and squares") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"x", "y"});
  MPoly x = MPoly::var(ctx, "x"), y = MPoly::var(ctx, "y");
  MPoly p = x.pow(3) * y + x * x + y;
  CHECK(p.derivative("x") == x * x * y);
  CHECK(p.derivative("y") == x.pow(3) + MPoly::one(ctx));
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    MPoly q = random_mpoly(rng, ctx, 5, 4);
    CHECK(q.square().derivative("x").is_zero());
    CHECK(q.square().derivative("y").is_zero());
  }
}

TEST_CASE("squares and square roots") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"x", "y"});
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    MPoly q = random_mpoly(rng, ctx, 5, 5);
    auto root = q.square().sqrt();
    REQUIRE(root.has_value());
    CHECK(*root == q);
  }
  MPoly x = MPoly::var(ctx, "x");
  CHECK(!(x + MPoly::one(ctx)).sqrt().has_value());
}

TEST_CASE("substitution is a ring homomorphism") {
  auto ctx =
      std::make_shared<MCtx>(std::vector<std::string>{"x", "y", "u", "v"});
  MPoly x = MPoly::var(ctx, "x"), y = MPoly::var(ctx, "y"),
        u = MPoly::var(ctx, "u"), v = MPoly::var(ctx, "v");
  std::map<int, MPoly> sub{{0, u * u + v}, {1, v.pow(3)}};
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    MPoly p = random_mpoly(rng, ctx, 3, 3);
    MPoly q = random_mpoly(rng, ctx, 3, 3);
    CHECK((p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub));
    CHECK((p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub));
  }
  CHECK(x.substitute(sub) == u * u + v);
  CHECK(y.substitute(sub) == v.pow(3));
}

TEST_CASE("division by a principal ideal detects exact multiples") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"x", "y", "z"});
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 40; ++iter) {
    MPoly g = random_mpoly(rng, ctx, 4, 3);
    if (g.is_zero()) continue;
    MPoly q = random_mpoly(rng, ctx, 4, 3);
    MPoly target = q * g;
    auto cert = qef::mpoly_ideal_member(target, {g});
    REQUIRE(cert.has_value());
    CHECK((*cert)[0] * g == target);
    // Perturbed targets must fall out of the ideal.
    MPoly bad = target + MPoly::one(ctx);
    auto no = qef::mpoly_ideal_member(bad, {g});
    if (!g.is_one()) CHECK(!no.has_value());
  }
}

TEST_CASE("division certificates for coprime-leading-term pairs") {
  auto ctx = std::make_shared<MCtx>(
      std::vector<std::string>{"z", "y", "x", "a", "b"});
  MPoly z = MPoly::var(ctx, "z"), y = MPoly::var(ctx, "y"),
        x = MPoly::var(ctx, "x"), a = MPoly::var(ctx, "a"),
        b = MPoly::var(ctx, "b");
  // Leading terms z^2 and y^2 are coprime, so membership testing by
  // division is exact for this pair.
  MPoly g1 = z * z + b * x * x + a;
  MPoly g2 = y * y + a * y + x.pow(3);
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 30; ++iter) {
    MPoly q1 = random_mpoly(rng, ctx, 3, 2);
    MPoly q2 = random_mpoly(rng, ctx, 3, 2);
    MPoly target = q1 * g1 + q2 * g2;
    auto cert = qef::mpoly_ideal_member(target, {g1, g2});
    REQUIRE(cert.has_value());
    CHECK((*cert)[0] * g1 + (*cert)[1] * g2 == target);
  }
  CHECK(!qef::mpoly_ideal_member(x, {g1, g2}).has_value());
}

TEST_CASE("exponent overflow is loud, not silent") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"x"});
  MPoly x = MPoly::var(ctx, "x");
  MPoly big = x.pow(255);
  CHECK_THROWS_AS(big * x, qef::Error);
  CHECK(big.degree_in(0) == 255);
}

TEST_CASE("context discipline") {
  auto c1 = std::make_shared<MCtx>(std::vector<std::string>{"x"});
  auto c2 = std::make_shared<MCtx>(std::vector<std::string>{"x"});
  CHECK_THROWS_AS(MPoly::var(c1, 0) + MPoly::var(c2, 0), qef::Error);
  CHECK_THROWS_AS(
      std::make_shared<MCtx>(std::vector<std::string>{"x", "x"}), qef::Error);
}

}  // TEST_SUITE
