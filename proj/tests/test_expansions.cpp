#include "doctest.h"
#include "qef/expansions.hpp"
#include "qef/mpoly.hpp"

#include <random>

using qef::BranchParametrization;
using qef::Gf2k;
using qef::Laurent;
using qef::MCtx;
using qef::MPoly;
using qef::Weierstrass;
using qef::ZSquaredModel;

namespace {

Gf2k rnd_elt(std::mt19937_64& rng, int k) {
  return Gf2k(k, uint32_t(rng() & ((1u << k) - 1)));
}

/// The curve equation evaluated on the expansion; known_zero() certifies
/// every coefficient the series arithmetic can trust.
template <class R>
Laurent<R> curve_residual(const Weierstrass<R>& w, const Laurent<R>& y) {
  using L = Laurent<R>;
  L x = y.shift(1);  // x = t*y
  return y * y + (x * y).scale(w.a1) + y.scale(w.a3) + x * x * x +
         (x * x).scale(w.a2) + x.scale(w.a4) + L::monomial(w.a6, 0);
}

/// c x^4 + (z^2 + b y^2 + a b x^2)(e(z^2 + b y^2 + a b x^2) + y^2 + xy + ax^2)
/// evaluated on a parametrized branch.
template <class R>
Laurent<R> quartic_residual(const R& a, const R& b, const R& c, const R& e,
                            const BranchParametrization<R>& p) {
  using L = Laurent<R>;
  L w = p.z * p.z + (p.y * p.y).scale(b) + (p.x * p.x).scale(a * b);
  L tail = w.scale(e) + p.y * p.y + p.x * p.y + (p.x * p.x).scale(a);
  return p.x.pow(4).scale(c) + w * tail;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("leading coefficients of y at infinity, symbolically") {
  auto ctx = std::make_shared<MCtx>(
      std::vector<std::string>{"a1", "a2", "a3", "a4", "a6"});
  auto V = [&](const char* n) { return MPoly::var(ctx, n); };
  MPoly a1 = V("a1"), a2 = V("a2"), a3 = V("a3"), a4 = V("a4"), a6 = V("a6");
  Weierstrass<MPoly> w{a1, a2, a3, a4, a6};

  Laurent<MPoly> y = qef::expand_y_at_infinity(w, 2);
  CHECK(y.ord().value() == -3);
  CHECK(y.coeff(-3).is_one());
  CHECK(y.coeff(-2) == a1);
  CHECK(y.coeff(-1) == a2);
  CHECK(y.coeff(0) == a3);
  CHECK(y.coeff(1) == a4 + a1 * a3);

  // u = 1/y itself starts t^3 + a1 t^4 + ....
  Laurent<MPoly> u = qef::expand_inv_y_at_infinity(w, 6);
  CHECK(u.ord().value() == 3);
  CHECK(u.coeff(3).is_one());
  CHECK(u.coeff(4) == a1);
  CHECK_THROWS_AS(qef::expand_inv_y_at_infinity(w, 3), qef::Error);
}

TEST_CASE("the expansion satisfies its own curve equation") {
  auto ctx = std::make_shared<MCtx>(
      std::vector<std::string>{"a1", "a2", "a3", "a4", "a6"});
  auto V = [&](const char* n) { return MPoly::var(ctx, n); };
  Weierstrass<MPoly> w{V("a1"), V("a2"), V("a3"), V("a4"), V("a6")};
  Laurent<MPoly> y = qef::expand_y_at_infinity(w, 6);
  Laurent<MPoly> res = curve_residual(w, y);
  CHECK(res.known_zero());
  CHECK(res.prec() == 3);  // orders -6..2 all verified zero

  std::mt19937_64 rng(53);
  const int k = 3;
  for (int iter = 0; iter < 100; ++iter) {
    Weierstrass<Gf2k> wk{rnd_elt(rng, k), rnd_elt(rng, k), rnd_elt(rng, k),
                         rnd_elt(rng, k), rnd_elt(rng, k)};
    Laurent<Gf2k> yk = qef::expand_y_at_infinity(wk, 8);
    CHECK(curve_residual(wk, yk).known_zero());
  }
}

TEST_CASE("z^2 coefficients for the a1 = 0 shape") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{
      "a", "a4", "a6", "b0", "b1", "b2", "b3", "c", "d"});
  auto V = [&](const char* n) { return MPoly::var(ctx, n); };
  MPoly a = V("a"), a4 = V("a4"), a6 = V("a6");
  MPoly b0 = V("b0"), b1 = V("b1"), b2 = V("b2"), b3 = V("b3");
  MPoly c = V("c"), d = V("d");
  MPoly zero = MPoly::zero(ctx);
  Weierstrass<MPoly> w{zero, zero, a, a4, a6};

  Laurent<MPoly> y = qef::expand_y_at_infinity(w, 2);
  CHECK(y.coeff(-3).is_one());
  CHECK(y.coeff(-2).is_zero());
  CHECK(y.coeff(-1).is_zero());
  CHECK(y.coeff(0) == a);
  CHECK(y.coeff(1) == a4);

  ZSquaredModel<MPoly> m{w, b0, b1, b2, b3, c, d};
  Laurent<MPoly> z2 = qef::expand_z_squared(m, 2);
  CHECK(z2.coeff(-6) == b0);
  CHECK(z2.coeff(-5) == b1);
  CHECK(z2.coeff(-4) == b2);
  CHECK(z2.coeff(-3) == b3);
  CHECK(z2.coeff(-2) == c);
  CHECK(z2.coeff(-1).is_zero());
  CHECK(z2.coeff(0) == d + a * b3 + a * a * b0);
  CHECK(z2.coeff(1) == a * c + a * a * b1 + a4 * b3);
}

TEST_CASE("z^2 coefficients for the a1 = 1 shape") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{
      "a", "D", "b", "b1", "b2", "b3", "c", "d"});
  auto V = [&](const char* n) { return MPoly::var(ctx, n); };
  MPoly a = V("a"), D = V("D"), b = V("b");
  MPoly b1 = V("b1"), b2 = V("b2"), b3 = V("b3"), c = V("c"), d = V("d");
  MPoly zero = MPoly::zero(ctx), one = MPoly::one(ctx);
  Weierstrass<MPoly> w{one, a, zero, zero, D};

  Laurent<MPoly> y = qef::expand_y_at_infinity(w, 2);
  CHECK(y.coeff(-3).is_one());
  CHECK(y.coeff(-2).is_one());
  CHECK(y.coeff(-1) == a);
  CHECK(y.coeff(0).is_zero());
  CHECK(y.coeff(1).is_zero());

  ZSquaredModel<MPoly> m{w, b, b1, b2, b3, c, d};
  Laurent<MPoly> z2 = qef::expand_z_squared(m, 2);
  CHECK(z2.coeff(-6) == b);
  CHECK(z2.coeff(-5) == b1);
  CHECK(z2.coeff(-4) == b + b2);
  CHECK(z2.coeff(-3) == b1 + b3);
  CHECK(z2.coeff(-2) == a * a * b + b2 + b3 + c);
  CHECK(z2.coeff(-1) == a * a * b1 + a * b3 + c);
  CHECK(z2.coeff(0) == a * a * b2 + a * c + d);
  CHECK(z2.coeff(1).is_zero());

  ZSquaredModel<MPoly> none{w, zero, zero, zero, zero, zero, zero};
  CHECK(qef::expand_z_squared(none, 2).known_zero());
}

TEST_CASE("marked-point parameter series of the cubic") {
  auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"A", "H"});
  MPoly A = MPoly::var(ctx, "A"), H = MPoly::var(ctx, "H");
  MPoly one = MPoly::one(ctx);
  Laurent<MPoly> s = qef::expand_tate13(A, H, 8);
  CHECK(s.ord().value() == 3);
  CHECK(s.coeff(3).is_one());
  CHECK(s.coeff(4).is_one());
  CHECK(s.coeff(5) == one + A);
  CHECK(s.coeff(6).is_one());
  CHECK(s.coeff(7) == one + A + A * A + H);

  // Both parameters zero degenerates to the nodal cubic, u = t^3/(1+t).
  Laurent<Gf2k> sn = qef::expand_tate13(Gf2k::zero(2), Gf2k::zero(2), 8);
  for (int n = 3; n < 8; ++n) CHECK(sn.coeff(n).is_one());
}

TEST_CASE("branch through the double point, symbolically") {
  auto ctx =
      std::make_shared<MCtx>(std::vector<std::string>{"A", "B", "C", "E"});
  auto V = [&](const char* n) { return MPoly::var(ctx, n); };
  MPoly A = V("A"), B = V("B"), C = V("C"), E = V("E");
  MPoly one = MPoly::one(ctx);

  BranchParametrization<MPoly> p = qef::branch_parametrization(A, B, C, E, 12);
  CHECK(p.x == Laurent<MPoly>::monomial(one, 2));
  CHECK(p.y == Laurent<MPoly>::monomial(one, 0));
  CHECK(p.z.coeff(0) == B);
  CHECK(p.z.coeff(1).is_zero());
  CHECK(p.z.coeff(2) == A * B);
  CHECK(p.z.coeff(3).is_zero());
  CHECK(p.z.coeff(4) == C);
  CHECK(p.z.coeff(5) == C);

  // The branch lies on the quartic with parameters (A^2, B^2, C^2, E^2).
  Laurent<MPoly> res =
      quartic_residual(A * A, B * B, C * C, E * E, p);
  CHECK(res.known_zero());
  CHECK(res.prec() == 12);
}

TEST_CASE("branch substitution vanishes over small fields") {
  {
    const int k = 2;
    Gf2k A = Gf2k::zero(k), B = Gf2k::gen(k);
    Gf2k C = Gf2k::one(k), E = Gf2k::one(k);
    auto p = qef::branch_parametrization(A, B, C, E, 16);
    CHECK(quartic_residual(A * A, B * B, C * C, E * E, p).known_zero());
  }
  std::mt19937_64 rng(59);
  const int k = 3;
  for (int iter = 0; iter < 30; ++iter) {
    Gf2k A = rnd_elt(rng, k), B = rnd_elt(rng, k);
    Gf2k C = rnd_elt(rng, k), E = rnd_elt(rng, k);
    auto p = qef::branch_parametrization(A, B, C, E, 12);
    CHECK(quartic_residual(A * A, B * B, C * C, E * E, p).known_zero());
  }
}

}  // TEST_SUITE
