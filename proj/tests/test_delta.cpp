// Copyright 2026 the qef authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "doctest.h"
#include "qef/delta.hpp"
#include "qef/expansions.hpp"
#include "qef/group_law.hpp"

TEST_SUITE_BEGIN("delta");

using qef::Gf2k;
using qef::Laurent;
using qef::PlaneCurve;
using qef::ProjPoint;
using T3 = qef::TriPoly<Gf2k>;
using PC = PlaneCurve<Gf2k>;
using PP = ProjPoint<Gf2k>;
using L = Laurent<Gf2k>;

namespace {

/// c x^4 + (z^2 + b y^2 + a b x^2)(e (z^2 + b y^2 + a b x^2) + y^2 + xy
/// + a x^2), the quartic family under test.
T3 quartic_form(const Gf2k& a, const Gf2k& b, const Gf2k& c, const Gf2k& e) {
  const T3 W = T3::monomial(a.one(), 0, 0, 2) + T3::monomial(b, 0, 2, 0) +
               T3::monomial(a * b, 2, 0, 0);
  const T3 T = W.scale(e) + T3::monomial(a.one(), 0, 2, 0) +
               T3::monomial(a.one(), 1, 1, 0) + T3::monomial(a, 2, 0, 0);
  return T3::monomial(c, 4, 0, 0) + W * T;
}

PC quartic(const Gf2k& a, const Gf2k& b, const Gf2k& c, const Gf2k& e) {
  return PC(quartic_form(a, b, c, e));
}

/// The double point every c != 0 fibre carries.
PP double_point(const Gf2k& b) {
  return PP(b.zero(), b.one(), b.sqrt());
}

}  // namespace

TEST_CASE("delta is two at the double point of smooth-genus fibres") {
  // c != 0 and e != 0: the only singular point is (0 : 1 : sqrt(b)), a
  // double point whose single branch needs two blowups.
  struct Fibre {
    int k, a, b, c, e;
  };
  const std::vector<Fibre> fibres = {{2, 0, 2, 1, 1}, {2, 2, 2, 1, 2},
                                     {2, 1, 3, 2, 1}, {2, 3, 1, 3, 3},
                                     {3, 0, 2, 1, 1}, {3, 2, 5, 3, 2},
                                     {3, 6, 7, 4, 5}};
  for (const auto& f : fibres) {
    CAPTURE(f.k);
    CAPTURE(f.b);
    auto e = [&f](int v) { return Gf2k(f.k, uint32_t(v)); };
    const PC q = quartic(e(f.a), e(f.b), e(f.c), e(f.e));
    CHECK(qef::delta_blowup(q, double_point(e(f.b))) == 2);
  }
}

TEST_CASE("delta is one at a node and at a cusp") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2), g = Gf2k::gen(2);

  // nodal cubic y^2 z + xyz = x^3 + a x^2 z: node at (0 : 0 : 1)
  for (const Gf2k& a : qef::gf2k_elements(2)) {
    const qef::Weierstrass<Gf2k> w{o, a, z, z, z};
    const PC nodal = qef::cubic_curve(w);
    CHECK(qef::delta_blowup(nodal, PP(z, z, o)) == 1);
  }

  // cuspidal cubic y^2 z = x^3: cusp at (0 : 0 : 1)
  const PC cusp(T3::monomial(o, 0, 2, 1) + T3::monomial(o, 3, 0, 0));
  CHECK(qef::delta_blowup(cusp, PP(z, z, o)) == 1);

  // e = 0 fibre: the strange point (0 : 0 : 1) joins the curve as a node
  const PC q0 = quartic(z, g, o, z);
  CHECK(qef::delta_blowup(q0, PP(z, z, o)) == 1);
  CHECK(qef::delta_blowup(q0, double_point(g)) == 2);
}

TEST_CASE("smooth points have delta zero and off-curve points throw") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2), g = Gf2k::gen(2);
  const PC q = quartic(z, g, o, o);
  CHECK(qef::delta_blowup(q, PP(o, z, o)) == 0);
  CHECK_THROWS_AS(qef::delta_blowup(q, PP(o, o, z)), qef::Error);
}

TEST_CASE("a square factor is flagged as a non-isolated singularity") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2);
  // x^2 (y^2 + xz) vanishes doubly along the line x = 0
  const PC dbl(T3::monomial(o, 2, 0, 0) *
               (T3::monomial(o, 0, 2, 0) + T3::monomial(o, 1, 0, 1)));
  CHECK_THROWS_WITH(qef::delta_blowup(dbl, PP(z, z, o)),
                    "delta_blowup: singularity is not isolated");
}

TEST_CASE("semigroup deltas of monomial branches") {
  const Gf2k o = Gf2k::one(2);
  const L t = L::t(o.zero());

  // (t, t): the algebra is the whole power-series ring
  CHECK(qef::delta_semigroup(t, t) == 0);
  // (t^2, t^3): semigroup <2, 3>, one gap
  CHECK(qef::delta_semigroup(t.pow(2), t.pow(3)) == 1);
  // (t^2, t^5): semigroup <2, 5>, gaps {1, 3}
  CHECK(qef::delta_semigroup(t.pow(2), t.pow(5)) == 2);
  // (t^3, t^4): gaps {1, 2, 5}
  CHECK(qef::delta_semigroup(t.pow(3), t.pow(4)) == 3);

  // non-positive orders are rejected
  CHECK_THROWS_AS(qef::delta_semigroup(L::monomial(o, 0), t), qef::Error);
  // (t^2, t^4): even orders only, the conductor never certifies
  CHECK_THROWS_WITH(qef::delta_semigroup(t.pow(2), t.pow(4)),
                    "delta_semigroup: cannot certify the conductor");
}

TEST_CASE("branch parametrization and blowup agree on the double point") {
  // The branch (x, z)(t) through (0 : 1 : sqrt(b)) of the fibre
  // (a^2, b^2, c^2, e^2) has x = t^2 and z - z(0) of order 2 (a != 0) or
  // 4 (a = 0); either way the value semigroup is {0, 2, 4, 5, ...}.
  for (int k : {2, 3}) {
    for (uint32_t bits = 0; bits < (uint32_t(1) << k); ++bits) {
      const Gf2k a(k, bits);
      const Gf2k b = Gf2k::gen(k), c = Gf2k::one(k), e = Gf2k::gen(k);
      const int prec = a.is_zero() ? 16 : 8;
      const auto br = qef::branch_parametrization(a, b, c, e, prec);
      const L w = br.z + L::monomial(br.z.coeff(0), 0);
      const int ds = qef::delta_semigroup(br.x, w);
      const PC q = quartic(a * a, b * b, c * c, e * e);
      CHECK(ds == 2);
      CHECK(qef::delta_blowup(q, double_point(b * b)) == ds);
    }
  }
}

TEST_CASE("insufficient precision is reported, not guessed") {
  const Gf2k a = Gf2k::zero(2), b = Gf2k::gen(2), c = Gf2k::one(2);
  // a = 0 pushes ord(z - z(0)) to 4, so the window needs 16 coefficients
  const auto br = qef::branch_parametrization(a, b, c, b, 12);
  const L w = br.z + L::monomial(br.z.coeff(0), 0);
  CHECK_THROWS_WITH(qef::delta_semigroup(br.x, w),
                    "delta_semigroup: insufficient precision");
}

TEST_CASE("geometric genus across the fibre taxonomy") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2), g = Gf2k::gen(2);

  // c != 0, e != 0: one double point, genus 3 - 2 = 1
  CHECK(qef::geometric_genus_of_quartic(quartic(z, g, o, o)) == 1);
  CHECK(qef::geometric_genus_of_quartic(quartic(g, g * g, g, o)) == 1);
  // c != 0, e = 0: an extra node, genus 0
  CHECK(qef::geometric_genus_of_quartic(quartic(z, g, o, z)) == 0);
  CHECK(qef::geometric_genus_of_quartic(quartic(o, g, g, z)) == 0);

  // smooth control: x^3 y + y^3 z + z^3 x
  const PC klein(T3::monomial(o, 3, 1, 0) + T3::monomial(o, 0, 3, 1) +
                 T3::monomial(o, 1, 0, 3));
  CHECK(qef::geometric_genus_of_quartic(klein) == 3);

  // c = 0 fibres are reducible and rejected
  CHECK_THROWS_AS(qef::geometric_genus_of_quartic(quartic(z, g, z, o)),
                  qef::Error);
  // so are non-quartic inputs
  const PC cubic(T3::monomial(o, 0, 2, 1) + T3::monomial(o, 3, 0, 0));
  CHECK_THROWS_AS(qef::geometric_genus_of_quartic(cubic), qef::Error);
}

TEST_CASE("conjugate blowup directions are chased into extensions") {
  // Over GF(2) with a = 1 the node of the e = 0 fibre has tangent
  // directions s^2 + s + 1 = 0, a conjugate pair in GF(4); the blowup
  // and the genus scan both have to leave the base field.
  const Gf2k z1 = Gf2k::zero(1), o1 = Gf2k::one(1);
  const PC q = quartic(o1, o1, o1, z1);
  CHECK(qef::delta_blowup(q, PP(z1, z1, o1)) == 1);
  CHECK(qef::geometric_genus_of_quartic(q) == 0);
}

TEST_SUITE_END();
