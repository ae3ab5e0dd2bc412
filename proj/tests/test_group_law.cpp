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

#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "qef/group_law.hpp"

TEST_SUITE_BEGIN("elliptic");

using qef::Gf2k;
using qef::PlaneCurve;
using qef::ProjPoint;
using qef::Weierstrass;
using PP = ProjPoint<Gf2k>;
using W = Weierstrass<Gf2k>;

namespace {

W curve(int k, int a1, int a2, int a3, int a4, int a6) {
  auto e = [k](int v) { return Gf2k(k, uint32_t(v)); };
  return W{e(a1), e(a2), e(a3), e(a4), e(a6)};
}

/// The five nonsingular bit-pattern shapes exercised below; each has
/// discriminant 1 over every GF(2^k).
std::vector<W> sample_curves(int k) {
  return {curve(k, 1, 0, 0, 1, 0), curve(k, 0, 0, 1, 0, 0),
          curve(k, 1, 1, 0, 0, 1), curve(k, 1, 0, 0, 0, 1),
          curve(k, 1, 1, 0, 1, 0)};
}

}  // namespace

TEST_CASE("neutral element and negation") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2);
  const W w = curve(2, 1, 0, 0, 1, 0);
  const PP O = qef::neutral_point(z);
  const PP p(z, z, o);  // (0, 0) is on the curve: all terms vanish

  CHECK(qef::cubic_curve(w).contains(p));
  CHECK(qef::group_add(w, p, O) == p);
  CHECK(qef::group_add(w, O, p) == p);
  CHECK(qef::group_add(w, O, O) == O);

  // (0, 0) has a vertical tangent, so it is its own negative
  CHECK(qef::group_negate(w, p) == p);
  CHECK(qef::group_add(w, p, p) == O);
  CHECK(qef::group_negate(w, O) == O);
}

TEST_CASE("the group axioms hold on every rational point") {
  for (int k : {2, 3}) {
    for (const W& w : sample_curves(k)) {
      CAPTURE(k);
      CAPTURE(w.str());
      REQUIRE(!qef::discriminant(w).is_zero());
      const PlaneCurve<Gf2k> c = qef::cubic_curve(w);
      const std::vector<PP> pts = qef::enumerate_points(c);
      const int n = int(pts.size());

      // Hasse window |N - (q + 1)| <= 2 sqrt(q)
      const int q = 1 << k;
      CHECK(n >= q + 1 - 2 * (1 << ((k + 1) / 2)));
      CHECK(n <= q + 1 + 2 * (1 << ((k + 1) / 2)));

      std::map<PP, int> idx;
      for (int i = 0; i < n; ++i) idx.emplace(pts[size_t(i)], i);

      // closure + commutativity via the full addition table
      std::vector<std::vector<int>> add(
          static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          PP s = qef::group_add(w, pts[size_t(i)], pts[size_t(j)]);
          auto it = idx.find(s);
          REQUIRE(it != idx.end());
          add[size_t(i)][size_t(j)] = it->second;
          if (i != j) {
            PP t = qef::group_add(w, pts[size_t(j)], pts[size_t(i)]);
            CHECK(t == s);
            add[size_t(j)][size_t(i)] = it->second;
          }
        }

      // identity and inverses
      const int o = idx.at(qef::neutral_point(Gf2k::zero(k)));
      for (int i = 0; i < n; ++i) {
        CHECK(add[size_t(i)][size_t(o)] == i);
        const PP neg = qef::group_negate(w, pts[size_t(i)]);
        CHECK(add[size_t(i)][size_t(idx.at(neg))] == o);
      }

      // associativity on all triples, through the table
      bool assoc = true;
      for (int i = 0; i < n && assoc; ++i)
        for (int j = 0; j < n && assoc; ++j)
          for (int l = 0; l < n && assoc; ++l)
            assoc = add[size_t(add[size_t(i)][size_t(j)])][size_t(l)] ==
                    add[size_t(i)][size_t(add[size_t(j)][size_t(l)])];
      CHECK(assoc);

      // Lagrange: every point order divides the group order
      for (const PP& p : pts) {
        auto ord = qef::point_order(w, p, n);
        REQUIRE(ord.has_value());
        CHECK(n % *ord == 0);
      }
    }
  }
}

TEST_CASE("two-torsion of the shape y^2 + xy = x^3 + a x^2 + eta x") {
  // With a1 = 1, a3 = 0 a point is its own negative iff x = 0, and the
  // only such affine point is (0, 0): the two-torsion is {O, (0, 0)}.
  for (int k : {2, 3}) {
    const Gf2k z = Gf2k::zero(k), o = Gf2k::one(k);
    for (const Gf2k& a : qef::gf2k_elements(k))
      for (const Gf2k& eta : qef::gf2k_elements(k)) {
        if (eta.is_zero()) continue;
        const W w{o, a, z, eta, z};
        std::set<PP> tor2;
        for (const PP& p : qef::enumerate_points(qef::cubic_curve(w)))
          if (qef::group_negate(w, p) == p) tor2.insert(p);
        CHECK(tor2 == std::set<PP>{qef::neutral_point(z), PP(z, z, o)});
      }
  }
}

TEST_CASE("points with y^2 + xy + a x^2 = 0 and x nonzero have order four") {
  // On y^2 + xy = x^3 + eta x (a = 0, eta = 1) over GF(4) that locus is
  // {(1, 0), (1, 1)}; doubling either lands on the two-torsion point.
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2);
  const W w = curve(2, 1, 0, 0, 1, 0);
  for (const PP& p : {PP(o, z, o), PP(o, o, o)}) {
    REQUIRE(qef::cubic_curve(w).contains(p));
    CHECK(p.y() * p.y() + p.x() * p.y() == z);
    CHECK(qef::group_add(w, p, p) == PP(z, z, o));
    CHECK(qef::point_order(w, p, 10) == 4);
  }
  CHECK(qef::point_order(w, qef::neutral_point(z), 10) == 1);
}

TEST_CASE("the supersingular shape has odd group order") {
  // y^2 + y = x^3 has no two-torsion: negation y |-> y + 1 fixes nothing.
  const W w = curve(3, 0, 0, 1, 0, 0);
  const auto pts = qef::enumerate_points(qef::cubic_curve(w));
  CHECK(pts.size() % 2 == 1);
  for (const PP& p : pts) {
    auto ord = qef::point_order(w, p, int(pts.size()));
    REQUIRE(ord.has_value());
    CHECK(*ord % 2 == 1);
  }
}

TEST_CASE("rejects singular curves and points off the curve") {
  const Gf2k z = Gf2k::zero(2), o = Gf2k::one(2);
  const W sing = curve(2, 1, 1, 0, 0, 0);  // discriminant 0
  CHECK(qef::discriminant(sing).is_zero());
  CHECK_THROWS_AS(qef::group_add(sing, PP(z, z, o), PP(z, z, o)), qef::Error);

  const W w = curve(2, 1, 0, 0, 1, 0);
  const Gf2k g = Gf2k::gen(2);  // (g, 0) misses the curve: g^3 + g = g^2
  CHECK(!qef::cubic_curve(w).contains(PP(g, z, o)));
  CHECK_THROWS_AS(qef::group_add(w, PP(g, z, o), PP(z, z, o)), qef::Error);
}

TEST_CASE("curves with distinct j are not related by any coordinate change") {
  const int k = 2;
  const Gf2k o = Gf2k::one(k), g = Gf2k::gen(k);
  const W w1 = curve(k, 1, 0, 0, 1, 0);       // j = 1
  const W w2{o, Gf2k::zero(k), Gf2k::zero(k), g, Gf2k::zero(k)};  // j = g
  const W w3 = curve(k, 0, 0, 1, 0, 0);       // j = 0
  CHECK(qef::j_invariant(w1) == o);
  CHECK(qef::j_invariant(w2) == g);  // 1/g^2 with g^3 = 1
  CHECK(qef::j_invariant(w3).is_zero());

  int hits12 = 0, hits13 = 0, hits11 = 0;
  for (const Gf2k& mu : qef::gf2k_elements(k)) {
    if (mu.is_zero()) continue;
    for (const Gf2k& rho : qef::gf2k_elements(k))
      for (const Gf2k& sigma : qef::gf2k_elements(k))
        for (const Gf2k& tau : qef::gf2k_elements(k)) {
          const qef::TransformParams<Gf2k> p{mu, rho, sigma, tau};
          const W t = qef::transform(w1, p);
          CHECK(qef::j_invariant(t) == qef::j_invariant(w1));
          if (t == w2) ++hits12;
          if (t == w3) ++hits13;
          if (t == w1) ++hits11;
        }
  }
  CHECK(hits12 == 0);
  CHECK(hits13 == 0);
  CHECK(hits11 >= 1);  // the identity change at least
}

TEST_SUITE_END();
