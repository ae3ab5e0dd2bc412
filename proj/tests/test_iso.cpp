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

#include <random>
#include <string>

#include "doctest.h"
#include "qef/iso.hpp"

TEST_SUITE_BEGIN("iso");

using qef::Gf2k;
using qef::IsoWitness;
using qef::Poly;
using qef::QuarticParams;
using qef::RatFunc;
using QR = QuarticParams<RatFunc>;
using W = IsoWitness<RatFunc>;

namespace {

constexpr int kK = 2;

RatFunc random_poly(std::mt19937& rng, int maxdeg, bool nonzero) {
  std::vector<Gf2k> c;
  for (int i = 0; i <= maxdeg; ++i)
    c.emplace_back(kK, uint32_t(rng() & 3u));
  Poly p(kK, c);
  if (nonzero && p.is_zero()) p = Poly::one(kK);
  return RatFunc(p);
}

/// A source whose a admits the handy admissible factors below.
QR base_params() {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK);
  return QR{t, t * t * t + t, one, t};
}

}  // namespace

TEST_CASE("identity witness and the eta obstruction") {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK),
                zero = RatFunc::zero(kK);
  const QR q{zero, t, one, one};

  auto id = qef::isomorphism_decide(q, q);
  REQUIRE(id.has_value());
  CHECK(*id == W{one, zero, zero, zero});
  CHECK(qef::forward_transform(q, *id) == q);

  std::string reason;
  const QR other{zero, t, one, t};
  CHECK(!qef::isomorphism_decide(q, other, &reason).has_value());
  CHECK(reason == "eta");
}

TEST_CASE("witness composition matches sequential application") {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK),
                zero = RatFunc::zero(kK);
  const QR q = base_params();
  // two admissible steps: sigma = t (so sigma^2 + sigma + a = t^2 and
  // b sigma is a square), then a beta-only step on the image, where the
  // transformed a = t^2 is a square
  const W w1{one + t, t, one, one * t + t * t + t};
  const W w2{RatFunc::constant(Gf2k::gen(kK)), zero, t, t * t};
  const QR mid = qef::forward_transform(q, w1);
  CHECK(mid.a == t * t);
  const QR end = qef::forward_transform(mid, w2);
  CHECK(qef::forward_transform(q, qef::compose_witnesses(w1, w2)) == end);
}

TEST_CASE("one hundred random admissible changes are recognized") {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK),
                zero = RatFunc::zero(kK);
  const QR q1 = base_params();
  std::mt19937 rng{7};

  for (int trial = 0; trial < 100; ++trial) {
    // step 1: sigma = t is admissible for a = t with any beta
    const RatFunc a1 = random_poly(rng, 1, true), b1 = random_poly(rng, 1, false);
    const W w1{a1, t, b1, b1 * t + t * t + t};
    // step 2: the image has square a = t^2, so sigma = 0 frees beta
    const RatFunc a2 = RatFunc::constant(Gf2k(kK, uint32_t(1 + (rng() % 3)))),
                  b2 = random_poly(rng, 2, false);
    const W w2{a2, zero, b2, t * b2};
    const QR mid = qef::forward_transform(qef::forward_transform(q1, w1), w2);
    // step 3: a beta-free step on mid needs b * sigma a square, so take
    // sigma = b u^2 with u clearing b's denominator to keep sigma polynomial
    const RatFunc v = random_poly(rng, 1, false);
    const RatFunc u = RatFunc(mid.b.den()) * v;
    const W w3{one, mid.b * u * u, zero, mid.b * u};

    const QR q2 = qef::forward_transform(mid, w3);
    const W total = qef::compose_witnesses(qef::compose_witnesses(w1, w2), w3);
    CHECK(qef::forward_transform(q1, total) == q2);

    const auto decided = qef::isomorphism_decide(q1, q2);
    REQUIRE(decided.has_value());
    CHECK(qef::forward_transform(q1, *decided) == q2);
  }
}

TEST_CASE("rejection reasons: c ratio, b shift, gamma") {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK);
  const QR q1 = base_params();
  std::string reason;

  // same eta, c off by the non-square t
  const QR qc{q1.a, q1.b, t, one};
  CHECK(!qef::isomorphism_decide(q1, qc, &reason).has_value());
  CHECK(reason == "c ratio not a square");

  // same eta and c, but b1 + b2 = t is not a square
  const QR qb{q1.a, t * t * t, one, t};
  CHECK(!qef::isomorphism_decide(q1, qb, &reason).has_value());
  CHECK(reason == "b shift not a square");
}

TEST_CASE("the a shift outside the solvable fragment") {
  const RatFunc t = RatFunc::t(kK), one = RatFunc::one(kK),
                zero = RatFunc::zero(kK);
  const QR q1 = base_params();
  std::string reason;

  // difference t has odd degree: no polynomial Artin-Schreier solution
  const QR qa{q1.a + t, q1.b, one, t};
  CHECK(!qef::isomorphism_decide(q1, qa, &reason).has_value());
  CHECK(reason == "a shift not Artin-Schreier solvable");

  // a pole-bearing difference is not decided at all
  const QR qp{t.inv(), q1.b, one, t};
  CHECK_THROWS_AS(qef::isomorphism_decide(q1, qp),
                  qef::UnsupportedFragment);

  // degenerate records are rejected up front
  const QR qz{zero, q1.b, zero, t};
  CHECK_THROWS_AS(qef::isomorphism_decide(q1, qz), qef::Error);
  const QR qs{zero, t * t, one, t};
  CHECK_THROWS_AS(qef::isomorphism_decide(q1, qs), qef::Error);
}

TEST_SUITE_END();
