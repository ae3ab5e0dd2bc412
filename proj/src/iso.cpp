/*
 * Copyright 2026 the qef authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
 * implied. See the License for the specific language governing
 * permissions and limitations under the License.
 */
#include "qef/iso.hpp"

#include <array>

#include "qef/plane_curve.hpp"

namespace qef {

namespace {

void check_arithmetic_valid(const QuarticParams<RatFunc>& q,
                            const char* side) {
  if (q.c.is_zero() || q.e.is_zero())
    throw Error(std::string("isomorphism_decide: degenerate parameters (") +
                side + ")");
  if (q.b.is_square())
    throw Error(std::string("isomorphism_decide: b must be a non-square (") +
                side + ")");
}

std::optional<IsoWitness<RatFunc>> fail(std::string* reason,
                                        const char* why) {
  if (reason) *reason = why;
  return std::nullopt;
}

/// The composed quartic form must equal alpha^2 times the target form.
bool verifies_by_substitution(const QuarticParams<RatFunc>& q1,
                              const QuarticParams<RatFunc>& q2,
                              const IsoWitness<RatFunc>& w) {
  using T = TriPoly<RatFunc>;
  const RatFunc zero = RatFunc::zero(q1.a.k());
  const T xp = T::coordinate(zero, 0), yp = T::coordinate(zero, 1),
          zp = T::coordinate(zero, 2);
  const std::array<T, 3> change = {
      xp, yp + xp.scale(w.sigma),
      zp.scale(w.alpha) + yp.scale(w.beta) + xp.scale(w.gamma)};
  return quartic_form_of(q1).compose(change) ==
         quartic_form_of(q2).scale(w.alpha * w.alpha);
}

}  // namespace

std::optional<IsoWitness<RatFunc>> isomorphism_decide(
    const QuarticParams<RatFunc>& q1, const QuarticParams<RatFunc>& q2,
    std::string* reason) {
  check_arithmetic_valid(q1, "left");
  check_arithmetic_valid(q2, "right");

  if (q1.eta() != q2.eta()) return fail(reason, "eta");

  const auto alpha = (q1.c / q2.c).sqrt();
  if (!alpha) return fail(reason, "c ratio not a square");

  const auto beta = (q1.b + *alpha * *alpha * q2.b).sqrt();
  if (!beta) return fail(reason, "b shift not a square");

  const auto s = artin_schreier_solve(q1.a + q2.a);
  if (!s) return fail(reason, "a shift not Artin-Schreier solvable");

  const int k = q1.a.k();
  for (const RatFunc& sigma :
       {RatFunc(*s), RatFunc(*s + Poly::one(k))}) {
    const RatFunc b2 = *beta * *beta;
    const auto gamma =
        (b2 * sigma * sigma + (q1.b + b2) * sigma + q1.a * b2).sqrt();
    if (!gamma) continue;
    const IsoWitness<RatFunc> w{*alpha, sigma, *beta, *gamma};
    if (!verifies_by_substitution(q1, q2, w))
      throw Error("isomorphism_decide: witness failed re-verification");
    return w;
  }
  return fail(reason, "gamma equation has no square solution");
}

}  // namespace qef
