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
#include "qef/artin_schreier.hpp"

namespace qef {

std::optional<Poly> artin_schreier_solve(const Poly& r) {
  const int k = r.k();
  Poly rest = r;
  Poly s(k);
  while (rest.deg() >= 1) {
    const int n = rest.deg();
    // s^2 contributes at even degrees 2m > m; an odd top degree can never be
    // matched by s^2 + s.
    if (n % 2 != 0) return std::nullopt;
    const int m = n / 2;
    const Gf2k cm = rest.lc().sqrt();
    const Poly term = Poly::constant(cm).shift(m);
    s += term;
    rest += term * term + term;
  }
  const Gf2k c0 = rest.coeff(0);
  auto s0 = c0.solve_artin_schreier_const();
  if (!s0) return std::nullopt;
  s += Poly::constant(*s0);
  // Canonical choice: smaller constant term of the two solutions s, s+1.
  const Gf2k alt = s.coeff(0) + Gf2k::one(k);
  if (alt < s.coeff(0)) s += Poly::one(k);
  return s;
}

std::optional<Poly> artin_schreier_solve(const RatFunc& r) {
  if (!r.is_polynomial())
    throw UnsupportedFragment(
        "artin_schreier_solve: right-hand side has poles; only polynomial "
        "inputs are supported");
  return artin_schreier_solve(r.num());
}

}  // namespace qef
