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

#pragma once

#include "qef/laurent.hpp"
#include "qef/weierstrass.hpp"

namespace qef {

/// Expansion of u := 1/y at the point at infinity of a Weierstrass cubic in
/// the local parameter t = x/y.  Substituting x = t/u, y = 1/u into the
/// curve equation and clearing u^3 gives the fixed-point relation
///   u = t^3 + a1 t u + a2 t^2 u + a3 u^2 + a4 t u^2 + a6 u^3,
/// which is iterated from u = t^3.  Every occurrence of u on the right is
/// damped by positive t-order, so each pass pins at least one more
/// coefficient; the recursion involves no division and runs over any
/// characteristic-2 coefficient ring.
template <class R>
Laurent<R> expand_inv_y_at_infinity(const Weierstrass<R>& w, int prec) {
  using L = Laurent<R>;
  if (prec <= 3) throw Error("expansion precision must exceed the lead order");
  const R zero = w.a1.zero();
  L t3 = L::monomial(zero.one(), 3);
  L u = t3.truncate(prec);
  while (true) {
    L u2 = u * u;
    L next = (t3 + (L::monomial(w.a1, 1) + L::monomial(w.a2, 2)) * u +
              (L::monomial(w.a3, 0) + L::monomial(w.a4, 1)) * u2 +
              L::monomial(w.a6, 0) * u2 * u)
                 .truncate(prec);
    if (next == u) return u;
    u = next;
  }
}

/// Laurent expansion of y itself: y = 1/u = t^-3 + a1 t^-2 + ....
/// The companion coordinate is x = t*y, i.e. the shift by one.
template <class R>
Laurent<R> expand_y_at_infinity(const Weierstrass<R>& w, int prec) {
  return expand_inv_y_at_infinity(w, prec + 6).inverse(prec);
}

/// A square generator z^2 = b0 y^2 + b1 xy + b2 x^2 + b3 y + c x + d sitting
/// over a Weierstrass curve.
template <class R>
struct ZSquaredModel {
  Weierstrass<R> curve;
  R b0, b1, b2, b3, c, d;
};

template <class R>
Laurent<R> expand_z_squared(const ZSquaredModel<R>& m, int prec) {
  using L = Laurent<R>;
  L y = expand_y_at_infinity(m.curve, prec + 3);
  L y2 = y * y;
  return (y2.scale(m.b0) + y2.shift(1).scale(m.b1) + y2.shift(2).scale(m.b2) +
          y.scale(m.b3) + y.shift(1).scale(m.c) + L::monomial(m.d, 0))
      .truncate(prec);
}

/// Expansion of s' = z'/y' at the marked point (0:1:0) of the cubic
///   y'^2 z' + x' y' z' = x'^3 + a_root x'^2 z' + eta_root x' z'^2
/// in the parameter t' = x'/y'.  In the affine chart z' = 1 this is exactly
/// 1/y on the Weierstrass curve (1, a_root, 0, eta_root, 0), so the series
/// starts t'^3 + t'^4 + (1 + a_root) t'^5 + ....
template <class R>
Laurent<R> expand_tate13(const R& a_root, const R& eta_root, int prec) {
  Weierstrass<R> w{a_root.one(), a_root, a_root.zero(), eta_root,
                   a_root.zero()};
  return expand_inv_y_at_infinity(w, prec);
}

/// One-branch parametrization (x(t'), y(t'), z(t')) of the multiplicity-two
/// singular point (0 : 1 : b_root) of the quartic with parameters
/// (a_root^2, b_root^2, c_root^2, e_root^2):
///   (t'^2 : 1 : b_root + a_root b_root t'^2 + c_root t' s'(t'))
/// where s' is the expand_tate13 series for (a_root, c_root*e_root).
template <class R>
struct BranchParametrization {
  Laurent<R> x, y, z;
};

template <class R>
BranchParametrization<R> branch_parametrization(const R& a_root,
                                                const R& b_root,
                                                const R& c_root,
                                                const R& e_root, int prec) {
  using L = Laurent<R>;
  L s = expand_tate13(a_root, c_root * e_root, prec - 1);
  L z = L::monomial(b_root, 0) + L::monomial(a_root * b_root, 2) +
        s.scale(c_root).shift(1);
  return {L::monomial(a_root.one(), 2), L::monomial(a_root.one(), 0),
          z.truncate(prec)};
}

}  // namespace qef
