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

#include <optional>
#include <utility>
#include <vector>

#include "qef/plane_curve.hpp"
#include "qef/weierstrass.hpp"

namespace qef {

/// Homogeneous cubic of the Weierstrass equation:
/// y^2 z + a1 xyz + a3 yz^2 + x^3 + a2 x^2 z + a4 xz^2 + a6 z^3.
template <class K>
PlaneCurve<K> cubic_curve(const Weierstrass<K>& w) {
  using T = TriPoly<K>;
  const K one = w.a1.one();
  T f = T::monomial(one, 0, 2, 1) + T::monomial(w.a1, 1, 1, 1) +
        T::monomial(w.a3, 0, 1, 2) + T::monomial(one, 3, 0, 0) +
        T::monomial(w.a2, 2, 0, 1) + T::monomial(w.a4, 1, 0, 2) +
        T::monomial(w.a6, 0, 0, 3);
  return PlaneCurve<K>(f);
}

template <class K>
ProjPoint<K> neutral_point(const K& zero) {
  return ProjPoint<K>(zero, zero.one(), zero);
}

/// The hyperelliptic involution y |-> y + a1 x + a3, fixing the neutral
/// point.
template <class K>
ProjPoint<K> group_negate(const Weierstrass<K>& w, const ProjPoint<K>& p) {
  if (p.z().is_zero()) return p;
  return ProjPoint<K>(p.x(), p.y() + w.a1 * p.x() + w.a3, p.z());
}

namespace detail {

/// Coordinates (u, v) of p in the basis (s0, s1) of a line.
template <class K>
std::pair<K, K> coords_in_span(const ProjPoint<K>& p, const ProjPoint<K>& s0,
                               const ProjPoint<K>& s1) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      K det = s0.coord(i) * s1.coord(j) + s0.coord(j) * s1.coord(i);
      if (det.is_zero()) continue;
      K u = (p.coord(i) * s1.coord(j) + p.coord(j) * s1.coord(i)) / det;
      K v = (s0.coord(i) * p.coord(j) + s0.coord(j) * p.coord(i)) / det;
      return {u, v};
    }
  throw Error("coords_in_span: degenerate span");
}

/// Exact division of a binary form (coefficients of u^i v^(d-i)) by the
/// linear form vanishing at (u0 : v0).
template <class K>
std::vector<K> binform_divide_root(const std::vector<K>& c, const K& u0,
                                   const K& v0) {
  const size_t d = c.size() - 1;
  std::vector<K> q(d, u0.zero());
  if (!v0.is_zero()) {
    // divide by v0*u + u0*v
    q[d - 1] = c[d] / v0;
    for (size_t i = d - 1; i >= 1; --i) q[i - 1] = (c[i] + u0 * q[i]) / v0;
    if (c[0] != u0 * q[0])
      throw Error("binform_divide_root: not a root");
  } else {
    // divide by u0*v
    if (!c[d].is_zero()) throw Error("binform_divide_root: not a root");
    for (size_t i = 0; i < d; ++i) q[i] = c[i] / u0;
  }
  return q;
}

}  // namespace detail

/// Chord-tangent addition with neutral element (0:1:0): draw the line
/// through P and Q (the tangent when they coincide), restrict the cubic to
/// it, divide out the two known roots, and reflect the third intersection
/// point through the involution.
template <class K>
ProjPoint<K> group_add(const Weierstrass<K>& w, const ProjPoint<K>& p,
                       const ProjPoint<K>& q) {
  if (discriminant(w).is_zero()) throw Error("group_add: singular cubic");
  const PlaneCurve<K> c = cubic_curve(w);
  if (!c.contains(p) || !c.contains(q))
    throw Error("group_add: point not on curve");
  const ProjPoint<K> o = neutral_point(w.a1.zero());
  if (p == o) return q;
  if (q == o) return p;
  const Line<K> l = (p == q) ? tangent_line(c, p) : line_through(p, q);
  const auto [s0, s1] = l.span();
  std::vector<K> b = restrict_to_line(c, s0, s1);
  const auto [up, vp] = detail::coords_in_span(p, s0, s1);
  const auto [uq, vq] = detail::coords_in_span(q, s0, s1);
  b = detail::binform_divide_root(b, up, vp);
  b = detail::binform_divide_root(b, uq, vq);
  // b = b[1]*u + b[0]*v vanishes at (b[0] : b[1])
  ProjPoint<K> r(b[0] * s0.x() + b[1] * s1.x(), b[0] * s0.y() + b[1] * s1.y(),
                 b[0] * s0.z() + b[1] * s1.z());
  return group_negate(w, r);
}

/// n-fold sum by repeated addition (orders in this project are tiny).
template <class K>
ProjPoint<K> group_scale(const Weierstrass<K>& w, int n,
                         const ProjPoint<K>& p) {
  ProjPoint<K> acc = neutral_point(w.a1.zero());
  for (int i = 0; i < n; ++i) acc = group_add(w, acc, p);
  return acc;
}

/// Least n <= bound with n*P = O, if any.
template <class K>
std::optional<int> point_order(const Weierstrass<K>& w, const ProjPoint<K>& p,
                               int bound) {
  const ProjPoint<K> o = neutral_point(w.a1.zero());
  ProjPoint<K> acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc == o) return n;
    acc = group_add(w, acc, p);
  }
  return std::nullopt;
}

}  // namespace qef
