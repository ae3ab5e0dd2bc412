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

#include "qef/delta.hpp"

#include <map>

namespace qef {
namespace {

constexpr int kMaxBlowupDepth = 64;

using T3 = TriPoly<Gf2k>;

// Affine local equation at P, in the coordinates (x, y) of the chart given
// by the largest nonzero coordinate, with P moved to the origin.
T3 local_form(const PlaneCurve<Gf2k>& c, const ProjPoint<Gf2k>& p) {
  const Gf2k zero = c.form().ring_zero();
  int chart = 2;
  while (p.coord(chart).is_zero()) --chart;
  std::array<T3, 3> vals{T3(zero), T3(zero), T3(zero)};
  int slot = 0;
  for (int v = 0; v < 3; ++v) {
    if (v == chart) {
      vals[size_t(v)] = T3::constant(zero.one());
    } else {
      vals[size_t(v)] =
          T3::coordinate(zero, slot) + T3::constant(p.coord(v));
      ++slot;
    }
  }
  return c.form().compose(vals);
}

T3 embed_bivariate(const T3& f, int m) {
  T3 g(Gf2k::zero(m));
  for (const auto& [key, coeff] : f.terms())
    g += T3::monomial(coeff.embed_into(m), key[0], key[1], key[2]);
  return g;
}

int delta_affine(const T3& f, int depth) {
  if (depth > kMaxBlowupDepth)
    throw Error("delta_blowup: singularity is not isolated");
  const int m = f.min_total_degree();
  if (m <= 1) return 0;
  int delta = m * (m - 1) / 2;

  const Gf2k zero = f.ring_zero();
  const int k = zero.k();
  // lowest form restricted to (1, s): tangent direction polynomial
  std::vector<Gf2k> pc(size_t(m + 1), zero);
  for (const auto& [key, coeff] : f.terms())
    if (key[0] + key[1] == m) pc[size_t(key[1])] = coeff;
  Poly p(k, pc);

  int covered = m - p.deg();
  if (p.deg() < m) {
    // direction (0:1): substitute x -> xy and strip y^m
    T3 g = f.compose({T3::coordinate(zero, 0) * T3::coordinate(zero, 1),
                      T3::coordinate(zero, 1), T3(zero)});
    auto strict = g.divide_exact(T3::monomial(zero.one(), 0, m, 0));
    delta += delta_affine(*strict, depth + 1);
  }
  if (p.deg() > 0) {
    for (const auto& [r, mult] : poly_roots(p, 4)) {
      covered += mult;
      const int mr = r.k();
      const T3 fe = embed_bivariate(f, mr);
      const Gf2k zr = Gf2k::zero(mr);
      // direction (1:r): substitute y -> x(y + r) and strip x^m
      T3 g = fe.compose({T3::coordinate(zr, 0),
                         T3::coordinate(zr, 0) *
                             (T3::coordinate(zr, 1) + T3::constant(r)),
                         T3(zr)});
      auto strict = g.divide_exact(T3::monomial(zr.one(), m, 0, 0));
      delta += delta_affine(*strict, depth + 1);
    }
  }
  if (covered != m)
    throw Error("delta_blowup: directions escape the supported fields");
  return delta;
}

}  // namespace

int delta_blowup(const PlaneCurve<Gf2k>& c, const ProjPoint<Gf2k>& p) {
  if (!c.contains(p)) throw Error("delta_blowup: point not on curve");
  return delta_affine(local_form(c, p), 0);
}

int delta_semigroup(const Laurent<Gf2k>& x, const Laurent<Gf2k>& z) {
  const auto ox = x.ord(), oz = z.ord();
  if (!ox || !oz || *ox < 1 || *oz < 1)
    throw Error("delta_semigroup: series must have positive order");
  const int bound = 2 * *ox * *oz;
  if ((!x.is_exact() && x.prec() < bound) ||
      (!z.is_exact() && z.prec() < bound))
    throw Error("delta_semigroup: insufficient precision");

  // order-echelon closure of the span of all monomials in the generators
  const Gf2k one = x.ring_zero().one();
  std::map<int, Laurent<Gf2k>> basis;
  const Laurent<Gf2k> xt = x.truncate(bound), zt = z.truncate(bound);
  std::vector<Laurent<Gf2k>> queue;
  for (int i = 0; i * *ox < bound; ++i) {
    Laurent<Gf2k> xi = Laurent<Gf2k>::monomial(one, 0);
    for (int c = 0; c < i; ++c) xi = (xi * xt).truncate(bound);
    for (int j = 0; i * *ox + j * *oz < bound; ++j) {
      queue.push_back(xi);
      xi = (xi * zt).truncate(bound);
    }
  }
  for (auto w : queue) {
    while (true) {
      const auto o = w.ord();
      if (!o || *o >= bound) break;
      auto it = basis.find(*o);
      if (it == basis.end()) {
        basis.emplace(*o, w.scale(w.coeff(*o).inv()));
        break;
      }
      w = w + it->second.scale(w.coeff(*o));
    }
  }

  // semigroup window; certify the conductor by a run of e consecutive
  // orders, e = the multiplicity
  std::vector<bool> present(size_t(bound), false);
  for (const auto& [o, elt] : basis) present[size_t(o)] = true;
  int e = 0;
  for (int v = 1; v < bound; ++v)
    if (present[size_t(v)]) {
      e = v;
      break;
    }
  if (e == 0) throw Error("delta_semigroup: cannot certify the conductor");
  int start = -1;
  for (int n = 0; n + e <= bound; ++n) {
    bool run = true;
    for (int i = 0; i < e && run; ++i) run = present[size_t(n + i)];
    if (run) {
      start = n;
      break;
    }
  }
  if (start < 0) throw Error("delta_semigroup: cannot certify the conductor");
  int delta = 0;
  for (int v = 0; v < start; ++v)
    if (!present[size_t(v)]) ++delta;
  return delta;
}

int geometric_genus_of_quartic(const PlaneCurve<Gf2k>& c,
                               int extension_bound) {
  if (c.degree() != 4)
    throw Error("geometric_genus_of_quartic: quartic form expected");
  if (!is_integral_quartic(c))
    throw Error("geometric_genus_of_quartic: reducible form");
  const int k = c.form().ring_zero().k();
  int total = 0;
  for (int j = 1; j <= extension_bound && k * j <= 12; ++j) {
    const int m = k * j;
    const PlaneCurve<Gf2k> ce = embed_curve(c, m);
    for (const auto& p : enumerate_points(ce)) {
      bool seen = false;
      for (int jj = 1; jj < j && !seen; ++jj) {
        if (j % jj != 0) continue;
        const uint64_t q = uint64_t(1) << (k * jj);
        seen = p.x().pow(q) == p.x() && p.y().pow(q) == p.y() &&
               p.z().pow(q) == p.z();
      }
      if (seen) continue;
      if (is_singular_point(ce, p)) total += delta_blowup(ce, p);
    }
  }
  return 3 - total;
}

}  // namespace qef
