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

#include "qef/plane_curve.hpp"

#include <set>

namespace qef {
namespace {

// Largest coefficient field the scans enumerate.  Root searches pair roots
// over a further quadratic extension, so they stop at half the packing
// bound of Gf2k.
constexpr int kMaxScanField = 8;

bool all_zero(const std::vector<Gf2k>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// Preimage of v under the embedding GF(2^m) -> GF(2^(k of v)), if v lies in
// the embedded subfield.
std::optional<Gf2k> project_to_subfield(const Gf2k& v, int m) {
  for (const auto& s : gf2k_elements(m))
    if (s.embed_into(v.k()) == v) return s;
  return std::nullopt;
}

}  // namespace

PlaneCurve<Gf2k> embed_curve(const PlaneCurve<Gf2k>& c, int m) {
  TriPoly<Gf2k> f(Gf2k::zero(m));
  for (const auto& [key, coeff] : c.form().terms())
    f += TriPoly<Gf2k>::monomial(coeff.embed_into(m), key[0], key[1], key[2]);
  return PlaneCurve<Gf2k>(f);
}

ProjPoint<Gf2k> embed_point(const ProjPoint<Gf2k>& p, int m) {
  return ProjPoint<Gf2k>(p.x().embed_into(m), p.y().embed_into(m),
                         p.z().embed_into(m));
}

std::vector<ProjPoint<Gf2k>> enumerate_points(const PlaneCurve<Gf2k>& c) {
  const int k = c.form().ring_zero().k();
  const Gf2k zero = Gf2k::zero(k), one = Gf2k::one(k);
  std::vector<ProjPoint<Gf2k>> out;
  for (const auto& x : gf2k_elements(k))
    for (const auto& y : gf2k_elements(k)) {
      ProjPoint<Gf2k> p(x, y, one);
      if (c.contains(p)) out.push_back(p);
    }
  for (const auto& x : gf2k_elements(k)) {
    ProjPoint<Gf2k> p(x, one, zero);
    if (c.contains(p)) out.push_back(p);
  }
  ProjPoint<Gf2k> px(one, zero, zero);
  if (c.contains(px)) out.push_back(px);
  return out;
}

std::vector<std::pair<Gf2k, int>> poly_roots(const Poly& p, int max_ext) {
  if (p.is_zero()) throw Error("poly_roots: zero polynomial");
  const int k = p.k();
  std::vector<std::pair<Gf2k, int>> out;
  int found = 0;
  for (int j = 1; j <= max_ext && k * j <= 16; ++j) {
    if (found == p.deg()) break;
    const int m = k * j;
    const Poly pe = p.embed_into(m);
    for (const auto& r : gf2k_elements(m)) {
      if (!pe.eval(r).is_zero()) continue;
      bool seen = false;
      for (int jj = 1; jj < j && !seen; ++jj)
        if (j % jj == 0 && r.pow(uint64_t(1) << (k * jj)) == r) seen = true;
      if (seen) continue;
      Poly lin(m, {r, Gf2k::one(m)});
      Poly q = pe;
      int mult = 0;
      while (lin.divides(q)) {
        q = q / lin;
        ++mult;
      }
      out.emplace_back(r, mult);
      found += mult;
    }
  }
  return out;
}

std::vector<ProfileEntry> line_intersection_profile(const PlaneCurve<Gf2k>& c,
                                                    const Line<Gf2k>& l) {
  const auto [s0, s1] = l.span();
  const std::vector<Gf2k> b = restrict_to_line(c, s0, s1);
  if (all_zero(b))
    throw Error("line_intersection_profile: line is a component");
  const int k = c.form().ring_zero().k();
  const int d = c.degree();
  Poly p(k, b);
  std::vector<ProfileEntry> out;
  if (p.deg() < d) out.push_back({s0, d - p.deg()});
  if (p.deg() > 0) {
    for (const auto& [r, mult] : poly_roots(p, 4)) {
      const int m = r.k();
      const ProjPoint<Gf2k> e0 = embed_point(s0, m);
      const ProjPoint<Gf2k> e1 = embed_point(s1, m);
      out.push_back({ProjPoint<Gf2k>(e0.x() * r + e1.x(), e0.y() * r + e1.y(),
                                     e0.z() * r + e1.z()),
                     mult});
    }
  }
  int total = 0;
  for (const auto& e : out) total += e.multiplicity;
  if (total != d)
    throw Error("line_intersection_profile: roots escape the supported "
                "extensions");
  return out;
}

bool curve_has_line_factor(const PlaneCurve<Gf2k>& c, int max_ext) {
  const int k = c.form().ring_zero().k();
  for (int j = 1; j <= max_ext; ++j) {
    const int m = k * j;
    if (m > kMaxScanField)
      throw Error("curve_has_line_factor: extension field too large");
    const PlaneCurve<Gf2k> ce = embed_curve(c, m);
    const Gf2k zero = Gf2k::zero(m), one = Gf2k::one(m);
    std::vector<Line<Gf2k>> lines;
    for (const auto& a : gf2k_elements(m))
      for (const auto& bb : gf2k_elements(m)) lines.emplace_back(a, bb, one);
    for (const auto& a : gf2k_elements(m)) lines.emplace_back(a, one, zero);
    lines.emplace_back(one, zero, zero);
    for (const auto& l : lines) {
      const auto [s0, s1] = l.span();
      if (all_zero(restrict_to_line(ce, s0, s1))) return true;
    }
  }
  return false;
}

namespace {

// Degree-2 divisors of a nonzero binary quartic over GF(2^m), normalized so
// the first nonzero coefficient of (u^2, uv, v^2) is 1.  Built from the root
// divisor: pairs of rational roots, a rational root with the root at
// infinity, the doubled root at infinity, and Frobenius-conjugate pairs.
std::vector<std::array<Gf2k, 3>> binary_quadratic_divisors(
    const std::vector<Gf2k>& b, int m) {
  const Gf2k zero = Gf2k::zero(m), one = Gf2k::one(m);
  Poly p(m, b);
  const int d = int(b.size()) - 1;
  const int inf_mult = d - p.deg();
  std::vector<std::pair<Gf2k, int>> rational, quadratic;
  if (p.deg() > 0)
    for (const auto& [r, mult] : poly_roots(p, 2))
      (r.k() == m ? rational : quadratic).emplace_back(r, mult);
  std::set<std::array<Gf2k, 3>> out;
  for (size_t i = 0; i < rational.size(); ++i) {
    for (size_t jj = i; jj < rational.size(); ++jj) {
      if (i == jj && rational[i].second < 2) continue;
      const Gf2k &r = rational[i].first, &s = rational[jj].first;
      out.insert({one, r + s, r * s});
    }
    if (inf_mult >= 1) out.insert({zero, one, rational[i].first});
  }
  if (inf_mult >= 2) out.insert({zero, zero, one});
  for (const auto& [r, mult] : quadratic) {
    const Gf2k conj = r.pow(uint64_t(1) << m);
    auto tr = project_to_subfield(r + conj, m);
    auto nm = project_to_subfield(r * conj, m);
    if (tr && nm) out.insert({one, *tr, *nm});
  }
  return {out.begin(), out.end()};
}

}  // namespace

bool curve_has_conic_factor(const PlaneCurve<Gf2k>& c, int max_ext) {
  if (c.degree() != 4)
    throw Error("curve_has_conic_factor: quartic form expected");
  const int k = c.form().ring_zero().k();
  for (int j = 1; j <= max_ext; ++j) {
    const int m = k * j;
    if (m > kMaxScanField)
      throw Error("curve_has_conic_factor: extension field too large");
    const PlaneCurve<Gf2k> ce = embed_curve(c, m);
    const TriPoly<Gf2k>& f = ce.form();
    const Gf2k zero = Gf2k::zero(m);
    // Restrictions to the lines x = 0 and y = 0 pin five of the six conic
    // coefficients; a line factor would make one of them vanish.
    std::vector<Gf2k> b1(5, zero), b2(5, zero);
    for (int i = 0; i <= 4; ++i) {
      b1[size_t(i)] = f.coeff(0, i, 4 - i);
      b2[size_t(i)] = f.coeff(i, 0, 4 - i);
    }
    if (all_zero(b1) || all_zero(b2)) return true;
    const auto d1 = binary_quadratic_divisors(b1, m);
    const auto d2 = binary_quadratic_divisors(b2, m);
    for (const auto& q1 : d1) {
      const Gf2k &g1 = q1[0], &g5 = q1[1], &g2 = q1[2];
      for (const auto& q2 : d2) {
        std::vector<Gf2k> scalars;
        if (!q2[2].is_zero()) {
          if (g2.is_zero()) continue;
          scalars.push_back(g2 / q2[2]);
        } else {
          if (!g2.is_zero()) continue;
          for (const auto& s : gf2k_elements(m))
            if (!s.is_zero()) scalars.push_back(s);
        }
        for (const auto& lam : scalars) {
          const Gf2k g0 = lam * q2[0], g4 = lam * q2[1];
          for (const auto& g3 : gf2k_elements(m)) {
            TriPoly<Gf2k> g = TriPoly<Gf2k>::monomial(g0, 2, 0, 0) +
                              TriPoly<Gf2k>::monomial(g1, 0, 2, 0) +
                              TriPoly<Gf2k>::monomial(g2, 0, 0, 2) +
                              TriPoly<Gf2k>::monomial(g3, 1, 1, 0) +
                              TriPoly<Gf2k>::monomial(g4, 1, 0, 1) +
                              TriPoly<Gf2k>::monomial(g5, 0, 1, 1);
            if (f.divide_exact(g)) return true;
          }
        }
      }
    }
  }
  return false;
}

bool is_integral_quartic(const PlaneCurve<Gf2k>& c) {
  if (c.degree() != 4)
    throw Error("is_integral_quartic: quartic form expected");
  // A quartic that factors over the algebraic closure has a linear or
  // quadratic factor defined over an extension of degree at most 2: Galois
  // orbits of a linear factor have size 1..4, and sizes 3 and 4 leave a
  // rational line or a quadratic over the degree-2 extension.
  if (curve_has_line_factor(c, 2)) return false;
  if (curve_has_conic_factor(c, 2)) return false;
  return true;
}

}  // namespace qef
