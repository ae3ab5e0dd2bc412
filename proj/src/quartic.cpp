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

#include "qef/quartic.hpp"

#include "qef/delta.hpp"

namespace qef {

ProjPoint<Gf2k> phi_inverse(const QuarticParams<Gf2k>& q,
                            const ProjPoint<Gf2k>& r) {
  if (q.c.is_zero()) throw Error("phi_inverse: c must be nonzero");
  if (!build_cubic(q.a, q.eta()).contains(r))
    throw Error("phi_inverse: point not on the cubic");
  const Gf2k& x = r.x();
  if (x.is_zero()) {
    // x = 0 on the cubic means (0:0:1) or (0:1:0)
    const Gf2k one = x.one();
    if (r.y().is_zero())
      return ProjPoint<Gf2k>(x, q.e.sqrt(), one + (q.b * q.e).sqrt());
    return ProjPoint<Gf2k>(x, one, q.b.sqrt());
  }
  const Gf2k z = q.b.sqrt() * r.y() + (q.a * q.b).sqrt() * x +
                 q.c.sqrt() * (x * r.z()).sqrt();
  return ProjPoint<Gf2k>(x, r.y(), z);
}

ProjPoint<Gf2k> psi(const QuarticParams<Gf2k>& q, const ProjPoint<Gf2k>& p) {
  if (!build_cubic(q.a.sqrt(), q.eta().sqrt()).contains(p))
    throw Error("psi: point not on the source cubic");
  const Gf2k& x = p.x();
  const Gf2k& y = p.y();
  if (x.is_zero() && !p.z().is_zero())
    return ProjPoint<Gf2k>(x, q.e.sqrt(), x.one() + (q.b * q.e).sqrt());
  const Gf2k x2 = x * x, y2 = y * y;
  return ProjPoint<Gf2k>(
      x2, y2, q.b.sqrt() * y2 + (q.a * q.b).sqrt() * x2 +
                  q.c.sqrt() * x * p.z());
}

ProjPoint<Gf2k> transported_add(const QuarticParams<Gf2k>& q,
                                const ProjPoint<Gf2k>& p1,
                                const ProjPoint<Gf2k>& p2) {
  const Weierstrass<Gf2k> w = cubic_coefficients(q.a, q.eta());
  return phi_inverse(q, group_add(w, phi(q, p1), phi(q, p2)));
}

ProjPoint<Gf2k> order_two_point(const QuarticParams<Gf2k>& q) {
  if (q.c.is_zero() || q.e.is_zero())
    throw Error("order_two_point: degenerate parameters");
  const Gf2k zero = q.b.zero();
  return ProjPoint<Gf2k>(zero, zero.one(),
                         q.b.sqrt() + q.e.inv().sqrt());
}

InflectionPoints inflection_points(const QuarticParams<Gf2k>& q) {
  if (q.c.is_zero() || q.e.is_zero())
    throw Error("inflection_points: degenerate parameters");
  const int k = q.a.k();
  const int m = q.a.trace() == 0 ? k : 2 * k;
  if (m > 16) throw Error("inflection_points: extension field too large");
  const Gf2k a = q.a.embed_into(m), b = q.b.embed_into(m),
             c = q.c.embed_into(m), e = q.e.embed_into(m);
  const Gf2k kappa = (a * a * b * b + c * e.inv()).sqrt().sqrt();
  const auto s = a.solve_artin_schreier_const();
  if (!s) throw Error("inflection_points: no Artin-Schreier solution");
  const Gf2k one = a.one();
  const Gf2k s2 = *s + one;
  return {m,
          {ProjPoint<Gf2k>(one, *s, kappa + b.sqrt() * *s),
           ProjPoint<Gf2k>(one, s2, kappa + b.sqrt() * s2)}};
}

const char* fibre_type_label(FibreType t) {
  switch (t) {
    case FibreType::kReducibleDoubleLine:
      return "reducible (double line)";
    case FibreType::kNodalRational:
      return "rational (nodal)";
    case FibreType::kGenusOne:
      return "genus one";
  }
  throw Error("fibre_type_label: unknown type");
}

int geometric_genus_of_fibre(const QuarticParams<Gf2k>& q) {
  return geometric_genus_of_quartic(build_quartic(q));
}

}  // namespace qef
