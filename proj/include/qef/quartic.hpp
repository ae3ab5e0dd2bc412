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

#include <array>
#include <optional>
#include <utility>

#include "qef/expansions.hpp"
#include "qef/group_law.hpp"
#include "qef/plane_curve.hpp"

namespace qef {

/// Parameters of the quartic family
///   c x^4 + (z^2 + b y^2 + a b x^2)(e (z^2 + b y^2 + a b x^2)
///           + y^2 + x y + a x^2) = 0.
/// Every specialization is a legal member; c != 0 and e != 0 give the
/// genus-one fibres, eta = c e controls the target cubic.
template <class K>
struct QuarticParams {
  K a, b, c, e;

  K eta() const { return c * e; }
  /// Coordinate-squared parameters: the fibre the Frobenius lands on.
  QuarticParams squared() const { return {a * a, b * b, c * c, e * e}; }

  bool operator==(const QuarticParams& o) const {
    return a == o.a && b == o.b && c == o.c && e == o.e;
  }
  bool operator!=(const QuarticParams& o) const { return !(*this == o); }
  std::string str() const {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ", " + e.str() +
           ")";
  }
};

/// The inner square z^2 + b y^2 + a b x^2; it equals
/// (z + b^{1/2} y + (ab)^{1/2} x)^2 over any perfect field.
template <class K>
TriPoly<K> quartic_inner_square(const QuarticParams<K>& q) {
  const K one = q.a.one();
  return TriPoly<K>::monomial(one, 0, 0, 2) +
         TriPoly<K>::monomial(q.b, 0, 2, 0) +
         TriPoly<K>::monomial(q.a * q.b, 2, 0, 0);
}

template <class K>
TriPoly<K> quartic_form_of(const QuarticParams<K>& q) {
  const K one = q.a.one();
  const TriPoly<K> w = quartic_inner_square(q);
  const TriPoly<K> t = w.scale(q.e) + TriPoly<K>::monomial(one, 0, 2, 0) +
                       TriPoly<K>::monomial(one, 1, 1, 0) +
                       TriPoly<K>::monomial(q.a, 2, 0, 0);
  return TriPoly<K>::monomial(q.c, 4, 0, 0) + w * t;
}

template <class K>
PlaneCurve<K> build_quartic(const QuarticParams<K>& q) {
  return PlaneCurve<K>(quartic_form_of(q));
}

/// Weierstrass coefficients of the target cubic
///   y^2 z + x y z = x^3 + a x^2 z + eta x z^2,
/// smooth iff eta != 0, with j-invariant eta^{-2}.
template <class K>
Weierstrass<K> cubic_coefficients(const K& a, const K& eta) {
  return Weierstrass<K>{a.one(), a, a.zero(), eta, a.zero()};
}

template <class K>
PlaneCurve<K> build_cubic(const K& a, const K& eta) {
  return cubic_curve(cubic_coefficients(a, eta));
}

/// Degree-two purely inseparable map from the quartic onto the cubic with
/// parameters (a, c e).  Two interchangeable assignments cover the plane:
///   (c x^2 : c x y : z^2 + b y^2 + a b x^2)   and   (x h : y h : x^3),
/// h = e (z^2 + b y^2 + a b x^2) + y^2 + x y + a x^2; the first is used
/// unless it vanishes.  The double point (0 : 1 : b^{1/2}) goes to the
/// marked point (0 : 1 : 0).
template <class K>
ProjPoint<K> phi(const QuarticParams<K>& q, const ProjPoint<K>& p) {
  if (!build_quartic(q).contains(p))
    throw Error("phi: point not on the quartic");
  const K& x = p.x();
  const K& y = p.y();
  const K w = quartic_inner_square(q).eval(x, y, p.z());
  const K u1 = q.c * x * x, v1 = q.c * x * y;
  if (!u1.is_zero() || !v1.is_zero() || !w.is_zero())
    return ProjPoint<K>(u1, v1, w);
  const K h = q.e * w + y * y + x * y + q.a * x * x;
  const K u2 = x * h, v2 = y * h, w2 = x * x * x;
  if (u2.is_zero() && v2.is_zero() && w2.is_zero())
    throw Error("phi: both assignments vanish");
  return ProjPoint<K>(u2, v2, w2);
}

/// Pointwise inverse of phi over a perfect field:
///   (x : y : b^{1/2} y + (ab)^{1/2} x + c^{1/2} (x z)^{1/2}),
/// with (0:0:1) -> (0 : e^{1/2} : 1 + (be)^{1/2}) and
/// (0:1:0) -> (0 : 1 : b^{1/2}).  Requires c != 0.
ProjPoint<Gf2k> phi_inverse(const QuarticParams<Gf2k>& q,
                            const ProjPoint<Gf2k>& r);

/// Degree-two purely inseparable map from the cubic with parameters
/// (a^{1/2}, (ce)^{1/2}) onto the quartic:
///   (x'^2 : y'^2 : b^{1/2} y'^2 + (ab)^{1/2} x'^2 + c^{1/2} x' z'),
/// with (0:0:1) -> (0 : e^{1/2} : 1 + (be)^{1/2}).  The marked point goes
/// to the double point; phi(psi(.)) squares coordinates.
ProjPoint<Gf2k> psi(const QuarticParams<Gf2k>& q, const ProjPoint<Gf2k>& p);

/// Group law transported from the target cubic: the quartic becomes a
/// group with the double point (0 : 1 : b^{1/2}) as neutral element.
/// Requires c e != 0.
ProjPoint<Gf2k> transported_add(const QuarticParams<Gf2k>& q,
                                const ProjPoint<Gf2k>& p1,
                                const ProjPoint<Gf2k>& p2);

/// The unique point of order two, (0 : 1 : b^{1/2} + e^{-1/2}).
ProjPoint<Gf2k> order_two_point(const QuarticParams<Gf2k>& q);

/// The two points of order four: y/x ranges over the roots of
/// u^2 + u + a and z = (a^2 b^2 + c e^{-1})^{1/4} x + b^{1/2} y.  When
/// trace(a) = 1 the roots live in GF(2^{2k}); field_k records the field
/// actually used.
struct InflectionPoints {
  int field_k;
  std::array<ProjPoint<Gf2k>, 2> points;
};
InflectionPoints inflection_points(const QuarticParams<Gf2k>& q);

/// Fibre taxonomy: c = 0 factors off the double line
/// (z + b^{1/2} y + (ab)^{1/2} x)^2, e = 0 is integral with a second
/// (nodal) singular point and geometric genus zero, the rest carry genus
/// one.
enum class FibreType { kReducibleDoubleLine, kNodalRational, kGenusOne };

template <class K>
FibreType classify_fibre(const QuarticParams<K>& q) {
  if (q.c.is_zero()) return FibreType::kReducibleDoubleLine;
  if (q.e.is_zero()) return FibreType::kNodalRational;
  return FibreType::kGenusOne;
}

const char* fibre_type_label(FibreType t);

/// Geometric genus of the fibre; throws on the reducible c = 0 fibres.
int geometric_genus_of_fibre(const QuarticParams<Gf2k>& q);

/// Arithmetic normalization c = b eta.  Defined exactly when
/// b + c eta^{-1} is a square in K; the normalized parameters are
/// (a, b, b eta, b^{-1}) and the returned form is the cleared model
///   b^2 eta x^4 + (z^2 + b y^2 + a b x^2)(z^2 + b x y),
/// which equals b times the quartic of the normalized parameters.
/// Requires eta != 0.
template <class K>
std::optional<std::pair<QuarticParams<K>, PlaneCurve<K>>> normalize_q_rational(
    const QuarticParams<K>& q) {
  const K eta = q.eta();
  if (eta.is_zero())
    throw Error("normalize_q_rational: degenerate parameters");
  if (!try_sqrt(q.b + q.c * eta.inv()))
    return std::nullopt;
  const QuarticParams<K> n{q.a, q.b, q.b * eta, q.b.inv()};
  const K one = q.a.one();
  const TriPoly<K> w = quartic_inner_square(n);
  const TriPoly<K> s = TriPoly<K>::monomial(one, 0, 0, 2) +
                       TriPoly<K>::monomial(q.b, 1, 1, 0);
  const TriPoly<K> form =
      TriPoly<K>::monomial(q.b * q.b * eta, 4, 0, 0) + w * s;
  return std::make_pair(n, PlaneCurve<K>(form));
}

/// Parameters of the a1 = a2 = 0 models: the cubic
///   y^2 + a y = x^3 + a4 x + a6   (a != 0)
/// together with the relation z^2 = b x^2 + a^{-1} x + d.
template <class K>
struct CaseAParams {
  K a, a4, a6, b, d;
};

/// The model as exact objects, plus the x-elimination of the pair: with
///   N = a^{-1} (z^2 + d) + b^2 (y^2 + a y + a6),
///   D = b (z^2 + d) + a^{-2} + b^2 a4,
/// the coordinates y, z satisfy the sextic
///   (z^2 + d) D^2 + b N^2 + a^{-1} D N = 0.
template <class K>
struct CaseAModel {
  PlaneCurve<K> cubic;
  ZSquaredModel<K> relation;
  TriPoly<K> elim_n, elim_d;  // in the variables y, z (slots 1 and 2)
  TriPoly<K> sextic;
};

template <class K>
CaseAModel<K> build_case_a_model(const CaseAParams<K>& p) {
  if (p.a.is_zero()) throw Error("build_case_a_model: a must be nonzero");
  using T = TriPoly<K>;
  const K zero = p.a.zero();
  const K c = p.a.inv();
  const Weierstrass<K> w{zero, zero, p.a, p.a4, p.a6};
  const ZSquaredModel<K> rel{w, zero, zero, p.b, zero, c, p.d};
  const T z2d = T::monomial(p.a.one(), 0, 0, 2) + T::constant(p.d);
  const T n = z2d.scale(c) + T::monomial(p.b * p.b, 0, 2, 0) +
              T::monomial(p.b * p.b * p.a, 0, 1, 0) +
              T::constant(p.b * p.b * p.a6);
  const T d = z2d.scale(p.b) + T::constant(c * c + p.b * p.b * p.a4);
  const T sextic = z2d * d * d + (n * n).scale(p.b) + (d * n).scale(c);
  return {cubic_curve(w), rel, n, d, sextic};
}

}  // namespace qef
