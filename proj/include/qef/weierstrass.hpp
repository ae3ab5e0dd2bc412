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
#include <string>

#include "qef/gf2k.hpp"

namespace qef {

/// Coefficients of a characteristic-2 Weierstrass equation
///   y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
/// over a ring R.  Nothing is assumed about smoothness; operations that need
/// a nonzero discriminant check it themselves.
template <class R>
struct Weierstrass {
  R a1, a2, a3, a4, a6;

  bool operator==(const Weierstrass& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
  bool operator!=(const Weierstrass& o) const { return !(*this == o); }

  std::string str() const {
    return "(" + a1.str() + ", " + a2.str() + ", " + a3.str() + ", " +
           a4.str() + ", " + a6.str() + ")";
  }
};

/// Characteristic-2 discriminant
///   a1^6 a6 + a1^5 a3 a4 + a1^4 a2 a3^2 + a1^4 a4^2 + a1^3 a3^3 + a3^4.
template <class R>
R discriminant(const Weierstrass<R>& w) {
  R a1_2 = w.a1 * w.a1;
  R a1_3 = a1_2 * w.a1;
  R a1_4 = a1_2 * a1_2;
  R a3_2 = w.a3 * w.a3;
  return a1_4 * a1_2 * w.a6 + a1_4 * w.a1 * w.a3 * w.a4 +
         a1_4 * w.a2 * a3_2 + a1_4 * w.a4 * w.a4 + a1_3 * a3_2 * w.a3 +
         a3_2 * a3_2;
}

/// j = a1^12 / Delta; throws on singular input.
template <class K>
K j_invariant(const Weierstrass<K>& w) {
  K delta = discriminant(w);
  if (delta.is_zero()) throw Error("j_invariant: singular curve (Delta = 0)");
  K a1_4 = w.a1 * w.a1 * w.a1 * w.a1;
  return a1_4 * a1_4 * a1_4 / delta;
}

/// Coordinate change x = mu^2 x' + rho, y = mu^3 y' + sigma mu^2 x' + tau.
template <class K>
struct TransformParams {
  K mu, rho, sigma, tau;

  static TransformParams identity(const K& one) {
    return {one, one.zero(), one.zero(), one.zero()};
  }
  bool operator==(const TransformParams& o) const {
    return mu == o.mu && rho == o.rho && sigma == o.sigma && tau == o.tau;
  }
};

/// Applies the coordinate change and returns the primed coefficients.
/// mu^12 * Delta' = Delta holds identically.
template <class K>
Weierstrass<K> transform(const Weierstrass<K>& w,
                         const TransformParams<K>& p) {
  if (p.mu.is_zero()) throw Error("transform: mu must be nonzero");
  K mu2 = p.mu * p.mu;
  K mu4 = mu2 * mu2;
  return Weierstrass<K>{
      w.a1 / p.mu,
      (w.a2 + p.sigma * w.a1 + p.rho + p.sigma * p.sigma) / mu2,
      (w.a3 + p.rho * w.a1) / (mu2 * p.mu),
      (w.a4 + p.sigma * w.a3 + (p.tau + p.sigma * p.rho) * w.a1 +
       p.rho * p.rho) /
          mu4,
      (w.a6 + p.rho * w.a4 + p.tau * w.a3 + p.rho * p.rho * w.a2 +
       p.rho * p.tau * w.a1 + p.rho * p.rho * p.rho + p.tau * p.tau) /
          (mu4 * mu2)};
}

/// Composite change: first `outer` maps (x,y) to (x',y'), then `inner` maps
/// (x',y') to (x'',y'').  transform(w, compose(outer, inner)) equals
/// transform(transform(w, outer), inner).
template <class K>
TransformParams<K> compose_transforms(const TransformParams<K>& outer,
                                      const TransformParams<K>& inner) {
  K mu2 = outer.mu * outer.mu;
  return TransformParams<K>{
      outer.mu * inner.mu, mu2 * inner.rho + outer.rho,
      outer.sigma + outer.mu * inner.sigma,
      outer.tau + outer.sigma * mu2 * inner.rho + mu2 * outer.mu * inner.tau};
}

enum class NormalFormCase { JZero, JNonzero, JNonzeroSquare };

inline std::string normal_form_case_name(NormalFormCase c) {
  switch (c) {
    case NormalFormCase::JZero: return "j-zero";
    case NormalFormCase::JNonzero: return "j-nonzero";
    case NormalFormCase::JNonzeroSquare: return "j-nonzero-square";
  }
  return "?";
}

template <class K>
struct NormalForm {
  NormalFormCase tag;
  Weierstrass<K> curve;
  TransformParams<K> params;  // transform(input, params) == curve
};

/// Normalizes a smooth curve to one of the three tagged shapes:
///   j = 0:               (0, 0, a3, a4, a6)  with Delta = a3^4
///   j != 0:              (1, a2, 0, 0, a6)   with Delta = a6
///   j a nonzero square:  (1, a2, 0, a4, 0)   with Delta = a4^2
/// The last shape is used whenever the needed square root exists in K; the
/// returned parameters are the witness of the normalization.
template <class K>
NormalForm<K> normal_form(const Weierstrass<K>& w) {
  if (discriminant(w).is_zero())
    throw Error("normal_form: singular curve (Delta = 0)");
  K zero = w.a1.zero(), one = w.a1.one();
  if (w.a1.is_zero()) {
    // Kill a2 with rho = a2 (sigma = tau = 0, mu = 1).
    TransformParams<K> p{one, w.a2, zero, zero};
    return {NormalFormCase::JZero, transform(w, p), p};
  }
  // Scale a1 to 1, then clear a3 with rho and a4 with tau.
  TransformParams<K> p{w.a1, zero, zero, zero};
  p.rho = w.a3 / w.a1;
  p.tau = (w.a4 + p.rho * p.rho) / w.a1;
  Weierstrass<K> n = transform(w, p);
  auto root = try_sqrt(n.a6);
  if (!root) return {NormalFormCase::JNonzero, n, p};
  // j is a square: trade a6 = tau^2 for a4 = tau instead.
  TransformParams<K> q{one, zero, zero, *root};
  return {NormalFormCase::JNonzeroSquare, transform(n, q),
          compose_transforms(p, q)};
}

}  // namespace qef
