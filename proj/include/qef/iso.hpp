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
#pragma once

#include <optional>
#include <string>

#include "qef/artin_schreier.hpp"
#include "qef/quartic.hpp"
#include "qef/ratfunc.hpp"

namespace qef {

/// The coordinate change x = x', y = y' + sigma x', z = alpha z' + beta y'
/// + gamma x'.  It carries the quartic model of (a, b, c, e) onto alpha^2
/// times the model of (a + sigma + sigma^2, (b + beta^2) / alpha^2,
/// c / alpha^2, e alpha^2) provided the four parameters satisfy
/// beta^2 sigma^2 + (b + beta^2) sigma + gamma^2 + a beta^2 = 0.
template <class K>
struct IsoWitness {
  K alpha, sigma, beta, gamma;

  bool operator==(const IsoWitness& o) const {
    return alpha == o.alpha && sigma == o.sigma && beta == o.beta &&
           gamma == o.gamma;
  }
  bool operator!=(const IsoWitness& o) const { return !(*this == o); }
  std::string str() const {
    return "alpha=" + alpha.str() + ", sigma=" + sigma.str() +
           ", beta=" + beta.str() + ", gamma=" + gamma.str();
  }
};

/// Whether the witness satisfies the admissibility constraint for the
/// source parameters q.
template <class K>
bool witness_admissible(const QuarticParams<K>& q, const IsoWitness<K>& w) {
  const K b2 = w.beta * w.beta;
  return (b2 * w.sigma * w.sigma + (q.b + b2) * w.sigma + w.gamma * w.gamma +
          q.a * b2)
      .is_zero();
}

/// Applies the witness to the parameters.  Throws when alpha is zero or
/// the admissibility constraint fails.
template <class K>
QuarticParams<K> forward_transform(const QuarticParams<K>& q,
                                   const IsoWitness<K>& w) {
  if (w.alpha.is_zero()) throw Error("forward_transform: alpha must be nonzero");
  if (!witness_admissible(q, w))
    throw Error("forward_transform: inadmissible witness");
  const K aa = w.alpha * w.alpha;
  return QuarticParams<K>{q.a + w.sigma + w.sigma * w.sigma,
                          (q.b + w.beta * w.beta) / aa, q.c / aa, q.e * aa};
}

/// The witness applying w1 first and then w2; forward_transform factors
/// through composition.
template <class K>
IsoWitness<K> compose_witnesses(const IsoWitness<K>& w1,
                                const IsoWitness<K>& w2) {
  return IsoWitness<K>{w1.alpha * w2.alpha, w1.sigma + w2.sigma,
                       w1.alpha * w2.beta + w1.beta,
                       w1.alpha * w2.gamma + w1.beta * w2.sigma + w1.gamma};
}

/// Decides whether some admissible coordinate change carries the model of
/// q1 onto the model of q2, over GF(2^k)(t).  The necessary conditions are
/// checked in order: the eta invariants agree, c1/c2 is a square (fixing
/// alpha), b1 + alpha^2 b2 is a square (fixing beta), sigma^2 + sigma =
/// a1 + a2 has a polynomial solution (both solutions are tried), and the
/// gamma equation gamma^2 = beta^2 sigma^2 + (b1 + beta^2) sigma +
/// a1 beta^2 has a square right-hand side.  A found witness is re-verified
/// by substitution into the quartic forms before it is returned.
///
/// Returns nullopt when the models are not related, recording a short
/// reason through the optional out-parameter.  Throws UnsupportedFragment
/// when a1 + a2 has poles, and Error for degenerate inputs (c or e zero,
/// or a square b).
std::optional<IsoWitness<RatFunc>> isomorphism_decide(
    const QuarticParams<RatFunc>& q1, const QuarticParams<RatFunc>& q2,
    std::string* reason = nullptr);

}  // namespace qef
