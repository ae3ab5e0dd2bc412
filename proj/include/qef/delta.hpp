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
#include "qef/plane_curve.hpp"

namespace qef {

/// Delta invariant of the curve singularity at P, as the sum of
/// m(m-1)/2 over all infinitely near points of the iterated blowup,
/// passing to field extensions for non-rational exceptional directions.
/// Smooth points give 0.  Throws when the chain does not terminate
/// (non-isolated singularity, e.g. a square factor through P) or when a
/// direction escapes the supported fields.
int delta_blowup(const PlaneCurve<Gf2k>& c, const ProjPoint<Gf2k>& p);

/// Delta invariant of a unibranch singularity from a local
/// parametrization (x(t), z(t)) with positive orders: the number of gaps
/// of the value semigroup of the algebra generated by the two series.
/// The conductor is certified inside the window [0, 2 ord(x) ord(z));
/// insufficient precision is an error.
int delta_semigroup(const Laurent<Gf2k>& x, const Laurent<Gf2k>& z);

/// Geometric genus 3 - sum of deltas over all singular points of an
/// integral quartic, scanning extensions GF(2^(k*j)) for j up to
/// extension_bound.  The default is complete: the delta sum of an
/// integral quartic is at most 3, so a Galois orbit of singular points
/// has size at most 3 and every singular point is rational over a
/// degree <= 3 extension.  Throws on reducible forms.
int geometric_genus_of_quartic(const PlaneCurve<Gf2k>& c,
                               int extension_bound = 3);

}  // namespace qef
