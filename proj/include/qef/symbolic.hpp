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

#include <cstdint>
#include <vector>

#include "qef/gf2k.hpp"
#include "qef/mpoly.hpp"
#include "qef/report.hpp"

namespace qef {

/// Evaluates a GF(2)-coefficient multivariate polynomial at field values,
/// one per context variable.
Gf2k mpoly_eval(const MPoly& p, const std::vector<Gf2k>& vals);

/// The identity families behind the quartic models, checked as exact
/// multivariate polynomial equalities with explicit cofactor certificates:
/// the two curve-model eliminations and their sextics, the affine
/// derivation of the quartic, the morphism ideal memberships, the
/// coordinate-squaring compositions, strangeness of the quartic, and the
/// pencil surface specialization and its map to the plane.  Each family
/// carries a mutation control (a deliberately broken variant that must
/// fail) and a numeric respecialization of every identity at random GF(16)
/// points drawn from the seed.
std::vector<CheckResult> verify_symbolic_suite(uint32_t seed);

/// The square-root expression inverting the y-coordinate product: in the
/// root context (a, b, c, e) = (A^2, B^2, C^2, E^2), the square of
/// C x^2 / L + y + A x + E L with L = z + B y + A B x equals x y modulo
/// the quartic; certified by clearing L^2 and checked numerically on
/// on-curve points.
std::vector<CheckResult> psi_inverse_expression_report(uint32_t seed);

}  // namespace qef
