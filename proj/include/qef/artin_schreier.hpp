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

#include "qef/ratfunc.hpp"

namespace qef {

/// Thrown when a computation is asked for outside its supported input
/// fragment (e.g. an Artin-Schreier right-hand side with poles).
class UnsupportedFragment : public Error {
 public:
  explicit UnsupportedFragment(const std::string& what) : Error(what) {}
};

/// Solves s^2 + s = r over GF(2^k)[t] by descending undetermined
/// coefficients: the top of r must sit at an even degree 2m, forcing the
/// degree-m coefficient of s, and so on down; the surviving constant is
/// solvable iff it lies in the image of x -> x^2 + x on GF(2^k).  Returns
/// the solution with the smaller constant term (the other one is s + 1), or
/// nullopt when provably no polynomial solution exists (odd top degree or
/// nonzero-trace constant).
std::optional<Poly> artin_schreier_solve(const Poly& r);

/// Same solver with a rational right-hand side; throws UnsupportedFragment
/// unless r is a polynomial.
std::optional<Poly> artin_schreier_solve(const RatFunc& r);

}  // namespace qef
