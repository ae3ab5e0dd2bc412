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

#include <string>

#include "qef/ratfunc.hpp"

namespace qef {

/// Parses an element of GF(2^k)(t) written with the generator `w` of
/// GF(2^k), the indeterminate `t`, the constants `0` and `1`, and the
/// operators `+`, `*`, `/`, `^` with parentheses; `^` takes a decimal
/// exponent.  Examples: `w^2*t + 1`, `(t^3 + w)/(t + 1)`.  Whitespace is
/// ignored; throws Error on malformed input or division by zero.
RatFunc parse_ratfunc_literal(const std::string& text, int k);

/// Same grammar restricted to constants; rejects any use of `t`.
Gf2k parse_gf2k_literal(const std::string& text, int k);

}  // namespace qef
