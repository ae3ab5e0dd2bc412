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
#include <string>
#include <vector>

#include "qef/report.hpp"

namespace qef {

struct SuiteOptions {
  int k = 2;
  uint32_t seed = 0;
  int prec = 12;
  std::string data_dir = "data";
};

/// The named verification suites, in report order.
std::vector<std::string> suite_names();

/// Runs one suite ("all" chains every suite) and returns the sorted
/// deterministic report.  Throws Error for unknown names.
Report run_suite(const std::string& name, const SuiteOptions& opt);

/// Printed-coefficient checks for the series expansions: the general
/// y-expansion at infinity, the two z^2 eliminations, the marked-point
/// parameter of the cubic, and the branch through the double point.
std::vector<CheckResult> series_printed_checks(int prec);

/// Order-two and order-four structure of the transported group, swept
/// over parameter tuples with c e != 0 in GF(2^k): the two-torsion point
/// is (0 : 1 : b^{1/2} + e^{-1/2}) and is unique, and the order-four
/// locus equals the inflection points.  sample_tuples == 0 sweeps
/// exhaustively; otherwise that many seeded tuples are drawn.
std::vector<CheckResult> torsion_structure_checks(int k, uint32_t seed,
                                                  int sample_tuples);

/// Delta invariants across the fibre taxonomy: delta 2 at the double
/// point by both the blowup chain and the value semigroup, delta 1 at
/// the node of the e = 0 fibres, and the genus labels of the 3 x 3 x 3
/// sweep over GF(4).  sample_tuples as above.
std::vector<CheckResult> delta_structure_checks(int k, uint32_t seed,
                                                int sample_tuples);

/// The shipped pencil graphs: printed self-intersections, fibre
/// relations, adjunction genera, the blowdown to the minimal model, the
/// extended Dynkin labels and the cover validation with its mutation
/// controls.
std::vector<CheckResult> intersection_checks(const std::string& data_dir);

}  // namespace qef
