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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qef/report.hpp"

namespace qef {

/// One irreducible fibre component: its multiplicity in the fibre divisor,
/// its geometric genus, and (once solved) its self-intersection number.
struct FibreComponent {
  std::string name;
  int multiplicity = 1;
  int genus = 0;
  std::optional<int> self_intersection;
};

/// A horizontal prime divisor: its degree over the base and the components
/// it meets, with intersection numbers.
struct FibreSection {
  std::string name;
  int degree = 1;
  std::vector<std::pair<std::string, int>> meets;
};

/// Intersection data of the vertical components of one or more fibres of a
/// fibred surface, plus horizontal sections.  Distinct fibres are disjoint,
/// so a single symmetric intersection table serves them all; the fibres are
/// recovered as the connected components of the dual graph.
struct FibreGraph {
  std::string name;
  std::vector<FibreComponent> components;
  /// Off-diagonal intersection numbers, keyed by index pairs i < j.
  /// Absent pairs intersect in zero.
  std::map<std::pair<int, int>, int> intersections;
  std::vector<FibreSection> sections;
  std::map<std::string, std::string> metadata;

  int index_of(const std::string& comp) const;  // throws on unknown name
  int pair_intersection(int i, int j) const;    // i != j
  bool solved() const;

  /// Connected components of the dual graph, each sorted, ordered by their
  /// smallest member index.  Each one is a fibre.
  std::vector<std::vector<int>> fibres() const;

  /// Structural invariants that do not require solving: positive
  /// multiplicities, nonnegative genera and intersections, known names.
  void validate() const;

  bool operator==(const FibreGraph& o) const;
  bool operator!=(const FibreGraph& o) const { return !(*this == o); }
};

/// Parses the committed JSON schema
///   { "name", "components": [{"name","multiplicity","genus",
///     "self_intersection"?}], "intersections": [[a, b, n]],
///     "sections": [{"name","degree","meets":[[comp, n]]}],
///     "metadata"?: {string: string} }
/// rejecting unknown keys, asymmetric duplicates, and type mismatches.
FibreGraph parse_fibre_graph(const std::string& json_text);

/// Inverse of parse_fibre_graph; deterministic field and entry order.
std::string fibre_graph_to_json(const FibreGraph& g);

/// Fills every self-intersection from the relation that a fibre meets each
/// of its components in zero:  mult(C) C^2 = -sum_{D != C} mult(D) (C.D).
/// Throws on a non-integral solution or a conflict with a value already
/// present.
FibreGraph solve_self_intersections(const FibreGraph& g);

/// Checks the zero relation for every component and the degree identity
/// deg(s) = sum mult(C) (s.C) against every fibre for every section;
/// throws Error naming the first violated relation.
void validate_fibre_relations(const FibreGraph& g);

/// Arithmetic genus of the reduced connected curve supported on the named
/// components:  p_a = sum_{i<j} C_i.C_j + sum_i g_i - r + 1.
/// Throws on an empty or disconnected subset.
int arithmetic_genus_reduced(const FibreGraph& g,
                             const std::vector<std::string>& subset);

/// Blows down a component with self-intersection -1 and genus 0: the
/// component is removed and every remaining intersection is updated by
/// C.D -> C.D + (C.E)(D.E) (self-intersections and section incidences
/// included).  The result is re-validated.
FibreGraph contract_curve(const FibreGraph& g, const std::string& comp);

/// True iff no genus-0 component has self-intersection -1.  Requires a
/// solved graph.
bool check_minimal(const FibreGraph& g);

/// Matches each fibre against the extended Dynkin configurations of
/// (-2)-curves: "Ãn" (a cycle; n = 1 is two components meeting twice),
/// "D̃n" (a chain of multiplicity-2 curves with two reduced leaves at each
/// end), "Ẽ6", "Ẽ7", "Ẽ8"; labels are UTF-8, tilde over the letter.
/// Everything else, including fibres with (-3)-components, is
/// "unclassified".  One label per fibre, in fibre order.
std::vector<std::string> classify_fibres(const FibreGraph& g);

/// Declared behaviour of a degree-two cover on the special fibres: which
/// source components map isomorphically onto which target components,
/// which target components stay uncovered, which connected bunches are
/// contracted to points, and how the horizontal sections map.
struct CoverEntry {
  std::string source;
  std::string target;
  /// False when the stated source name has no matching component and is
  /// kept only as a record of the claim.
  bool source_resolved = true;
};
struct CoverBunch {
  std::vector<std::string> bunch;
  std::string to;
};
struct CoverSectionMap {
  std::string from;
  std::string to;
  int degree = 1;
};
struct CoverData {
  std::string name;
  std::vector<CoverEntry> components;
  std::vector<std::string> uncovered;
  std::vector<CoverBunch> contracted;
  std::vector<CoverSectionMap> sections;
};

CoverData parse_cover_data(const std::string& json_text);

/// Structural validation of a cover declaration against the two solved
/// graphs: names resolve, the correspondence is injective where resolved,
/// the computed uncovered set (target fibre components minus the image)
/// equals the declared one, contracted bunches are connected in the
/// source, and source section degrees equal map degree times target
/// section degrees.  Violations are reported, never thrown.
std::vector<CheckResult> validate_cover_map(const FibreGraph& source,
                                            const FibreGraph& target,
                                            const CoverData& cover);

}  // namespace qef
