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
#include "qef/fibre_graph.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "qef/gf2k.hpp"  // Error

namespace qef {

int FibreGraph::index_of(const std::string& comp) const {
  for (size_t i = 0; i < components.size(); ++i)
    if (components[i].name == comp) return int(i);
  throw Error("fibre graph: unknown component \"" + comp + "\"");
}

int FibreGraph::pair_intersection(int i, int j) const {
  if (i == j) throw Error("fibre graph: diagonal query on the pair table");
  if (i > j) std::swap(i, j);
  const auto it = intersections.find({i, j});
  return it == intersections.end() ? 0 : it->second;
}

bool FibreGraph::solved() const {
  return std::all_of(
      components.begin(), components.end(),
      [](const FibreComponent& c) { return c.self_intersection.has_value(); });
}

std::vector<std::vector<int>> FibreGraph::fibres() const {
  const int n = int(components.size());
  std::vector<int> label(size_t(n), -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (label[size_t(start)] >= 0) continue;
    std::vector<int> stack = {start};
    label[size_t(start)] = next;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int d = 0; d < n; ++d)
        if (label[size_t(d)] < 0 && pair_intersection(c, d) > 0) {
          label[size_t(d)] = next;
          stack.push_back(d);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(next));
  for (int i = 0; i < n; ++i) out[size_t(label[size_t(i)])].push_back(i);
  return out;
}

void FibreGraph::validate() const {
  std::set<std::string> names;
  for (const FibreComponent& c : components) {
    if (c.name.empty()) throw Error("fibre graph: empty component name");
    if (!names.insert(c.name).second)
      throw Error("fibre graph: duplicate component \"" + c.name + "\"");
    if (c.multiplicity <= 0)
      throw Error("fibre graph: nonpositive multiplicity on \"" + c.name +
                  "\"");
    if (c.genus < 0)
      throw Error("fibre graph: negative genus on \"" + c.name + "\"");
  }
  const int n = int(components.size());
  for (const auto& [key, value] : intersections) {
    if (key.first < 0 || key.second >= n || key.first >= key.second)
      throw Error("fibre graph: malformed intersection key");
    if (value < 0) throw Error("fibre graph: negative intersection number");
  }
  for (const FibreSection& s : sections) {
    if (s.name.empty()) throw Error("fibre graph: empty section name");
    if (s.degree <= 0)
      throw Error("fibre graph: nonpositive degree on section \"" + s.name +
                  "\"");
    std::set<std::string> met;
    for (const auto& [comp, num] : s.meets) {
      index_of(comp);
      if (!met.insert(comp).second)
        throw Error("fibre graph: section \"" + s.name +
                    "\" lists \"" + comp + "\" twice");
      if (num <= 0)
        throw Error("fibre graph: nonpositive incidence on section \"" +
                    s.name + "\"");
    }
  }
}

bool FibreGraph::operator==(const FibreGraph& o) const {
  if (name != o.name || components.size() != o.components.size() ||
      intersections.size() != o.intersections.size() ||
      sections.size() != o.sections.size() || metadata != o.metadata)
    return false;
  for (size_t i = 0; i < components.size(); ++i) {
    const FibreComponent &a = components[i], &b = o.components[i];
    if (a.name != b.name || a.multiplicity != b.multiplicity ||
        a.genus != b.genus || a.self_intersection != b.self_intersection)
      return false;
  }
  if (intersections != o.intersections) return false;
  for (size_t i = 0; i < sections.size(); ++i) {
    const FibreSection &a = sections[i], &b = o.sections[i];
    if (a.name != b.name || a.degree != b.degree || a.meets != b.meets)
      return false;
  }
  return true;
}

namespace {

using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& why) {
  throw Error("fibre graph schema: " + why);
}

void require_keys(const ordered_json& obj, const std::string& where,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!obj.is_object()) schema_error(where + " is not an object");
  for (const std::string& key : required)
    if (!obj.contains(key)) schema_error(where + " lacks \"" + key + "\"");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      schema_error(where + " has unknown key \"" + key + "\"");
  }
}

std::string get_string(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where + " is not a string");
  return v.get<std::string>();
}

int get_int(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + " is not an integer");
  return v.get<int>();
}

ordered_json parse_text(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text, nullptr, false);
  if (j.is_discarded()) schema_error("not valid JSON");
  return j;
}

}  // namespace

FibreGraph parse_fibre_graph(const std::string& json_text) {
  const ordered_json j = parse_text(json_text);
  require_keys(j, "graph", {"name", "components", "intersections", "sections"},
               {"metadata"});
  FibreGraph g;
  g.name = get_string(j["name"], "name");

  if (!j["components"].is_array()) schema_error("components is not an array");
  for (const ordered_json& e : j["components"]) {
    require_keys(e, "component", {"name", "multiplicity", "genus"},
                 {"self_intersection"});
    FibreComponent c;
    c.name = get_string(e["name"], "component name");
    c.multiplicity = get_int(e["multiplicity"], "multiplicity");
    c.genus = get_int(e["genus"], "genus");
    if (e.contains("self_intersection"))
      c.self_intersection = get_int(e["self_intersection"],
                                    "self_intersection");
    g.components.push_back(std::move(c));
  }

  if (!j["intersections"].is_array())
    schema_error("intersections is not an array");
  for (const ordered_json& e : j["intersections"]) {
    if (!e.is_array() || e.size() != 3)
      schema_error("intersection entry is not a [name, name, number] triple");
    const std::string a = get_string(e[0], "intersection name");
    const std::string b = get_string(e[1], "intersection name");
    const int value = get_int(e[2], "intersection number");
    if (a == b) schema_error("intersection entry repeats \"" + a + "\"");
    int i = g.index_of(a), k = g.index_of(b);
    if (i > k) std::swap(i, k);
    if (!g.intersections.emplace(std::make_pair(i, k), value).second)
      schema_error("duplicate intersection entry for \"" + a + "\", \"" + b +
                   "\"");
  }

  if (!j["sections"].is_array()) schema_error("sections is not an array");
  for (const ordered_json& e : j["sections"]) {
    require_keys(e, "section", {"name", "degree", "meets"});
    FibreSection s;
    s.name = get_string(e["name"], "section name");
    s.degree = get_int(e["degree"], "section degree");
    if (!e["meets"].is_array()) schema_error("meets is not an array");
    for (const ordered_json& m : e["meets"]) {
      if (!m.is_array() || m.size() != 2)
        schema_error("meets entry is not a [component, number] pair");
      s.meets.emplace_back(get_string(m[0], "meets name"),
                           get_int(m[1], "meets number"));
    }
    g.sections.push_back(std::move(s));
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) schema_error("metadata is not an object");
    for (const auto& [key, value] : j["metadata"].items())
      g.metadata[key] = get_string(value, "metadata value");
  }

  g.validate();
  return g;
}

std::string fibre_graph_to_json(const FibreGraph& g) {
  ordered_json j;
  j["name"] = g.name;
  j["components"] = ordered_json::array();
  for (const FibreComponent& c : g.components) {
    ordered_json e;
    e["name"] = c.name;
    e["multiplicity"] = c.multiplicity;
    e["genus"] = c.genus;
    if (c.self_intersection) e["self_intersection"] = *c.self_intersection;
    j["components"].push_back(e);
  }
  j["intersections"] = ordered_json::array();
  for (const auto& [key, value] : g.intersections)
    j["intersections"].push_back(ordered_json::array(
        {g.components[size_t(key.first)].name,
         g.components[size_t(key.second)].name, value}));
  j["sections"] = ordered_json::array();
  for (const FibreSection& s : g.sections) {
    ordered_json e;
    e["name"] = s.name;
    e["degree"] = s.degree;
    e["meets"] = ordered_json::array();
    for (const auto& [comp, num] : s.meets)
      e["meets"].push_back(ordered_json::array({comp, num}));
    j["sections"].push_back(e);
  }
  if (!g.metadata.empty()) {
    j["metadata"] = ordered_json::object();
    for (const auto& [key, value] : g.metadata) j["metadata"][key] = value;
  }
  return j.dump(2) + "\n";
}

FibreGraph solve_self_intersections(const FibreGraph& g) {
  g.validate();
  FibreGraph out = g;
  const int n = int(out.components.size());
  for (int c = 0; c < n; ++c) {
    long sum = 0;
    for (int d = 0; d < n; ++d)
      if (d != c)
        sum += long(out.components[size_t(d)].multiplicity) *
               out.pair_intersection(c, d);
    const int mult = out.components[size_t(c)].multiplicity;
    if (sum % mult != 0)
      throw Error("solve_self_intersections: non-integral value at \"" +
                  out.components[size_t(c)].name + "\"");
    const int self = int(-sum / mult);
    const auto& prior = g.components[size_t(c)].self_intersection;
    if (prior && *prior != self)
      throw Error("solve_self_intersections: recorded value at \"" +
                  out.components[size_t(c)].name +
                  "\" contradicts the fibre relation");
    out.components[size_t(c)].self_intersection = self;
  }
  return out;
}

void validate_fibre_relations(const FibreGraph& g) {
  if (!g.solved())
    throw Error("validate_fibre_relations: unsolved self-intersections");
  const int n = int(g.components.size());
  for (int c = 0; c < n; ++c) {
    long sum = long(g.components[size_t(c)].multiplicity) *
               *g.components[size_t(c)].self_intersection;
    for (int d = 0; d < n; ++d)
      if (d != c)
        sum += long(g.components[size_t(d)].multiplicity) *
               g.pair_intersection(c, d);
    if (sum != 0)
      throw Error("fibre relation violated at \"" +
                  g.components[size_t(c)].name + "\"");
  }
  for (const FibreSection& s : g.sections) {
    for (const std::vector<int>& fibre : g.fibres()) {
      long deg = 0;
      for (const auto& [comp, num] : s.meets) {
        const int i = g.index_of(comp);
        if (std::find(fibre.begin(), fibre.end(), i) != fibre.end())
          deg += long(g.components[size_t(i)].multiplicity) * num;
      }
      if (deg != s.degree)
        throw Error("section degree violated for \"" + s.name +
                    "\" against the fibre of \"" +
                    g.components[size_t(fibre.front())].name + "\"");
    }
  }
}

int arithmetic_genus_reduced(const FibreGraph& g,
                             const std::vector<std::string>& subset) {
  if (subset.empty())
    throw Error("arithmetic_genus_reduced: empty subset");
  std::vector<int> idx;
  for (const std::string& name : subset) idx.push_back(g.index_of(name));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw Error("arithmetic_genus_reduced: repeated component");

  // connectivity over the induced subgraph
  const size_t r = idx.size();
  std::vector<bool> seen(r, false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    const size_t at = stack.back();
    stack.pop_back();
    for (size_t other = 0; other < r; ++other)
      if (!seen[other] && g.pair_intersection(idx[at], idx[other]) > 0) {
        seen[other] = true;
        ++reached;
        stack.push_back(other);
      }
  }
  if (reached != r)
    throw Error("arithmetic_genus_reduced: subset is disconnected");

  int pairs = 0, genera = 0;
  for (size_t a = 0; a < r; ++a) {
    genera += g.components[size_t(idx[a])].genus;
    for (size_t b = a + 1; b < r; ++b)
      pairs += g.pair_intersection(idx[a], idx[b]);
  }
  return pairs + genera - int(r) + 1;
}

FibreGraph contract_curve(const FibreGraph& g, const std::string& comp) {
  const int e = g.index_of(comp);
  const FibreComponent& excep = g.components[size_t(e)];
  if (!excep.self_intersection)
    throw Error("contract_curve: unsolved self-intersection on \"" + comp +
                "\"");
  if (*excep.self_intersection != -1 || excep.genus != 0)
    throw Error("contract_curve: \"" + comp +
                "\" is not a genus-0 curve of self-intersection -1");

  const int n = int(g.components.size());
  FibreGraph out;
  out.name = g.name;
  out.metadata = g.metadata;
  std::vector<int> shifted(size_t(n), -1);
  for (int i = 0; i < n; ++i) {
    if (i == e) continue;
    shifted[size_t(i)] = int(out.components.size());
    out.components.push_back(g.components[size_t(i)]);
  }
  for (int i = 0; i < n; ++i) {
    if (i == e) continue;
    const int with_e = g.pair_intersection(i, e);
    *out.components[size_t(shifted[size_t(i)])].self_intersection +=
        with_e * with_e;
    for (int j = i + 1; j < n; ++j) {
      if (j == e) continue;
      const int value =
          g.pair_intersection(i, j) + with_e * g.pair_intersection(j, e);
      if (value != 0)
        out.intersections[{shifted[size_t(i)], shifted[size_t(j)]}] = value;
    }
  }
  for (const FibreSection& s : g.sections) {
    FibreSection t;
    t.name = s.name;
    t.degree = s.degree;
    int through_e = 0;
    for (const auto& [name, num] : s.meets)
      if (name == comp) through_e = num;
    for (const auto& [name, num] : s.meets) {
      if (name == comp) continue;
      const int value =
          num + through_e * g.pair_intersection(g.index_of(name), e);
      if (value != 0) t.meets.emplace_back(name, value);
    }
    // a section through the blown-down curve now passes through the image
    // point; its incidence continues with the components that met the curve
    if (through_e != 0)
      for (int i = 0; i < n; ++i) {
        if (i == e) continue;
        const int with_e = g.pair_intersection(i, e);
        if (with_e == 0) continue;
        const std::string& name = g.components[size_t(i)].name;
        bool already = false;
        for (auto& [mname, mnum] : t.meets)
          if (mname == name) already = true;
        if (!already) t.meets.emplace_back(name, through_e * with_e);
      }
    out.sections.push_back(std::move(t));
  }
  out.validate();
  validate_fibre_relations(out);
  return out;
}

bool check_minimal(const FibreGraph& g) {
  if (!g.solved()) throw Error("check_minimal: unsolved self-intersections");
  return std::none_of(g.components.begin(), g.components.end(),
                      [](const FibreComponent& c) {
                        return c.genus == 0 && *c.self_intersection == -1;
                      });
}

namespace {

/// Degree of a node inside one fibre, counting intersection weights.
int weighted_degree(const FibreGraph& g, const std::vector<int>& fibre,
                    int c) {
  int deg = 0;
  for (int d : fibre)
    if (d != c) deg += g.pair_intersection(c, d);
  return deg;
}

/// Walks a weight-1 arm away from `from` starting at `at`; returns the node
/// multiplicities in walk order, or nullopt if the arm branches.
std::optional<std::vector<int>> walk_arm(const FibreGraph& g,
                                         const std::vector<int>& fibre,
                                         int from, int at) {
  std::vector<int> mults;
  while (true) {
    mults.push_back(g.components[size_t(at)].multiplicity);
    std::vector<int> next;
    for (int d : fibre) {
      if (d == at || d == from) continue;
      if (g.pair_intersection(at, d) == 1)
        next.push_back(d);
      else if (g.pair_intersection(at, d) != 0)
        return std::nullopt;
    }
    if (next.empty()) return mults;
    if (next.size() > 1) return std::nullopt;
    from = at;
    at = next.front();
  }
}

std::string classify_one(const FibreGraph& g, const std::vector<int>& fibre) {
  for (int c : fibre) {
    const FibreComponent& comp = g.components[size_t(c)];
    if (comp.genus != 0 || *comp.self_intersection != -2)
      return "unclassified";
  }
  const int n = int(fibre.size());

  // two components meeting twice, both reduced: the smallest cycle
  if (n == 2) {
    const bool a1 = g.pair_intersection(fibre[0], fibre[1]) == 2 &&
                    g.components[size_t(fibre[0])].multiplicity == 1 &&
                    g.components[size_t(fibre[1])].multiplicity == 1;
    return a1 ? "Ã1" : "unclassified";
  }

  std::vector<int> branch;  // weighted degree >= 3
  for (int c : fibre) {
    const int deg = weighted_degree(g, fibre, c);
    if (deg >= 3) branch.push_back(c);
  }

  if (branch.empty()) {
    // every node has weighted degree 2 with single edges: one cycle,
    // all multiplicities 1
    for (int c : fibre) {
      if (weighted_degree(g, fibre, c) != 2 ||
          g.components[size_t(c)].multiplicity != 1)
        return "unclassified";
      for (int d : fibre)
        if (d != c && g.pair_intersection(c, d) > 1) return "unclassified";
    }
    return "Ã" + std::to_string(n - 1);
  }

  if (branch.size() == 1) {
    const int center = branch.front();
    const int cdeg = weighted_degree(g, fibre, center);
    const int cm = g.components[size_t(center)].multiplicity;
    if (cdeg == 4) {
      // D~4: a multiplicity-2 centre with four reduced leaves
      if (n != 5 || cm != 2) return "unclassified";
      for (int d : fibre) {
        if (d == center) continue;
        if (g.pair_intersection(center, d) != 1 ||
            weighted_degree(g, fibre, d) != 1 ||
            g.components[size_t(d)].multiplicity != 1)
          return "unclassified";
      }
      return "D̃4";
    }
    if (cdeg != 3) return "unclassified";
    std::vector<std::vector<int>> arms;
    for (int d : fibre) {
      if (d == center || g.pair_intersection(center, d) == 0) continue;
      if (g.pair_intersection(center, d) != 1) return "unclassified";
      const auto arm = walk_arm(g, fibre, center, d);
      if (!arm) return "unclassified";
      arms.push_back(*arm);
    }
    if (arms.size() != 3) return "unclassified";
    std::sort(arms.begin(), arms.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.size() < b.size();
              });
    const auto arm_is = [](const std::vector<int>& arm,
                           const std::vector<int>& want) {
      return arm == want;
    };
    if (n == 7 && cm == 3 && arm_is(arms[0], {2, 1}) &&
        arm_is(arms[1], {2, 1}) && arm_is(arms[2], {2, 1}))
      return "Ẽ6";
    if (n == 8 && cm == 4 && arm_is(arms[0], {2}) &&
        arm_is(arms[1], {3, 2, 1}) && arm_is(arms[2], {3, 2, 1}))
      return "Ẽ7";
    if (n == 9 && cm == 6 && arm_is(arms[0], {3}) &&
        arm_is(arms[1], {4, 2}) && arm_is(arms[2], {5, 4, 3, 2, 1}))
      return "Ẽ8";
    return "unclassified";
  }

  if (branch.size() == 2) {
    // D~n: every branch node has degree 3 and multiplicity 2; stripping
    // the four multiplicity-1 leaves leaves a chain of multiplicity-2 nodes
    std::vector<int> leaves, chain;
    for (int c : fibre) {
      const int deg = weighted_degree(g, fibre, c);
      const int mult = g.components[size_t(c)].multiplicity;
      if (deg == 1 && mult == 1)
        leaves.push_back(c);
      else if ((deg == 2 || deg == 3) && mult == 2)
        chain.push_back(c);
      else
        return "unclassified";
    }
    if (leaves.size() != 4 || chain.size() + 4 != size_t(n))
      return "unclassified";
    for (int c : fibre)
      for (int d : fibre)
        if (d > c && g.pair_intersection(c, d) > 1) return "unclassified";
    // each branch node carries exactly two leaves
    for (int b : branch) {
      int own = 0;
      for (int l : leaves) own += g.pair_intersection(b, l);
      if (own != 2) return "unclassified";
    }
    return "D̃" + std::to_string(n - 1);
  }

  return "unclassified";
}

}  // namespace

std::vector<std::string> classify_fibres(const FibreGraph& g) {
  if (!g.solved())
    throw Error("classify_fibres: unsolved self-intersections");
  std::vector<std::string> out;
  for (const std::vector<int>& fibre : g.fibres())
    out.push_back(classify_one(g, fibre));
  return out;
}

CoverData parse_cover_data(const std::string& json_text) {
  const ordered_json j = parse_text(json_text);
  require_keys(j, "cover",
               {"name", "components", "uncovered", "contracted", "sections"});
  CoverData c;
  c.name = get_string(j["name"], "name");
  if (!j["components"].is_array()) schema_error("components is not an array");
  for (const ordered_json& e : j["components"]) {
    require_keys(e, "cover component", {"source", "target"},
                 {"source_resolved"});
    CoverEntry entry;
    entry.source = get_string(e["source"], "cover source");
    entry.target = get_string(e["target"], "cover target");
    if (e.contains("source_resolved")) {
      if (!e["source_resolved"].is_boolean())
        schema_error("source_resolved is not a boolean");
      entry.source_resolved = e["source_resolved"].get<bool>();
    }
    c.components.push_back(std::move(entry));
  }
  if (!j["uncovered"].is_array()) schema_error("uncovered is not an array");
  for (const ordered_json& e : j["uncovered"])
    c.uncovered.push_back(get_string(e, "uncovered entry"));
  if (!j["contracted"].is_array()) schema_error("contracted is not an array");
  for (const ordered_json& e : j["contracted"]) {
    require_keys(e, "contracted bunch", {"bunch", "to"});
    CoverBunch bunch;
    if (!e["bunch"].is_array()) schema_error("bunch is not an array");
    for (const ordered_json& b : e["bunch"])
      bunch.bunch.push_back(get_string(b, "bunch entry"));
    bunch.to = get_string(e["to"], "bunch target");
    c.contracted.push_back(std::move(bunch));
  }
  if (!j["sections"].is_array()) schema_error("sections is not an array");
  for (const ordered_json& e : j["sections"]) {
    require_keys(e, "cover section", {"from", "to", "degree"});
    c.sections.push_back(CoverSectionMap{
        get_string(e["from"], "section from"),
        get_string(e["to"], "section to"),
        get_int(e["degree"], "section degree")});
  }
  return c;
}

namespace {

bool has_component(const FibreGraph& g, const std::string& name) {
  for (const FibreComponent& c : g.components)
    if (c.name == name) return true;
  return false;
}

const FibreSection* find_section(const FibreGraph& g,
                                 const std::string& name) {
  for (const FibreSection& s : g.sections)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace

std::vector<CheckResult> validate_cover_map(const FibreGraph& source,
                                            const FibreGraph& target,
                                            const CoverData& cover) {
  std::vector<CheckResult> out;
  const auto add = [&out](const std::string& id, bool pass,
                          const std::string& detail) {
    out.push_back(CheckResult{
        id, pass ? CheckStatus::kPass : CheckStatus::kFail, detail});
  };

  bool targets_ok = true;
  for (const CoverEntry& e : cover.components)
    targets_ok = targets_ok && has_component(target, e.target);
  for (const std::string& u : cover.uncovered)
    targets_ok = targets_ok && has_component(target, u);
  add("cover.targets_exist", targets_ok,
      "declared targets and uncovered names are target components");

  bool sources_ok = true;
  int unresolved = 0;
  for (const CoverEntry& e : cover.components) {
    if (!e.source_resolved) {
      ++unresolved;
      continue;
    }
    sources_ok = sources_ok && has_component(source, e.source);
  }
  add("cover.sources_exist", sources_ok,
      std::to_string(unresolved) + " declared source name(s) left unresolved");

  std::set<std::string> seen_targets, seen_sources;
  bool injective = true;
  for (const CoverEntry& e : cover.components) {
    injective = injective && seen_targets.insert(e.target).second;
    if (e.source_resolved)
      injective = injective && seen_sources.insert(e.source).second;
  }
  add("cover.injective", injective,
      "component correspondence repeats no name where resolved");

  std::set<std::string> computed_uncovered;
  for (const FibreComponent& c : target.components)
    if (!seen_targets.count(c.name)) computed_uncovered.insert(c.name);
  const std::set<std::string> declared(cover.uncovered.begin(),
                                       cover.uncovered.end());
  add("cover.uncovered_exact", computed_uncovered == declared,
      "computed uncovered target set equals the declared one");

  bool bunches_ok = !cover.contracted.empty();
  for (const CoverBunch& b : cover.contracted) {
    if (b.bunch.empty()) {
      bunches_ok = false;
      continue;
    }
    bool names_ok = true;
    for (const std::string& name : b.bunch)
      names_ok = names_ok && has_component(source, name);
    if (!names_ok) {
      bunches_ok = false;
      continue;
    }
    try {
      arithmetic_genus_reduced(source, b.bunch);  // throws iff disconnected
    } catch (const Error&) {
      bunches_ok = false;
    }
  }
  add("cover.bunches_connected", bunches_ok,
      "every contracted bunch is a connected set of source components");

  bool sections_ok = true;
  for (const CoverSectionMap& m : cover.sections) {
    const FibreSection* from = find_section(source, m.from);
    const FibreSection* to = find_section(target, m.to);
    if (!from || !to || m.degree <= 0) {
      sections_ok = false;
      continue;
    }
    sections_ok = sections_ok && from->degree == m.degree * to->degree;
  }
  add("cover.section_degrees", sections_ok,
      "source section degree equals map degree times target degree");

  return out;
}

}  // namespace qef
