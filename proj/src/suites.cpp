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
#include "qef/suites.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "qef/delta.hpp"
#include "qef/expansions.hpp"
#include "qef/fibre_graph.hpp"
#include "qef/quartic.hpp"
#include "qef/symbolic.hpp"

namespace qef {

namespace {

using PP = ProjPoint<Gf2k>;
using QP = QuarticParams<Gf2k>;

/// One aggregated pass/fail item: pass while no counterexample is seen.
struct Tally {
  std::string id;
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& where) {
    if (!cond && ok) {
      ok = false;
      detail = "counterexample at " + where;
    }
  }
  CheckResult done(const std::string& summary) const {
    return CheckResult{id, ok ? CheckStatus::kPass : CheckStatus::kFail,
                       ok ? summary : detail};
  }
};

/// The curve equation evaluated on a y-expansion; known_zero certifies
/// every coefficient inside the window.
template <class R>
Laurent<R> curve_residual(const Weierstrass<R>& w, const Laurent<R>& y) {
  using L = Laurent<R>;
  L x = y.shift(1);
  return y * y + (x * y).scale(w.a1) + y.scale(w.a3) + x * x * x +
         (x * x).scale(w.a2) + x.scale(w.a4) + L::monomial(w.a6, 0);
}

template <class R>
Laurent<R> quartic_residual(const R& a, const R& b, const R& c, const R& e,
                            const BranchParametrization<R>& p) {
  using L = Laurent<R>;
  L w = p.z * p.z + (p.y * p.y).scale(b) + (p.x * p.x).scale(a * b);
  L tail = w.scale(e) + p.y * p.y + p.x * p.y + (p.x * p.x).scale(a);
  return p.x.pow(4).scale(c) + w * tail;
}

std::string read_data_file(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in.good()) throw Error("cannot read " + dir + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

PP double_point(const QP& q) {
  return PP(q.b.zero(), q.b.one(), q.b.sqrt());
}

/// Two-torsion and order-four structure of one fibre; appends failures
/// to the tallies.
void torsion_one_fibre(const QP& q, Tally& on_curve, Tally& doubles,
                       Tally& unique, Tally& four) {
  const std::string at = q.str() + " over GF(2^" + std::to_string(q.a.k()) + ")";
  const PlaneCurve<Gf2k> curve = build_quartic(q);
  const PP neutral = double_point(q);
  const PP t2 = order_two_point(q);
  const PP expected(q.a.zero(), q.a.one(), q.b.sqrt() + q.e.inv().sqrt());

  on_curve.expect(t2 == expected && curve.contains(t2) && t2 != neutral, at);
  doubles.expect(transported_add(q, t2, t2) == neutral, at);

  int order2 = 0;
  std::set<PP> order4;
  for (const PP& p : enumerate_points(curve)) {
    const PP d = transported_add(q, p, p);
    if (d == neutral && p != neutral) {
      ++order2;
      unique.expect(p == t2, at);
    }
    if (d == t2) order4.insert(p);
  }
  unique.expect(order2 == 1, at);

  const InflectionPoints infl = inflection_points(q);
  if (infl.field_k == q.a.k()) {
    const std::set<PP> printed{infl.points[0], infl.points[1]};
    four.expect(order4 == printed, at);
  } else {
    // the order-four locus only appears over the quadratic extension
    four.expect(order4.empty(), at);
    const int m = infl.field_k;
    const QP qe{q.a.embed_into(m), q.b.embed_into(m), q.c.embed_into(m),
                q.e.embed_into(m)};
    const PlaneCurve<Gf2k> ce = embed_curve(curve, m);
    const PP t2e = embed_point(t2, m);
    for (const PP& p : infl.points) {
      four.expect(ce.contains(p), at);
      four.expect(transported_add(qe, p, p) == t2e, at);
    }
  }
}

/// Seeded parameter tuples with c e != 0; sample == 0 means all of them.
std::vector<QP> fibre_tuples(int k, uint32_t seed, int sample,
                             bool require_e_nonzero) {
  std::vector<QP> out;
  const auto elems = gf2k_elements(k);
  if (sample == 0) {
    for (const Gf2k& a : elems)
      for (const Gf2k& b : elems)
        for (const Gf2k& c : elems)
          for (const Gf2k& e : elems) {
            if (c.is_zero()) continue;
            if (require_e_nonzero && e.is_zero()) continue;
            out.push_back(QP{a, b, c, e});
          }
    return out;
  }
  std::mt19937 rng{seed};
  const auto draw = [&] { return elems[rng() % elems.size()]; };
  while (int(out.size()) < sample) {
    const QP q{draw(), draw(), draw(), draw()};
    if (q.c.is_zero()) continue;
    if (require_e_nonzero && q.e.is_zero()) continue;
    out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> series_printed_checks(int prec) {
  std::vector<CheckResult> out;
  const int window = std::max(prec, 8);
  const auto add = [&out](const std::string& id, bool ok,
                          const std::string& detail) {
    out.push_back(
        {id, ok ? CheckStatus::kPass : CheckStatus::kFail, detail});
  };

  {
    auto ctx = std::make_shared<MCtx>(
        std::vector<std::string>{"a1", "a2", "a3", "a4", "a6"});
    auto V = [&](const char* n) { return MPoly::var(ctx, n); };
    const MPoly a1 = V("a1"), a2 = V("a2"), a3 = V("a3"), a4 = V("a4"),
                a6 = V("a6");
    const Weierstrass<MPoly> w{a1, a2, a3, a4, a6};
    const Laurent<MPoly> y = expand_y_at_infinity(w, 2);
    add("series.general.y5",
        y.ord().value() == -3 && y.coeff(-3).is_one() && y.coeff(-2) == a1 &&
            y.coeff(-1) == a2 && y.coeff(0) == a3 &&
            y.coeff(1) == a4 + a1 * a3,
        "t^-3..t^1 read 1, a1, a2, a3, a4 + a1 a3");
    const Laurent<MPoly> res =
        curve_residual(w, expand_y_at_infinity(w, window));
    add("series.general.residual", res.known_zero(),
        "curve equation vanishes to order " + std::to_string(res.prec()));
  }

  {
    auto ctx = std::make_shared<MCtx>(std::vector<std::string>{
        "a", "a4", "a6", "b0", "b1", "b2", "b3", "c", "d"});
    auto V = [&](const char* n) { return MPoly::var(ctx, n); };
    const MPoly a = V("a"), a4 = V("a4");
    const MPoly b0 = V("b0"), b1 = V("b1"), b2 = V("b2"), b3 = V("b3");
    const MPoly c = V("c"), d = V("d");
    const MPoly zero = MPoly::zero(ctx);
    const Weierstrass<MPoly> w{zero, zero, a, a4, V("a6")};
    const Laurent<MPoly> y = expand_y_at_infinity(w, 2);
    add("series.no_xy_shape.y", y.coeff(-2).is_zero() &&
            y.coeff(-1).is_zero() && y.coeff(0) == a && y.coeff(1) == a4,
        "t^-2..t^1 read 0, 0, a, a4");
    const ZSquaredModel<MPoly> m{w, b0, b1, b2, b3, c, d};
    const Laurent<MPoly> z2 = expand_z_squared(m, 2);
    add("series.no_xy_shape.z2",
        z2.coeff(-6) == b0 && z2.coeff(-5) == b1 && z2.coeff(-4) == b2 &&
            z2.coeff(-3) == b3 && z2.coeff(-2) == c &&
            z2.coeff(-1).is_zero() && z2.coeff(0) == d + a * b3 + a * a * b0 &&
            z2.coeff(1) == a * c + a * a * b1 + a4 * b3,
        "all printed orders down to t^1");
  }

  {
    auto ctx = std::make_shared<MCtx>(std::vector<std::string>{
        "a", "D", "b", "b1", "b2", "b3", "c", "d"});
    auto V = [&](const char* n) { return MPoly::var(ctx, n); };
    const MPoly a = V("a"), b = V("b");
    const MPoly b1 = V("b1"), b2 = V("b2"), b3 = V("b3"), c = V("c"),
                d = V("d");
    const MPoly zero = MPoly::zero(ctx), one = MPoly::one(ctx);
    const Weierstrass<MPoly> w{one, a, zero, zero, V("D")};
    const Laurent<MPoly> y = expand_y_at_infinity(w, 2);
    add("series.unit_xy_shape.y",
        y.coeff(-2).is_one() && y.coeff(-1) == a && y.coeff(0).is_zero() &&
            y.coeff(1).is_zero(),
        "t^-2..t^1 read 1, a, 0, 0");
    const ZSquaredModel<MPoly> m{w, b, b1, b2, b3, c, d};
    const Laurent<MPoly> z2 = expand_z_squared(m, 2);
    add("series.unit_xy_shape.z2",
        z2.coeff(-6) == b && z2.coeff(-5) == b1 && z2.coeff(-4) == b + b2 &&
            z2.coeff(-3) == b1 + b3 &&
            z2.coeff(-2) == a * a * b + b2 + b3 + c &&
            z2.coeff(-1) == a * a * b1 + a * b3 + c &&
            z2.coeff(0) == a * a * b2 + a * c + d && z2.coeff(1).is_zero(),
        "all printed orders down to t^1");
  }

  {
    auto ctx = std::make_shared<MCtx>(std::vector<std::string>{"A", "H"});
    const MPoly A = MPoly::var(ctx, "A"), H = MPoly::var(ctx, "H");
    const MPoly one = MPoly::one(ctx);
    const Laurent<MPoly> s = expand_tate13(A, H, 8);
    add("series.marked_point.orders",
        s.ord().value() == 3 && s.coeff(3).is_one() && s.coeff(4).is_one() &&
            s.coeff(5) == one + A && s.coeff(6).is_one() &&
            s.coeff(7) == one + A + A * A + H,
        "orders 3..7 read 1, 1, 1 + A, 1, 1 + A + A^2 + H");
  }

  {
    auto ctx =
        std::make_shared<MCtx>(std::vector<std::string>{"A", "B", "C", "E"});
    auto V = [&](const char* n) { return MPoly::var(ctx, n); };
    const MPoly A = V("A"), B = V("B"), C = V("C"), E = V("E");
    const MPoly one = MPoly::one(ctx);
    const BranchParametrization<MPoly> p =
        branch_parametrization(A, B, C, E, std::max(window, 12));
    add("series.branch.z",
        p.x == Laurent<MPoly>::monomial(one, 2) &&
            p.y == Laurent<MPoly>::monomial(one, 0) && p.z.coeff(0) == B &&
            p.z.coeff(1).is_zero() && p.z.coeff(2) == A * B &&
            p.z.coeff(3).is_zero() && p.z.coeff(4) == C && p.z.coeff(5) == C,
        "x = t^2, y = 1, z = B + A B t^2 + C t^4 + C t^5 + ...");
    const Laurent<MPoly> res = quartic_residual(A * A, B * B, C * C, E * E, p);
    add("series.branch.residual", res.known_zero(),
        "quartic vanishes on the branch to order " + std::to_string(res.prec()));
  }

  return out;
}

std::vector<CheckResult> torsion_structure_checks(int k, uint32_t seed,
                                                  int sample_tuples) {
  std::vector<CheckResult> out;
  if (k > 8) {
    out.push_back({"torsion.sweep", CheckStatus::kSkip,
                   "point enumeration beyond k = 8 exceeds the time budget"});
    return out;
  }

  const auto tuples = fibre_tuples(k, seed, sample_tuples, true);
  Tally on_curve{"torsion.two.on_curve"};
  Tally doubles{"torsion.two.doubles_to_neutral"};
  Tally unique{"torsion.two.unique"};
  Tally four{"torsion.four.matches_inflections"};
  for (const QP& q : tuples)
    torsion_one_fibre(q, on_curve, doubles, unique, four);

  const std::string scope = std::to_string(tuples.size()) +
                            (sample_tuples == 0 ? " fibres (all with c e != 0)"
                                                : " sampled fibres");
  out.push_back(on_curve.done(scope));
  out.push_back(doubles.done(scope));
  out.push_back(unique.done(scope));
  out.push_back(four.done(scope));

  // fibres without a transported group are rejected up front
  const Gf2k z = Gf2k::zero(k), o = Gf2k::one(k), g = Gf2k::gen(k);
  bool rejected = true;
  for (const QP& bad : {QP{z, g, o, z}, QP{z, g, z, o}}) {
    try {
      order_two_point(bad);
      rejected = false;
    } catch (const Error&) {
    }
    try {
      transported_add(bad, double_point(bad), double_point(bad));
      rejected = false;
    } catch (const Error&) {
    }
  }
  out.push_back({"torsion.degenerate.rejected",
                 rejected ? CheckStatus::kPass : CheckStatus::kFail,
                 "c e = 0 carries no transported group"});
  return out;
}

std::vector<CheckResult> delta_structure_checks(int k, uint32_t seed,
                                                int sample_tuples) {
  std::vector<CheckResult> out;

  Tally blowup{"delta.double.blowup"};
  Tally semigroup{"delta.double.semigroup_agrees"};
  const auto smooth = fibre_tuples(k, seed, sample_tuples, true);
  for (const QP& q : smooth) {
    const std::string at = q.str();
    const int db = delta_blowup(build_quartic(q), double_point(q));
    blowup.expect(db == 2, at);
    const Gf2k A = q.a.sqrt(), B = q.b.sqrt(), C = q.c.sqrt(),
               E = q.e.sqrt();
    const auto br = branch_parametrization(A, B, C, E, 16);
    const Laurent<Gf2k> w =
        br.z + Laurent<Gf2k>::monomial(br.z.coeff(0), 0);
    semigroup.expect(delta_semigroup(br.x, w) == db, at);
  }
  const std::string scope =
      std::to_string(smooth.size()) +
      (sample_tuples == 0 ? " fibres (all with c e != 0)" : " sampled fibres");
  out.push_back(blowup.done(scope));
  out.push_back(semigroup.done(scope));

  // e = 0: the strange point joins the fibre as a node of delta one
  Tally node{"delta.node.blowup_one"};
  int nodal = 0;
  for (const QP& q : fibre_tuples(k, seed + 1, sample_tuples, false)) {
    if (!q.e.is_zero()) continue;
    ++nodal;
    const PlaneCurve<Gf2k> curve = build_quartic(q);
    node.expect(delta_blowup(curve, PP(q.a.zero(), q.a.zero(), q.a.one())) == 1,
                q.str());
    node.expect(delta_blowup(curve, double_point(q)) == 2, q.str());
  }
  out.push_back(node.done(std::to_string(nodal) + " nodal fibres"));

  // genus labels of the 3 x 3 x 3 sweep over GF(4), b fixed
  Tally labels{"delta.taxonomy.labels"};
  Tally genus{"delta.taxonomy.genus"};
  const Gf2k z2 = Gf2k::zero(2), o2 = Gf2k::one(2), g2 = Gf2k::gen(2);
  for (const Gf2k& a : {z2, o2, g2})
    for (const Gf2k& c : {z2, o2, g2})
      for (const Gf2k& e : {z2, o2, g2}) {
        const QP q{a, g2, c, e};
        const std::string at = q.str();
        const FibreType t = classify_fibre(q);
        if (c.is_zero()) {
          labels.expect(t == FibreType::kReducibleDoubleLine, at);
          genus.expect(curve_has_line_factor(build_quartic(q), 1), at);
        } else if (e.is_zero()) {
          labels.expect(t == FibreType::kNodalRational, at);
          genus.expect(geometric_genus_of_fibre(q) == 0, at);
        } else {
          labels.expect(t == FibreType::kGenusOne, at);
          genus.expect(geometric_genus_of_fibre(q) == 1, at);
        }
      }
  out.push_back(labels.done("27 parameter triples over GF(4)"));
  out.push_back(genus.done("27 parameter triples over GF(4)"));
  return out;
}

std::vector<CheckResult> intersection_checks(const std::string& data_dir) {
  std::vector<CheckResult> out;
  const auto add = [&out](const std::string& id, bool ok,
                          const std::string& detail) {
    out.push_back(
        {id, ok ? CheckStatus::kPass : CheckStatus::kFail, detail});
  };

  FibreGraph resolved, minimal, prime;
  CoverData cover;
  try {
    resolved = parse_fibre_graph(read_data_file(data_dir, "pencil_S_resolved.json"));
    minimal = parse_fibre_graph(read_data_file(data_dir, "pencil_S_minimal.json"));
    prime = parse_fibre_graph(read_data_file(data_dir, "pencil_Sprime.json"));
    cover = parse_cover_data(read_data_file(data_dir, "cover_correspondence.json"));
  } catch (const Error& e) {
    add("intersection.data.loaded", false, e.what());
    return out;
  }
  add("intersection.data.loaded", true, "four graph files");

  try {
    const FibreGraph solved = solve_self_intersections(resolved);
    const std::map<std::string, int> printed = {
        {"A1", -2}, {"A2", -3}, {"A3", -3}, {"A4", -3}, {"Z", -1},
        {"X", -2},  {"Y", -2},  {"B1", -3}, {"B2", -3}, {"B3", -2},
        {"B4", -2}, {"B5", -2}, {"B6", -2}, {"B7", -2}, {"B8", -2}};
    bool match = true;
    for (const FibreComponent& c : solved.components)
      match = match && c.self_intersection == printed.at(c.name);
    add("intersection.self.quartic_pencil", match,
        "15 solved values match the recorded ones");

    const FibreGraph sprime = solve_self_intersections(prime);
    bool all2 = true;
    for (const FibreComponent& c : sprime.components)
      all2 = all2 && c.self_intersection == -2;
    add("intersection.self.cubic_pencil", all2, "all components are (-2)");

    bool relations = true;
    std::string why = "zero relations and section degrees hold";
    try {
      validate_fibre_relations(solved);
      validate_fibre_relations(sprime);
      validate_fibre_relations(minimal);
    } catch (const Error& e) {
      relations = false;
      why = e.what();
    }
    add("intersection.relations", relations, why);

    add("intersection.genus.vertical_fibre",
        arithmetic_genus_reduced(solved, {"A2", "A4", "A3", "Z", "A1"}) == 1,
        "adjunction over the five components");
    add("intersection.genus.octagon_fibre",
        arithmetic_genus_reduced(solved, {"X", "B1", "B8", "B2", "B3", "B5",
                                          "Y", "B7", "B6", "B4"}) == 1,
        "adjunction over the ten components");

    const FibreGraph contracted = contract_curve(solved, "Z");
    FibreGraph expected = minimal;
    expected.name = contracted.name;
    expected.metadata = contracted.metadata;
    add("intersection.contract.blowdown",
        contracted == expected &&
            contracted.components[size_t(contracted.index_of("A3"))]
                    .self_intersection == -2,
        "contracting Z reproduces the shipped minimal graph");
    add("intersection.minimal.after_contraction",
        check_minimal(contracted) && !check_minimal(solved),
        "no (-1) component survives the blowdown");

    add("intersection.classify.cubic_pencil",
        classify_fibres(sprime) == std::vector<std::string>{"Ẽ7", "Ã1"},
        "fibres of the elliptic pencil");
    add("intersection.classify.quartic_pencil",
        classify_fibres(contracted) ==
            std::vector<std::string>{"unclassified", "unclassified"},
        "(-3) components keep the quasi-elliptic fibres unlisted");

    for (const CheckResult& c : validate_cover_map(minimal, sprime, cover))
      out.push_back(c);

    const auto status_of = [](const std::vector<CheckResult>& checks,
                              const std::string& id) {
      for (const CheckResult& c : checks)
        if (c.id == id) return c.status;
      return CheckStatus::kSkip;
    };
    CoverData fewer = cover;
    fewer.uncovered.pop_back();
    add("intersection.cover.mutation_uncovered",
        status_of(validate_cover_map(minimal, sprime, fewer),
                  "cover.uncovered_exact") == CheckStatus::kFail,
        "dropping a name from the uncovered set is caught");
    CoverData wrong = cover;
    for (CoverSectionMap& s : wrong.sections)
      if (s.degree == 2) s.degree = 1;
    add("intersection.cover.mutation_degree",
        status_of(validate_cover_map(minimal, sprime, wrong),
                  "cover.section_degrees") == CheckStatus::kFail,
        "halving the inseparable section degree is caught");
  } catch (const Error& e) {
    add("intersection.computation", false, e.what());
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"symbolic", "series", "torsion", "delta", "intersection"};
}

namespace {

std::vector<CheckResult> run_one(const std::string& name,
                                 const SuiteOptions& opt) {
  if (name == "symbolic") {
    std::vector<CheckResult> out = verify_symbolic_suite(opt.seed);
    for (CheckResult& c : psi_inverse_expression_report(opt.seed))
      out.push_back(std::move(c));
    return out;
  }
  if (name == "series") return series_printed_checks(opt.prec);
  if (name == "torsion") {
    const int sample = opt.k <= 3 ? 0 : opt.k <= 4 ? 300 : opt.k <= 6 ? 60 : 16;
    return torsion_structure_checks(opt.k, opt.seed, sample);
  }
  if (name == "delta") {
    const int sample = opt.k <= 3 ? 0 : 60;
    return delta_structure_checks(opt.k, opt.seed, sample);
  }
  if (name == "intersection") return intersection_checks(opt.data_dir);
  throw Error("unknown suite \"" + name + "\"");
}

}  // namespace

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (opt.k < 1 || opt.k > 16) throw Error("field size k out of range");
  Report r;
  r.suite = name;
  r.k = opt.k;
  r.seed = opt.seed;
  if (name == "all") {
    for (const std::string& s : suite_names())
      for (CheckResult& c : run_one(s, opt)) r.checks.push_back(std::move(c));
  } else {
    r.checks = run_one(name, opt);
  }
  r.sort_checks();
  return r;
}

}  // namespace qef
