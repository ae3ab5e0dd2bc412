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
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qef/delta.hpp"
#include "qef/expansions.hpp"
#include "qef/fibre_graph.hpp"
#include "qef/iso.hpp"
#include "qef/literal.hpp"
#include "qef/quartic.hpp"
#include "qef/suites.hpp"

namespace {

using qef::CheckStatus;
using qef::Gf2k;
using qef::RatFunc;
using QP = qef::QuarticParams<Gf2k>;

constexpr const char* kLiteralGrammar =
    "field-element literals: expressions in the generator w of GF(2^k) and "
    "the indeterminate t, built from '+', '*', '/', '^', parentheses and "
    "the digits 0 and 1, e.g. \"w^2*t + 1\"";

struct GlobalOpts {
  int k = 2;
  uint32_t seed = 0;
  int prec = 12;
  std::string data_dir = "data";
  bool text = false;
};

int emit(const qef::Report& r, const GlobalOpts& g) {
  std::cout << (g.text ? r.to_text() : r.to_json());
  return r.exit_status();
}

QP parse_params(const std::vector<std::string>& lits, int k) {
  return QP{qef::parse_gf2k_literal(lits[0], k),
            qef::parse_gf2k_literal(lits[1], k),
            qef::parse_gf2k_literal(lits[2], k),
            qef::parse_gf2k_literal(lits[3], k)};
}

int cmd_verify(const std::string& suite, const GlobalOpts& g) {
  const qef::SuiteOptions opt{g.k, g.seed, g.prec, g.data_dir};
  return emit(qef::run_suite(suite, opt), g);
}

int cmd_count(const std::vector<std::string>& lits, const GlobalOpts& g) {
  const QP q = parse_params(lits, g.k);
  qef::Report r;
  r.suite = "count";
  r.k = g.k;
  r.seed = g.seed;

  const size_t nq = qef::enumerate_points(qef::build_quartic(q)).size();
  const size_t ne =
      qef::enumerate_points(qef::build_cubic(q.a, q.eta())).size();
  r.add("count.fibre.points", true, "#Q = " + std::to_string(nq));
  r.add("count.cubic.points", true, "#E = " + std::to_string(ne));
  if (q.eta().is_zero()) {
    r.checks.push_back({"count.bijection", CheckStatus::kSkip,
                        "bijection asserted only for c e != 0"});
  } else {
    r.add("count.bijection", nq == ne,
          "#Q = " + std::to_string(nq) + ", #E = " + std::to_string(ne));
  }
  std::string label = qef::fibre_type_label(qef::classify_fibre(q));
  if (!q.c.is_zero())
    label += ", geometric genus " +
             std::to_string(qef::geometric_genus_of_fibre(q));
  r.add("count.taxonomy", true, label);
  r.sort_checks();
  return emit(r, g);
}

int cmd_delta(const std::vector<std::string>& lits, const GlobalOpts& g) {
  const QP q = parse_params(lits, g.k);
  qef::Report r;
  r.suite = "delta";
  r.k = g.k;
  r.seed = g.seed;
  r.add("delta.taxonomy", true, qef::fibre_type_label(qef::classify_fibre(q)));

  if (q.c.is_zero()) {
    r.checks.push_back(
        {"delta.double_point", CheckStatus::kSkip,
         "reducible fibre: the singular locus is not isolated"});
  } else {
    const auto curve = qef::build_quartic(q);
    const qef::ProjPoint<Gf2k> dp(q.b.zero(), q.b.one(), q.b.sqrt());
    const int db = qef::delta_blowup(curve, dp);
    r.add("delta.double_point", db == 2,
          "delta = " + std::to_string(db) + " at (0 : 1 : b^{1/2})");
    const auto br = qef::branch_parametrization(q.a.sqrt(), q.b.sqrt(),
                                                q.c.sqrt(), q.e.sqrt(), 16);
    const auto w =
        br.z + qef::Laurent<Gf2k>::monomial(br.z.coeff(0), 0);
    const int ds = qef::delta_semigroup(br.x, w);
    r.add("delta.double_point.semigroup", ds == db,
          "value semigroup gives delta = " + std::to_string(ds));
    if (q.e.is_zero()) {
      const int dn =
          qef::delta_blowup(curve, qef::ProjPoint<Gf2k>(
                                       q.a.zero(), q.a.zero(), q.a.one()));
      r.add("delta.node", dn == 1,
            "delta = " + std::to_string(dn) + " at (0 : 0 : 1)");
    }
    const int genus = qef::geometric_genus_of_fibre(q);
    r.add("delta.genus", genus == (q.e.is_zero() ? 0 : 1),
          "geometric genus " + std::to_string(genus));
  }
  r.sort_checks();
  return emit(r, g);
}

int cmd_series(const std::vector<std::string>& lits, const GlobalOpts& g) {
  const QP q = parse_params(lits, g.k);
  qef::Report r;
  r.suite = "series";
  r.k = g.k;
  r.seed = g.seed;
  const int prec = std::max(g.prec, 8);

  const Gf2k A = q.a.sqrt(), B = q.b.sqrt(), C = q.c.sqrt(), E = q.e.sqrt();
  const auto br = qef::branch_parametrization(A, B, C, E, prec);
  r.add("series.branch.z", true, "z(t) = " + br.z.str());
  qef::Laurent<Gf2k> wl = br.z * br.z + (br.y * br.y).scale(q.b) +
                          (br.x * br.x).scale(q.a * q.b);
  qef::Laurent<Gf2k> tail = wl.scale(q.e) + br.y * br.y + br.x * br.y +
                            (br.x * br.x).scale(q.a);
  const auto residual = br.x.pow(4).scale(q.c) + wl * tail;
  r.add("series.branch.on_fibre", residual.known_zero(),
        "fibre equation vanishes to order " + std::to_string(residual.prec()));
  const auto s = qef::expand_tate13(A, (q.eta()).sqrt(), prec);
  r.add("series.marked_point", s.ord().value_or(0) == 3 && s.coeff(3).is_one(),
        "u(t) = " + s.str());
  r.sort_checks();
  return emit(r, g);
}

int cmd_iso(const std::vector<std::string>& lits, const GlobalOpts& g) {
  using QR = qef::QuarticParams<RatFunc>;
  const auto lit = [&](int i) {
    return qef::parse_ratfunc_literal(lits[size_t(i)], g.k);
  };
  const QR q1{lit(0), lit(1), lit(2), lit(3)};
  const QR q2{lit(4), lit(5), lit(6), lit(7)};

  qef::Report r;
  r.suite = "iso";
  r.k = g.k;
  r.seed = g.seed;
  try {
    std::string reason;
    const auto w = qef::isomorphism_decide(q1, q2, &reason);
    if (w) {
      r.add("iso.decision", true, "isomorphic: " + w->str());
      r.add("iso.verification", qef::forward_transform(q1, *w) == q2,
            "witness re-applied to the source parameters");
    } else {
      r.add("iso.decision", true, "not isomorphic (" + reason + ")");
    }
  } catch (const qef::UnsupportedFragment& e) {
    r.checks.push_back({"iso.decision", CheckStatus::kSkip,
                        std::string("undecided: unsupported fragment (") +
                            e.what() + ")"});
  }
  r.sort_checks();
  return emit(r, g);
}

int cmd_fibre(const std::string& path, const std::string& action,
              const std::string& component) {
  std::ifstream in(path);
  if (!in.good()) throw qef::Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  qef::FibreGraph g = qef::parse_fibre_graph(text.str());
  if (!g.solved()) g = qef::solve_self_intersections(g);

  if (action == "solve") {
    std::cout << qef::fibre_graph_to_json(g);
    return 0;
  }
  if (action == "contract") {
    if (component.empty())
      throw qef::Error("contract needs a component name");
    std::cout << qef::fibre_graph_to_json(qef::contract_curve(g, component));
    return 0;
  }
  if (action == "classify") {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const std::string& l : qef::classify_fibres(g)) labels.push_back(l);
    std::cout << labels.dump() << "\n";
    return 0;
  }
  if (action == "minimal") {
    nlohmann::ordered_json out;
    out["minimal"] = qef::check_minimal(g);
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (action == "genus") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& fibre : g.fibres()) {
      nlohmann::ordered_json entry;
      std::vector<std::string> names;
      for (int i : fibre) names.push_back(g.components[size_t(i)].name);
      entry["components"] = names;
      entry["arithmetic_genus"] = qef::arithmetic_genus_reduced(g, names);
      out.push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  throw qef::Error("unknown fibre action \"" + action + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification suites for a family of plane quartics in "
      "characteristic 2, their cubic targets and the associated pencils."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GlobalOpts g;
  app.add_option("--k", g.k, "field size exponent: coefficients in GF(2^k)")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for the randomized respecializations")
      ->capture_default_str();
  app.add_option("--prec", g.prec, "series precision window")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  app.add_option("--data", g.data_dir, "directory with the pencil graph files")
      ->capture_default_str();
  auto* text_flag =
      app.add_flag("--text", g.text, "plain-text report instead of JSON");
  app.add_flag("--json", "JSON report (the default)")->excludes(text_flag);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "all, symbolic, series, torsion, delta or intersection")
      ->capture_default_str();
  verify->fallthrough();

  std::vector<std::string> count_lits;
  auto* count = app.add_subcommand(
      "count", std::string("point counts of one fibre and its cubic; ") +
                   kLiteralGrammar);
  count->add_option("params", count_lits, "a b c e")->expected(4);
  count->fallthrough();

  std::vector<std::string> delta_lits;
  auto* delta = app.add_subcommand(
      "delta", "delta invariants of one fibre at its singular points");
  delta->add_option("params", delta_lits, "a b c e")->expected(4);
  delta->fallthrough();

  std::vector<std::string> series_lits;
  auto* series = app.add_subcommand(
      "series", "branch and marked-point series of one fibre");
  series->add_option("params", series_lits, "a b c e")->expected(4);
  series->fallthrough();

  std::vector<std::string> iso_lits;
  auto* iso = app.add_subcommand(
      "iso", std::string("decide isomorphism of two models over GF(2^k)(t); ") +
                 kLiteralGrammar);
  iso->add_option("params", iso_lits, "a b c e a' b' c' e'")->expected(8);
  iso->fallthrough();

  std::string fibre_path, fibre_action, fibre_component;
  auto* fibre = app.add_subcommand(
      "fibre", "solve, contract or classify a pencil fibre graph");
  fibre->add_option("file", fibre_path, "graph JSON file")->required();
  fibre->add_option("action", fibre_action,
                    "solve, genus, contract, classify or minimal")
      ->required();
  fibre->add_option("component", fibre_component,
                    "component to contract (contract only)");
  fibre->fallthrough();

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(suite, g);
    if (count->parsed()) return cmd_count(count_lits, g);
    if (delta->parsed()) return cmd_delta(delta_lits, g);
    if (series->parsed()) return cmd_series(series_lits, g);
    if (iso->parsed()) return cmd_iso(iso_lits, g);
    if (fibre->parsed())
      return cmd_fibre(fibre_path, fibre_action, fibre_component);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
