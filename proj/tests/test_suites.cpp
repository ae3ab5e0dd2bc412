#include "doctest.h"
#include "qef/gf2k.hpp"
#include "qef/suites.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

using qef::CheckResult;
using qef::CheckStatus;
using qef::Report;
using qef::SuiteOptions;

namespace {

SuiteOptions shipped() {
  SuiteOptions opt;
  opt.data_dir = QEF_DATA_DIR;
  return opt;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kPass;
  });
}

std::set<std::string> ids_of(const std::vector<CheckResult>& checks) {
  std::set<std::string> out;
  for (const CheckResult& c : checks) out.insert(c.id);
  return out;
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("suite names are fixed and unknown names are rejected") {
  CHECK(qef::suite_names() ==
        std::vector<std::string>{"symbolic", "series", "torsion", "delta",
                                 "intersection"});
  CHECK_THROWS_AS(qef::run_suite("nosuch", shipped()), qef::Error);
  SuiteOptions bad = shipped();
  bad.k = 0;
  CHECK_THROWS_AS(qef::run_suite("series", bad), qef::Error);
  bad.k = 17;
  CHECK_THROWS_AS(qef::run_suite("series", bad), qef::Error);
}

TEST_CASE("the full run passes and is byte-deterministic") {
  const Report r1 = qef::run_suite("all", shipped());
  const Report r2 = qef::run_suite("all", shipped());
  CHECK(r1.failed() == 0);
  CHECK(r1.exit_status() == 0);
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.to_text() == r2.to_text());
  // sorted ids, parseable JSON with the expected envelope
  const auto j = nlohmann::json::parse(r1.to_json());
  CHECK(j["schema"] == "report-v1");
  CHECK(j["suite"] == "all");
  CHECK(j["k"] == 2);
  CHECK(j["failed"] == 0);
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) ids.push_back(c["id"].get<std::string>());
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(ids.size() > 30);
}

TEST_CASE("torsion checks sweep exhaustively for small fields") {
  const auto checks = qef::torsion_structure_checks(2, 0, 0);
  CHECK(all_pass(checks));
  const auto ids = ids_of(checks);
  CHECK(ids.count("torsion.two.on_curve") == 1);
  CHECK(ids.count("torsion.two.doubles_to_neutral") == 1);
  CHECK(ids.count("torsion.two.unique") == 1);
  CHECK(ids.count("torsion.four.matches_inflections") == 1);
  CHECK(ids.count("torsion.degenerate.rejected") == 1);
  // 4 * 4 * 3 * 3 tuples with c e != 0 over GF(4)
  bool scope_seen = false;
  for (const CheckResult& c : checks)
    if (c.detail.find("144 fibres") != std::string::npos) scope_seen = true;
  CHECK(scope_seen);
  // enumeration beyond GF(256) is refused, not attempted
  const auto big = qef::torsion_structure_checks(9, 0, 0);
  REQUIRE(big.size() == 1);
  CHECK(big[0].status == CheckStatus::kSkip);
}

TEST_CASE("delta checks pass exhaustively over GF(4)") {
  const auto checks = qef::delta_structure_checks(2, 0, 0);
  CHECK(all_pass(checks));
  const auto ids = ids_of(checks);
  CHECK(ids.count("delta.double.blowup") == 1);
  CHECK(ids.count("delta.double.semigroup_agrees") == 1);
  CHECK(ids.count("delta.node.blowup_one") == 1);
  CHECK(ids.count("delta.taxonomy.labels") == 1);
  CHECK(ids.count("delta.taxonomy.genus") == 1);
}

TEST_CASE("series checks pass and cover every printed expansion") {
  const auto checks = qef::series_printed_checks(12);
  CHECK(all_pass(checks));
  const auto ids = ids_of(checks);
  for (const char* id :
       {"series.general.y5", "series.no_xy_shape.z2", "series.unit_xy_shape.z2",
        "series.marked_point.orders", "series.branch.z"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("intersection checks pass on the shipped data and fail loudly "
          "without it") {
  CHECK(all_pass(qef::intersection_checks(QEF_DATA_DIR)));
  const auto missing = qef::intersection_checks("/nonexistent");
  REQUIRE(!missing.empty());
  CHECK(std::any_of(missing.begin(), missing.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  }));
}

}  // TEST_SUITE
