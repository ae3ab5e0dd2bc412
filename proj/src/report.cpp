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
#include "qef/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace qef {

const char* check_status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkip:
      return "skip";
  }
  return "fail";
}

void Report::add(std::string id, bool pass, std::string detail) {
  checks.push_back(CheckResult{
      std::move(id), pass ? CheckStatus::kPass : CheckStatus::kFail,
      std::move(detail)});
}

void Report::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.id < b.id;
            });
}

int Report::failed() const {
  int n = 0;
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::kFail) ++n;
  return n;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "report-v1";
  j["suite"] = suite;
  j["k"] = k;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = check_status_label(c.status);
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["failed"] = failed();
  j["exit_status"] = exit_status();
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out = "suite " + suite + " (k=" + std::to_string(k) +
                    ", seed=" + std::to_string(seed) + ")\n";
  for (const CheckResult& c : checks) {
    out += std::string(check_status_label(c.status)) + "  " + c.id;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  out += std::to_string(failed()) + " failed of " +
         std::to_string(checks.size()) + "\n";
  return out;
}

}  // namespace qef
