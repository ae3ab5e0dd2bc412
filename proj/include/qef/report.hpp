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

namespace qef {

enum class CheckStatus { kPass, kFail, kSkip };

const char* check_status_label(CheckStatus s);

/// One verification item: a stable dotted identifier, its outcome, and a
/// short human-readable detail.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
};

/// A deterministic verification report: given the same inputs and seed the
/// serialized form is byte-identical.  Checks are kept sorted by id.
struct Report {
  std::string suite;
  int k = 2;
  uint32_t seed = 0;
  std::vector<CheckResult> checks;

  void add(std::string id, bool pass, std::string detail = "");
  void sort_checks();
  int failed() const;
  /// 0 when no check failed, 1 otherwise.
  int exit_status() const { return failed() == 0 ? 0 : 1; }

  /// JSON object following the "report-v1" schema.
  std::string to_json() const;
  /// Plain-text rendering, one line per check.
  std::string to_text() const;
};

}  // namespace qef
