// Copyright 2026 The indexbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDEXBOUND_REPORT_H_
#define INDEXBOUND_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indexbound/job.h"

namespace indexbound {

struct FieldRecord {
  uint64_t p = 0;
  uint32_t m = 0;
  uint64_t q = 0;
  std::string modulus;    // "x^3 + 2*x + 1"
  std::string generator;  // coordinates of g, "[0,1,0]"
  uint64_t base_q = 0;    // curve jobs only
  uint32_t ext_m = 0;

  friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

struct BoundRecord {
  std::string a;         // value of the swept or bound parameter, "g^k"
  std::string a_coords;  // the same value as a coordinate vector
  std::string c;
  std::string name;
  std::string center;  // exact rational
  uint64_t radius_coeff = 0;
  uint64_t radicand = 0;
  std::string radius;  // rendered, e.g. "18√3"
  bool applicable = false;
  bool informative = false;
  std::string classification;
  std::string reason;
  std::string shift;  // witness shift vector, when the bound has one
  uint64_t index = 0;
  uint64_t lowest = 0;
  uint64_t vanishing = 0;
  uint64_t degree = 0;

  friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct ContainmentRecord {
  std::string bound;
  bool holds = false;
  bool exact = false;

  friend bool operator==(const ContainmentRecord&,
                         const ContainmentRecord&) = default;
};

struct OracleRecord {
  std::string a;
  std::string c;
  std::vector<uint64_t> counts;   // trace distribution of c f
  std::string magnitude;          // |S|, 9 decimals
  std::string magnitude_squared;  // exact |S|^2 when p <= 3
  uint64_t points = 0;            // curve jobs: N
  std::vector<ContainmentRecord> containment;

  friend bool operator==(const OracleRecord&, const OracleRecord&) = default;
};

struct Summary {
  uint64_t instances = 0;
  uint64_t shifted = 0;  // instances whose improved bound has n0 > 0
  std::string max_magnitude;
  uint64_t containment_checks = 0;
  uint64_t containment_failures = 0;
  uint64_t dominance_checks = 0;
  uint64_t dominance_failures = 0;
  uint64_t invariance_checks = 0;
  uint64_t invariance_failures = 0;
  uint64_t errors = 0;  // corpus jobs that could not run
  bool cap_exceeded = false;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct TableRow {
  uint32_t m = 0;
  uint64_t n = 0;
  uint64_t r = 0;
  std::string weil;
  std::string index;
  std::string ours;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Report {
  JobSpec job;
  std::optional<FieldRecord> field;
  std::string poly;  // the parsed polynomial, when there is a single one
  std::vector<BoundRecord> bounds;
  std::vector<OracleRecord> oracle;
  std::optional<Summary> summary;
  std::vector<TableRow> table;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string RenderJson(const Report& report);
Report ParseReportJson(const std::string& text);
std::string RenderText(const Report& report);
// One row per (a, c, bound), plus oracle columns when present.
std::string RenderCsv(const Report& report);
std::string Render(const Report& report);  // in job.format

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitVerification = 3;

// kExitVerification if any containment, dominance or invariance check failed;
// otherwise kExitCap if a corpus job hit a cap or budget, kExitVerification if
// a corpus job failed for another reason, and kExitOk if all went through.
int ExitStatus(const Report& report);

}  // namespace indexbound

#endif  // INDEXBOUND_REPORT_H_
