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

#ifndef INDEXBOUND_RUN_H_
#define INDEXBOUND_RUN_H_

#include <string>
#include <vector>

#include "indexbound/job.h"
#include "indexbound/report.h"

namespace indexbound {

// All runners throw Error on bad input or when a cap or budget is hit.
Report RunBound(const JobSpec& job);
Report RunSum(const JobSpec& job);
Report RunCurve(const JobSpec& job);
Report RunTable(const JobSpec& job);
// Reads job.corpus, or the built-in corpus when it is empty.
Report RunVerify(const JobSpec& job);
Report RunJob(const JobSpec& job);

struct TablePresetRow {
  uint32_t m = 0;
  uint64_t n = 0;
  uint64_t r = 0;
};
struct TablePreset {
  uint64_t p = 0;
  std::vector<TablePresetRow> rows;
};
TablePreset GetTablePreset(const std::string& name);

// Generic (a-independent, n0 = 0) cells of one table row.
TableRow ComputeTableRow(uint64_t p, const TablePresetRow& row);

// Jobs run by `verify` when no corpus file is given.
std::string BuiltinCorpus();

}  // namespace indexbound

#endif  // INDEXBOUND_RUN_H_
