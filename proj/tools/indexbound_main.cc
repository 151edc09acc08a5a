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

// Command-line front end: bound, sum, curve, table and verify.

#include <iostream>
#include <string>

#include "indexbound/error.h"
#include "indexbound/job.h"
#include "indexbound/report.h"
#include "indexbound/run.h"

namespace {

int ExitCodeFor(indexbound::ErrorKind kind) {
  switch (kind) {
    case indexbound::ErrorKind::kCapExceeded:
    case indexbound::ErrorKind::kBudgetExceeded:
      return indexbound::kExitCap;
    case indexbound::ErrorKind::kInternal:
      return indexbound::kExitVerification;
    default:
      return indexbound::kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::string help;
    const indexbound::JobSpec job =
        indexbound::ParseJobArgs(argc, argv, &help);
    if (job.command.empty()) {
      std::cout << help;
      return indexbound::kExitOk;
    }
    const indexbound::Report report = indexbound::RunJob(job);
    std::cout << indexbound::Render(report);
    return indexbound::ExitStatus(report);
  } catch (const indexbound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  }
}
