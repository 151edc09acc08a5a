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

#ifndef INDEXBOUND_JOB_H_
#define INDEXBOUND_JOB_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace indexbound {

// One command-line invocation. Corpus files hold one of these per line in
// the same flag syntax.
struct JobSpec {
  std::string command;  // bound | sum | curve | table | verify
  uint64_t p = 0;
  uint32_t m = 0;
  uint64_t q = 0;  // curve: size of the base field
  std::string poly;
  std::map<std::string, std::string> bindings;  // parameter -> literal
  std::string sweep;                            // parameter swept over F^*
  std::string c = "1";
  bool all_c = false;
  bool exhaustive = false;
  bool oracle = false;
  bool certify = false;
  uint64_t budget = 10'000'000;
  uint64_t cap = uint64_t{1} << 22;
  // Adds this much to the binomial bound's radius coefficient. Only useful
  // for checking that `verify` notices a non-dominant bound.
  uint64_t widen = 0;
  std::string format = "text";
  std::string preset;
  std::string corpus;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

void to_json(nlohmann::json& j, const JobSpec& job);
void from_json(const nlohmann::json& j, JobSpec& job);

// Both throw Error(kInvalidArgument) with CLI11's message on bad usage.
// ParseJobArgs returns an empty command when --help was requested; the help
// text is then stored in `help`.
JobSpec ParseJobArgs(int argc, const char* const* argv,
                     std::string* help = nullptr);
JobSpec ParseJobLine(const std::string& line);

// Non-comment, non-blank lines of a corpus, parsed.
std::vector<JobSpec> ParseCorpus(const std::string& text);

}  // namespace indexbound

#endif  // INDEXBOUND_JOB_H_
