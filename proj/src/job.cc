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

#include "indexbound/job.h"

#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "indexbound/error.h"

namespace indexbound {
namespace {

// Holds the app together with the scratch storage its options write into.
struct JobParser {
  CLI::App app{"Index bounds for character sums over finite fields",
               "indexbound"};
  JobSpec job;
  std::string a;
  std::string b;
  std::vector<std::string> params;
  CLI::App* bound = nullptr;
  CLI::App* sum = nullptr;
  CLI::App* curve = nullptr;
  CLI::App* table = nullptr;
  CLI::App* verify = nullptr;

  JobParser() {
    app.require_subcommand(1);
    bound = app.add_subcommand("bound", "Weil, index and improved bounds");
    sum = app.add_subcommand("sum", "exact character sum");
    curve = app.add_subcommand("curve", "Artin-Schreier curve bounds");
    table = app.add_subcommand("table", "reproduce a preset bound table");
    verify = app.add_subcommand("verify", "run the containment suites");

    for (CLI::App* sub : {bound, sum}) {
      sub->add_option("--p", job.p, "characteristic")->required();
      sub->add_option("--m", job.m, "extension degree")->required();
      sub->add_option("--c", job.c, "character scaling c (psi_1(c x))");
    }
    curve->add_option("--q", job.q, "base field size")->required();
    curve->add_option("--m", job.m, "extension degree of the big field")
        ->required();
    for (CLI::App* sub : {bound, sum, curve}) {
      sub->add_option("--poly", job.poly, "polynomial, e.g. \"x^25 + a*x^4\"")
          ->required();
      sub->add_option("--a", a, "value of parameter a (0, n, g, g^k)");
      sub->add_option("--b", b, "value of parameter b");
      sub->add_option("--param", params, "name=literal binding");
      sub->add_option("--cap", job.cap, "largest field size accepted");
      sub->add_option("--budget", job.budget, "shift vectors per search");
    }
    for (CLI::App* sub : {bound, curve}) {
      sub->add_option("--sweep", job.sweep, "parameter to sweep over F^*");
      sub->add_flag("--oracle", job.oracle, "compute the exact sum");
    }
    bound->add_flag("--all-c", job.all_c, "every nontrivial character");
    bound->add_flag("--exhaustive", job.exhaustive,
                    "index bounds of every class member");
    bound->add_option("--widen", job.widen,
                      "inflate the binomial radius (harness testing)");
    curve->add_flag("--certify", job.certify,
                    "per-character certified interval");
    table->add_option("--preset", job.preset, "table1, table2 or table3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3"}));
    verify->add_option("--corpus", job.corpus, "corpus file");
    verify->add_option("--cap", job.cap, "largest field size accepted");
    for (CLI::App* sub : {bound, sum, curve, table, verify}) {
      sub->add_option("--format", job.format, "text, json or csv")
          ->check(CLI::IsMember({"text", "json", "csv"}));
    }
  }

  JobSpec Finish() {
    for (CLI::App* sub : {bound, sum, curve, table, verify}) {
      if (sub->parsed()) job.command = sub->get_name();
    }
    if (!a.empty()) job.bindings["a"] = a;
    if (!b.empty()) job.bindings["b"] = b;
    for (const std::string& param : params) {
      const size_t eq = param.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == param.size()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "--param expects name=literal, got '" + param + "'");
      }
      job.bindings[param.substr(0, eq)] = param.substr(eq + 1);
    }
    if (!job.sweep.empty() && job.bindings.count(job.sweep) != 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "parameter '" + job.sweep +
                      "' is both swept and bound to a value");
    }
    if (job.command == "sum" || job.command == "bound") {
      if (job.p == 0 || job.m == 0) {
        throw Error(ErrorKind::kInvalidArgument, "--p and --m are required");
      }
    }
    return job;
  }
};

}  // namespace

JobSpec ParseJobArgs(int argc, const char* const* argv, std::string* help) {
  JobParser parser;
  try {
    parser.app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help != nullptr) *help = parser.app.help();
    return JobSpec{};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
  return parser.Finish();
}

JobSpec ParseJobLine(const std::string& line) {
  JobParser parser;
  try {
    parser.app.parse(line, false);
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(e.what()) + " in '" + line + "'");
  }
  return parser.Finish();
}

std::vector<JobSpec> ParseCorpus(const std::string& text) {
  std::vector<JobSpec> jobs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    jobs.push_back(ParseJobLine(line));
  }
  return jobs;
}

void to_json(nlohmann::json& j, const JobSpec& job) {
  j = nlohmann::json{{"command", job.command},
                     {"p", job.p},
                     {"m", job.m},
                     {"q", job.q},
                     {"poly", job.poly},
                     {"bindings", job.bindings},
                     {"sweep", job.sweep},
                     {"c", job.c},
                     {"all_c", job.all_c},
                     {"exhaustive", job.exhaustive},
                     {"oracle", job.oracle},
                     {"certify", job.certify},
                     {"budget", job.budget},
                     {"cap", job.cap},
                     {"widen", job.widen},
                     {"format", job.format},
                     {"preset", job.preset},
                     {"corpus", job.corpus}};
}

void from_json(const nlohmann::json& j, JobSpec& job) {
  j.at("command").get_to(job.command);
  j.at("p").get_to(job.p);
  j.at("m").get_to(job.m);
  j.at("q").get_to(job.q);
  j.at("poly").get_to(job.poly);
  j.at("bindings").get_to(job.bindings);
  j.at("sweep").get_to(job.sweep);
  j.at("c").get_to(job.c);
  j.at("all_c").get_to(job.all_c);
  j.at("exhaustive").get_to(job.exhaustive);
  j.at("oracle").get_to(job.oracle);
  j.at("certify").get_to(job.certify);
  j.at("budget").get_to(job.budget);
  j.at("cap").get_to(job.cap);
  j.at("widen").get_to(job.widen);
  j.at("format").get_to(job.format);
  j.at("preset").get_to(job.preset);
  j.at("corpus").get_to(job.corpus);
}

}  // namespace indexbound
