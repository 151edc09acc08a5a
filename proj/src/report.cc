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

#include "indexbound/report.h"

#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "indexbound/error.h"
#include "json.hpp"

namespace indexbound {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FieldRecord, p, m, q, modulus, generator,
                                   base_q, ext_m)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BoundRecord, a, a_coords, c, name, center,
                                   radius_coeff, radicand, radius, applicable,
                                   informative, classification, reason, shift,
                                   index, lowest, vanishing, degree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ContainmentRecord, bound, holds, exact)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleRecord, a, c, counts, magnitude,
                                   magnitude_squared, points, containment)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Summary, instances, shifted, max_magnitude,
                                   containment_checks, containment_failures,
                                   dominance_checks, dominance_failures,
                                   invariance_checks, invariance_failures,
                                   errors, cap_exceeded, warnings, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableRow, m, n, r, weil, index, ours)

namespace {

nlohmann::ordered_json ToJson(const Report& r) {
  // ordered_json keeps the documented key order: job, field, bounds, ...
  nlohmann::ordered_json j;
  j["job"] = nlohmann::json(r.job);
  if (r.field) j["field"] = nlohmann::json(*r.field);
  j["poly"] = r.poly;
  j["bounds"] = nlohmann::json(r.bounds);
  if (!r.oracle.empty()) j["oracle"] = nlohmann::json(r.oracle);
  if (r.summary) j["summary"] = nlohmann::json(*r.summary);
  if (!r.table.empty()) j["table"] = nlohmann::json(r.table);
  return j;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string JoinCounts(const std::vector<uint64_t>& counts) {
  std::string out = "[";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + "]";
}

const OracleRecord* FindOracle(const Report& r, const std::string& a,
                               const std::string& c) {
  for (const OracleRecord& o : r.oracle) {
    if (o.a == a && o.c == c) return &o;
  }
  return nullptr;
}

std::string Verdict(const OracleRecord* o, const std::string& bound) {
  if (o == nullptr) return "";
  for (const ContainmentRecord& cr : o->containment) {
    if (cr.bound == bound) return cr.holds ? "yes" : "NO";
  }
  return "";
}

void Pad(std::ostream& out, const std::string& s, size_t width) {
  // Display width: count UTF-8 lead bytes only, so "√" counts once.
  size_t shown = 0;
  for (unsigned char ch : s) shown += (ch & 0xC0) != 0x80;
  out << s;
  for (size_t i = shown; i < width; ++i) out << ' ';
}

void RenderTable(const Report& r, std::ostream& out) {
  out << "preset " << r.job.preset << "\n";
  Pad(out, "m", 4);
  Pad(out, "n", 6);
  Pad(out, "r", 6);
  Pad(out, "weil", 10);
  Pad(out, "index", 10);
  out << "ours\n";
  for (const TableRow& row : r.table) {
    Pad(out, std::to_string(row.m), 4);
    Pad(out, std::to_string(row.n), 6);
    Pad(out, std::to_string(row.r), 6);
    Pad(out, row.weil, 10);
    Pad(out, row.index, 10);
    out << row.ours << "\n";
  }
}

void RenderSummary(const Summary& s, std::ostream& out) {
  out << "summary: " << s.instances << " instances";
  if (!s.max_magnitude.empty()) out << ", max |S| " << s.max_magnitude;
  out << ", shifted centre in " << s.shifted << "\n";
  out << "  containment " << s.containment_checks - s.containment_failures
      << "/" << s.containment_checks << ", dominance "
      << s.dominance_checks - s.dominance_failures << "/"
      << s.dominance_checks << ", invariance "
      << s.invariance_checks - s.invariance_failures << "/"
      << s.invariance_checks;
  if (s.errors > 0) out << ", " << s.errors << " jobs failed to run";
  out << "\n";
  for (const std::string& w : s.warnings) out << "  warning: " << w << "\n";
  for (const std::string& f : s.failures) out << "  FAILED: " << f << "\n";
}

}  // namespace

std::string RenderJson(const Report& report) {
  return ToJson(report).dump(2) + "\n";
}

Report ParseReportJson(const std::string& text) {
  Report r;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    j.at("job").get_to(r.job);
    if (j.contains("field")) r.field = j.at("field").get<FieldRecord>();
    j.at("poly").get_to(r.poly);
    j.at("bounds").get_to(r.bounds);
    if (j.contains("oracle")) j.at("oracle").get_to(r.oracle);
    if (j.contains("summary")) r.summary = j.at("summary").get<Summary>();
    if (j.contains("table")) j.at("table").get_to(r.table);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("bad report: ") + e.what());
  }
  return r;
}

std::string RenderText(const Report& r) {
  std::ostringstream out;
  if (!r.table.empty()) {
    RenderTable(r, out);
    return out.str();
  }
  if (r.field) {
    const FieldRecord& f = *r.field;
    out << "field F_" << f.q << " = F_" << f.p << "[x]/(" << f.modulus
        << "), g = " << f.generator;
    if (f.base_q != 0) out << ", base field F_" << f.base_q;
    out << "\n";
  }
  if (!r.poly.empty()) out << "f = " << r.poly << "\n";

  std::pair<std::string, std::string> group{"\x01", ""};
  auto header = [&](const std::string& a, const std::string& a_coords,
                    const std::string& c) {
    out << "\n";
    if (!a.empty()) out << "a = " << a << " " << a_coords;
    if (!a.empty() && !c.empty()) out << ", ";
    if (!c.empty()) out << "c = " << c;
    out << "\n";
    const OracleRecord* o = FindOracle(r, a, c);
    if (o != nullptr) {
      if (o->counts.empty()) {
        out << "  N = " << o->points << "\n";
      } else {
        out << "  |S| = " << o->magnitude;
        if (!o->magnitude_squared.empty()) {
          out << " (|S|^2 = " << o->magnitude_squared << ")";
        }
        out << ", trace counts " << JoinCounts(o->counts) << "\n";
      }
    }
    if (r.bounds.empty()) return;
    out << "  ";
    Pad(out, "bound", 30);
    Pad(out, "centre", 10);
    Pad(out, "radius", 10);
    Pad(out, "class", 14);
    if (o != nullptr) Pad(out, "holds", 7);
    out << "detail\n";
  };
  for (const BoundRecord& b : r.bounds) {
    if (group.first != b.a || group.second != b.c) {
      group = {b.a, b.c};
      header(b.a, b.a_coords, b.c);
    }
    const OracleRecord* o = FindOracle(r, b.a, b.c);
    out << "  ";
    Pad(out, b.name, 30);
    Pad(out, b.applicable ? b.center : "-", 10);
    Pad(out, b.applicable ? b.radius : "-", 10);
    Pad(out, b.classification, 14);
    if (o != nullptr) Pad(out, Verdict(o, b.name), 7);
    out << b.reason << "\n";
  }
  if (r.bounds.empty()) {
    for (const OracleRecord& o : r.oracle) header(o.a, "", o.c);
  }
  if (r.summary) {
    out << "\n";
    RenderSummary(*r.summary, out);
  }
  return out.str();
}

std::string RenderCsv(const Report& r) {
  std::ostringstream out;
  if (!r.table.empty()) {
    out << "m,n,r,weil,index,ours\n";
    for (const TableRow& row : r.table) {
      out << row.m << "," << row.n << "," << row.r << "," << row.weil << ","
          << row.index << "," << row.ours << "\n";
    }
    return out.str();
  }
  if (r.bounds.empty()) {
    out << "a,c,counts,magnitude,magnitude_squared,points\n";
    for (const OracleRecord& o : r.oracle) {
      out << CsvField(o.a) << "," << CsvField(o.c) << ","
          << CsvField(JoinCounts(o.counts)) << "," << o.magnitude << ","
          << o.magnitude_squared << "," << o.points << "\n";
    }
    return out.str();
  }
  out << "a,a_coords,c,bound,center,radius_coeff,radicand,radius,applicable,"
         "informative,classification,index,lowest,vanishing,degree,shift,"
         "magnitude,points,contained\n";
  for (const BoundRecord& b : r.bounds) {
    const OracleRecord* o = FindOracle(r, b.a, b.c);
    out << CsvField(b.a) << "," << CsvField(b.a_coords) << ","
        << CsvField(b.c) << "," << b.name << "," << b.center << ","
        << b.radius_coeff << "," << b.radicand << "," << b.radius << ","
        << (b.applicable ? "true" : "false") << ","
        << (b.informative ? "true" : "false") << "," << b.classification
        << "," << b.index << "," << b.lowest << "," << b.vanishing << ","
        << b.degree << "," << CsvField(b.shift) << ","
        << (o ? o->magnitude : "") << ","
        << (o && o->counts.empty() ? std::to_string(o->points) : "") << ","
        << Verdict(o, b.name) << "\n";
  }
  return out.str();
}

std::string Render(const Report& report) {
  if (report.job.format == "json") return RenderJson(report);
  if (report.job.format == "csv") return RenderCsv(report);
  return RenderText(report);
}

int ExitStatus(const Report& report) {
  if (!report.summary) return kExitOk;
  const Summary& s = *report.summary;
  if (s.containment_failures + s.dominance_failures + s.invariance_failures >
      0) {
    return kExitVerification;
  }
  if (s.cap_exceeded) return kExitCap;
  return s.errors > 0 ? kExitVerification : kExitOk;
}

}  // namespace indexbound
