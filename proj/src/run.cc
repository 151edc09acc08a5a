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

#include "indexbound/run.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "indexbound/bounds.h"
#include "indexbound/charsum.h"
#include "indexbound/error.h"
#include "indexbound/field.h"
#include "indexbound/mapping_poly.h"

namespace indexbound {
namespace {

constexpr uint64_t kInvarianceSeed = 0x5eed2026;

FieldOptions FieldOptionsFor(const JobSpec& job) {
  FieldOptions options;
  options.field_cap = job.cap;
  return options;
}

EnumerationOptions EnumerationFor(const JobSpec& job) {
  EnumerationOptions options;
  options.cap = job.cap;
  return options;
}

FieldRecord DescribeField(const Field& field) {
  FieldRecord r;
  r.p = field.p();
  r.m = field.m();
  r.q = field.q();
  r.modulus = field.ModulusString();
  r.generator = field.CoordString(field.generator());
  return r;
}

std::string FormatMagnitude(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(9) << value;
  return out.str();
}

// One evaluation point of a job: the swept value (if any), the character
// and the resulting polynomial.
struct Instance {
  std::optional<Element> swept;
  Element c;
  SparseMappingPoly f;
};

struct InstanceLabels {
  std::string a;
  std::string a_coords;
  std::string c;
};

// Walks the sweep (or the single binding) and, for sums, the characters.
// Values whose polynomial collapses to a constant are reported through
// `skipped` rather than visited.
// Literal values of the bound parameters. Every parameter in the
// expression must be either bound or swept.
ParamBindings ResolveBindings(const JobSpec& job, const Field& F) {
  ParamBindings bindings;
  for (const auto& [name, literal] : job.bindings) {
    bindings[name] = F.ParseLiteral(literal);
  }
  const std::vector<std::string> names = PolyParameterNames(job.poly);
  if (!job.sweep.empty() &&
      std::find(names.begin(), names.end(), job.sweep) == names.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "swept parameter '" + job.sweep +
                    "' does not occur in the polynomial");
  }
  for (const std::string& name : names) {
    if (name != job.sweep && bindings.count(name) == 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "parameter '" + name + "' has no value; use --" + name +
                      " or --sweep " + name);
    }
  }
  return bindings;
}

Element ResolveCharacter(const JobSpec& job, const Field& F) {
  const Element c = F.ParseLiteral(job.c);
  if (c.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument,
                "--c must be nonzero (c = 0 is the trivial character)");
  }
  return c;
}

// Walks the sweep (or the single binding) and, for sums, the characters.
// Values whose polynomial collapses to a constant are reported through
// `skipped` rather than visited.
void ForEachInstance(const JobSpec& job, const FieldPtr& field,
                     bool all_characters,
                     const std::function<void(const Instance&)>& visit,
                     const std::function<void(const std::string&)>& skipped) {
  const Field& F = *field;
  ParamBindings bindings = ResolveBindings(job, F);
  std::vector<Element> characters;
  if (all_characters) {
    for (uint64_t i = 1; i < F.q(); ++i) characters.push_back(F.ElementAt(i));
  } else {
    characters.push_back(ResolveCharacter(job, F));
  }

  auto run = [&](std::optional<Element> swept) {
    if (swept) bindings[job.sweep] = *swept;
    const SparseMappingPoly f = ParsePoly(job.poly, field, bindings);
    if (f.is_constant()) {
      skipped("f is constant" +
              (swept ? " at " + job.sweep + " = " + F.ToString(*swept)
                     : std::string()));
      return;
    }
    for (Element c : characters) visit(Instance{swept, c, f});
  };
  if (job.sweep.empty()) {
    run(std::nullopt);
  } else {
    for (uint64_t i = 1; i < F.q(); ++i) run(F.ElementAt(i));
  }
}

InstanceLabels LabelsFor(const Instance& inst, const Field& F,
                         bool with_c = true) {
  InstanceLabels labels;
  if (inst.swept) {
    labels.a = F.ToString(*inst.swept);
    labels.a_coords = F.CoordString(*inst.swept);
  }
  if (with_c) labels.c = F.ToString(inst.c);
  return labels;
}

BoundRecord MakeRecord(const BoundInterval& b, const InstanceLabels& labels) {
  BoundRecord r;
  r.a = labels.a;
  r.a_coords = labels.a_coords;
  r.c = labels.c;
  r.name = b.name;
  r.center = ToString(b.center);
  r.radius_coeff = b.radius_coeff;
  r.radicand = b.radicand;
  r.radius = b.RenderedRadius();
  r.applicable = b.applicable;
  r.informative = b.informative();
  r.classification = ToString(b.classification());
  r.reason = b.reason;
  return r;
}

void AddWitness(BoundRecord& r, const EquivalentForm& w) {
  r.shift = w.shift.ToString();
  r.index = w.index;
  r.lowest = w.lowest;
  r.vanishing = w.vanishing;
  r.degree = w.degree;
}

std::string Where(const InstanceLabels& labels) {
  std::string out;
  if (!labels.a.empty()) out += "a = " + labels.a + ", ";
  return out + "c = " + labels.c;
}

void Contain(const BoundInterval& b, const Containment& result,
             OracleRecord& oracle, Summary& summary,
             const InstanceLabels& labels) {
  if (!b.applicable) return;
  oracle.containment.push_back({b.name, result.holds, result.exact});
  ++summary.containment_checks;
  if (!result.holds) {
    ++summary.containment_failures;
    summary.failures.push_back(b.name + " interval misses the sum at " +
                               Where(labels));
  }
}

// Bounds for a single sum instance, appended to `report`.
void BoundInstance(const JobSpec& job, const Instance& inst, Report& report,
                   Summary& summary, double& max_magnitude,
                   uint64_t& binomial_wider) {
  const Field& F = *inst.f.field();
  const InstanceLabels labels = LabelsFor(inst, F);
  BoundOptions options;
  options.search.budget = job.budget;
  options.exhaustive = job.exhaustive;
  BoundReport bounds = ComputeBounds(inst.f, inst.c, options);
  if (bounds.binomial) bounds.binomial->interval.radius_coeff += job.widen;

  std::vector<const BoundInterval*> intervals;
  BoundRecord weil = MakeRecord(bounds.weil, labels);
  weil.degree = inst.f.degree();
  report.bounds.push_back(weil);
  intervals.push_back(&bounds.weil);

  BoundRecord ww = MakeRecord(bounds.wan_wang.interval, labels);
  ww.index = bounds.wan_wang.form.index;
  ww.lowest = bounds.wan_wang.form.lowest;
  ww.vanishing = bounds.wan_wang.vanishing;
  ww.degree = inst.f.degree();
  report.bounds.push_back(ww);
  intervals.push_back(&bounds.wan_wang.interval);

  BoundRecord improved = MakeRecord(bounds.improved.interval, labels);
  AddWitness(improved, bounds.improved.witness);
  report.bounds.push_back(improved);
  intervals.push_back(&bounds.improved.interval);
  if (bounds.improved.tightest) {
    BoundRecord tight = MakeRecord(*bounds.improved.tightest, labels);
    tight.reason += "; " +
                    std::to_string(bounds.improved.class_intervals.size()) +
                    " distinct intervals in the class";
    report.bounds.push_back(tight);
    intervals.push_back(&*bounds.improved.tightest);
  }

  BoundRecord reduced = MakeRecord(bounds.reduced_weil.interval, labels);
  AddWitness(reduced, bounds.reduced_weil.witness);
  report.bounds.push_back(reduced);
  intervals.push_back(&bounds.reduced_weil.interval);

  if (bounds.binomial) {
    BoundRecord bin = MakeRecord(bounds.binomial->interval, labels);
    bin.index = bounds.binomial->index;
    bin.lowest = bounds.binomial->r_star;
    bin.degree = inst.f.degree();
    report.bounds.push_back(bin);
    intervals.push_back(&bounds.binomial->interval);
  }

  ++summary.instances;
  if (bounds.improved.witness.vanishing > 0) ++summary.shifted;

  // Hard dominance: l* <= l, n* <= n, K* <= K. Soft: the binomial corollary
  // against the general improved bound.
  ++summary.dominance_checks;
  const EquivalentForm& w = bounds.improved.witness;
  if (w.index > bounds.wan_wang.form.index ||
      bounds.reduced_weil.witness.degree > inst.f.degree() ||
      bounds.improved.interval.radius_coeff >
          bounds.wan_wang.interval.radius_coeff) {
    ++summary.dominance_failures;
    summary.failures.push_back(
        "improved bound does not dominate at " + Where(labels) + " (l* = " +
        std::to_string(w.index) +
        ", l = " + std::to_string(bounds.wan_wang.form.index) + ", K* = " +
        std::to_string(bounds.improved.interval.radius_coeff) + ", K = " +
        std::to_string(bounds.wan_wang.interval.radius_coeff) + ")");
  }
  if (bounds.binomial && bounds.binomial->interval.radius_coeff >
                             bounds.improved.interval.radius_coeff) {
    ++binomial_wider;
  }

  if (!job.oracle) return;
  const TraceDistribution dist =
      ComputeTraceDistribution(inst.f, inst.c, EnumerationFor(job));
  const TraceDistribution constant_free =
      dist.Shifted(F.Trace(F.Mul(inst.c, inst.f.constant())));
  OracleRecord oracle;
  oracle.a = labels.a;
  oracle.c = labels.c;
  oracle.counts = dist.counts;
  const double magnitude = Magnitude(dist);
  oracle.magnitude = FormatMagnitude(magnitude);
  const SquaredDistance squared = DistanceSquared(dist, Rational(0));
  if (squared.exact) oracle.magnitude_squared = ToString(*squared.exact);
  max_magnitude = std::max(max_magnitude, magnitude);
  for (const BoundInterval* b : intervals) {
    Contain(*b, CheckContainment(*b, constant_free), oracle, summary, labels);
  }
  report.oracle.push_back(std::move(oracle));
}

void FinishSummary(Summary& summary, double max_magnitude, bool oracle,
                   uint64_t binomial_wider) {
  if (oracle) summary.max_magnitude = FormatMagnitude(max_magnitude);
  if (binomial_wider > 0) {
    summary.warnings.push_back(
        "binomial corollary radius exceeds the improved radius on " +
        std::to_string(binomial_wider) + " of " +
        std::to_string(summary.instances) + " instances");
  }
}

void Merge(Summary& total, const Summary& part, const std::string& prefix) {
  total.instances += part.instances;
  total.shifted += part.shifted;
  total.containment_checks += part.containment_checks;
  total.containment_failures += part.containment_failures;
  total.dominance_checks += part.dominance_checks;
  total.dominance_failures += part.dominance_failures;
  total.invariance_checks += part.invariance_checks;
  total.invariance_failures += part.invariance_failures;
  total.errors += part.errors;
  total.cap_exceeded = total.cap_exceeded || part.cap_exceeded;
  for (const std::string& w : part.warnings) {
    total.warnings.push_back(prefix + w);
  }
  for (const std::string& f : part.failures) {
    total.failures.push_back(prefix + f);
  }
  if (!part.max_magnitude.empty() &&
      (total.max_magnitude.empty() ||
       std::stod(part.max_magnitude) > std::stod(total.max_magnitude))) {
    total.max_magnitude = part.max_magnitude;
  }
}

// Trace distributions of a random Frobenius shift of c f against c f.
void CheckInvariance(const JobSpec& job, Summary& summary,
                     std::mt19937_64& rng) {
  const FieldPtr field = Field::Build(job.p, job.m, FieldOptionsFor(job));
  const Field& F = *field;
  ForEachInstance(
      job, field, job.all_c,
      [&](const Instance& inst) {
        const SparseMappingPoly scaled = inst.f.Scaled(inst.c);
        ShiftVector v;
        std::uniform_int_distribution<uint32_t> pick(0, F.m() - 1);
        v.entries.resize(scaled.terms().size() + 1);
        for (uint32_t& e : v.entries) e = pick(rng);
        const TraceDistribution shifted = ComputeTraceDistribution(
            FrobeniusShift(scaled, v), F.one(), EnumerationFor(job));
        const TraceDistribution direct =
            ComputeTraceDistribution(inst.f, inst.c, EnumerationFor(job));
        ++summary.invariance_checks;
        if (!(shifted == direct)) {
          ++summary.invariance_failures;
          summary.failures.push_back("shift " + v.ToString() +
                                     " changes the trace distribution at " +
                                     Where(LabelsFor(inst, F)));
        }
      },
      [](const std::string&) {});
}

}  // namespace

Report RunBound(const JobSpec& job) {
  Report report;
  report.job = job;
  const FieldPtr field = Field::Build(job.p, job.m, FieldOptionsFor(job));
  report.field = DescribeField(*field);
  Summary summary;
  double max_magnitude = 0;
  uint64_t binomial_wider = 0;
  ForEachInstance(
      job, field, job.all_c,
      [&](const Instance& inst) {
        if (report.poly.empty() && job.sweep.empty()) {
          report.poly = inst.f.ToString();
        }
        BoundInstance(job, inst, report, summary, max_magnitude,
                      binomial_wider);
      },
      [&](const std::string& note) { summary.warnings.push_back(note); });
  FinishSummary(summary, max_magnitude, job.oracle, binomial_wider);
  report.summary = std::move(summary);
  return report;
}

Report RunSum(const JobSpec& job) {
  Report report;
  report.job = job;
  const FieldPtr field = Field::Build(job.p, job.m, FieldOptionsFor(job));
  report.field = DescribeField(*field);
  if (!job.sweep.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sum does not take a sweep");
  }
  const SparseMappingPoly f =
      ParsePoly(job.poly, field, ResolveBindings(job, *field));
  const Element c = ResolveCharacter(job, *field);
  report.poly = f.ToString();
  const TraceDistribution dist =
      ComputeTraceDistribution(f, c, EnumerationFor(job));
  OracleRecord oracle;
  oracle.c = field->ToString(c);
  oracle.counts = dist.counts;
  oracle.magnitude = FormatMagnitude(Magnitude(dist));
  const SquaredDistance squared = DistanceSquared(dist, Rational(0));
  if (squared.exact) oracle.magnitude_squared = ToString(*squared.exact);
  report.oracle.push_back(std::move(oracle));
  return report;
}

Report RunCurve(const JobSpec& job) {
  Report report;
  report.job = job;
  if (job.m == 0) {
    throw Error(ErrorKind::kInvalidArgument, "--m must be positive");
  }
  const SubfieldTower tower =
      SubfieldTower::Build(job.q, job.m, FieldOptionsFor(job));
  const FieldPtr& field = tower.big();
  report.field = DescribeField(*field);
  report.field->base_q = tower.base_q();
  report.field->ext_m = tower.ext_m();
  Summary summary;
  CurveBoundOptions options;
  options.search.budget = job.budget;
  options.certify = job.certify;
  ForEachInstance(
      job, field, false,
      [&](const Instance& inst) {
        if (report.poly.empty() && job.sweep.empty()) {
          report.poly = inst.f.ToString();
        }
        const InstanceLabels labels = LabelsFor(inst, *field, false);
        const CurveBounds bounds = ComputeCurveBounds(inst.f, tower, options);
        std::vector<const BoundInterval*> intervals{&bounds.weil,
                                                    &bounds.index};
        BoundRecord weil = MakeRecord(bounds.weil, labels);
        weil.degree = inst.f.degree();
        report.bounds.push_back(weil);
        BoundRecord index = MakeRecord(bounds.index, labels);
        AddWitness(index, bounds.witness);
        report.bounds.push_back(index);
        for (const BoundInterval& b : bounds.specialized) {
          report.bounds.push_back(MakeRecord(b, labels));
          intervals.push_back(&b);
        }
        if (bounds.certified) {
          report.bounds.push_back(MakeRecord(*bounds.certified, labels));
          intervals.push_back(&*bounds.certified);
        }
        ++summary.instances;
        if (bounds.witness.vanishing > 0) ++summary.shifted;
        if (!job.oracle) return;
        const CurveCount count =
            CountArtinSchreier(inst.f, tower, EnumerationFor(job));
        OracleRecord oracle;
        oracle.a = labels.a;
        oracle.points = count.points;
        for (const BoundInterval* b : intervals) {
          Contain(*b, CheckContainment(*b, count.points), oracle, summary,
                  labels);
        }
        report.oracle.push_back(std::move(oracle));
      },
      [&](const std::string& note) { summary.warnings.push_back(note); });
  report.summary = std::move(summary);
  return report;
}

TablePreset GetTablePreset(const std::string& name) {
  if (name == "table1") {
    return {2, {{4, 13, 4}, {6, 41, 5}, {6, 43, 25}, {6, 53, 25},
                {8, 57, 12}, {8, 63, 3}}};
  }
  if (name == "table2") {
    return {3, {{2, 7, 1}, {3, 19, 2}, {4, 44, 28}, {4, 46, 18},
                {5, 154, 11}, {6, 107, 9}, {6, 122, 18}}};
  }
  if (name == "table3") {
    return {5, {{2, 14, 10}, {2, 19, 11}, {3, 33, 10}, {3, 77, 3},
                {4, 42, 10}, {4, 314, 50}}};
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown table preset '" + name +
                                               "' (table1, table2, table3)");
}

TableRow ComputeTableRow(uint64_t p, const TablePresetRow& row) {
  const FieldPtr field = Field::Build(p, row.m);
  const GenericBounds bounds = GenericBinomialBounds(field, row.n, row.r);
  auto cell = [](const BoundInterval& b) -> std::string {
    if (!b.applicable) return "n/a";
    return b.informative() ? b.RenderedRadius() : "*";
  };
  return TableRow{row.m, row.n, row.r, cell(bounds.weil),
                  cell(bounds.wan_wang), cell(bounds.improved)};
}

Report RunTable(const JobSpec& job) {
  Report report;
  report.job = job;
  const TablePreset preset = GetTablePreset(job.preset);
  for (const TablePresetRow& row : preset.rows) {
    report.table.push_back(ComputeTableRow(preset.p, row));
  }
  return report;
}

std::string BuiltinCorpus() {
  return R"(# Binomials x^n + a x^r swept over a and every nontrivial character.
bound --p 3 --m 3 --poly "x^25 + a*x^4" --sweep a --all-c
bound --p 3 --m 3 --poly "x^19 + a*x^2" --sweep a --all-c
bound --p 3 --m 3 --poly "x^19 + a*x^4" --sweep a --all-c
bound --p 3 --m 3 --poly "x^10 + a*x^5" --sweep a --all-c
# x^((q-1)/Q + p) + a x with Q the least prime factor of q - 1.
bound --p 3 --m 3 --poly "x^16 + a*x" --sweep a --all-c
# x^(n+p) + a x over F_{p^2} with 2 rad(n) = rad(p+1).
bound --p 5 --m 2 --poly "x^8 + a*x" --sweep a --all-c
# x^(s p^(m-1)) + a x^r with p < s < sqrt(q).
bound --p 3 --m 4 --poly "x^108 + a*x^3" --sweep a --all-c
bound --p 5 --m 3 --poly "x^150 + a*x^2" --sweep a
# Trinomials and a constant term.
bound --p 2 --m 6 --poly "x^41 + a*x^5 + x^3" --sweep a --all-c
bound --p 3 --m 3 --poly "x^25 + a*x^4 + 1" --sweep a --all-c
bound --p 2 --m 6 --poly "x^41 + a*x^5" --sweep a --exhaustive
# Artin-Schreier curves y^16 - y = x^13 + a x over F_{16^2}.
curve --q 16 --m 2 --poly "x^13 + a*x" --sweep a --certify
curve --q 4 --m 3 --poly "x^9 + a*x^2" --sweep a --certify
)";
}

Report RunVerify(const JobSpec& job) {
  Report report;
  report.job = job;
  std::string text;
  if (job.corpus.empty()) {
    text = BuiltinCorpus();
  } else {
    std::ifstream in(job.corpus);
    if (!in) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cannot read corpus '" + job.corpus + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  const std::vector<JobSpec> jobs = ParseCorpus(text);
  Summary total;
  std::mt19937_64 rng(kInvarianceSeed);
  for (size_t i = 0; i < jobs.size(); ++i) {
    JobSpec sub = jobs[i];
    const std::string prefix = "job " + std::to_string(i + 1) + " (" +
                               sub.command + " " + sub.poly + "): ";
    sub.oracle = true;
    sub.cap = std::min(sub.cap, job.cap);
    Summary part;
    try {
      if (sub.command == "bound") {
        part = *RunBound(sub).summary;
        CheckInvariance(sub, part, rng);
      } else if (sub.command == "curve") {
        part = *RunCurve(sub).summary;
      } else if (sub.command == "sum" || sub.command == "table") {
        RunJob(sub);
      } else {
        throw Error(ErrorKind::kInvalidArgument,
                    "a corpus cannot contain '" + sub.command + "' jobs");
      }
    } catch (const Error& e) {
      ++part.errors;
      part.cap_exceeded = e.kind() == ErrorKind::kCapExceeded ||
                          e.kind() == ErrorKind::kBudgetExceeded;
      part.failures.push_back(e.what());
    }
    Merge(total, part, prefix);
  }
  report.summary = std::move(total);
  return report;
}

Report RunJob(const JobSpec& job) {
  if (job.command == "bound") return RunBound(job);
  if (job.command == "sum") return RunSum(job);
  if (job.command == "curve") return RunCurve(job);
  if (job.command == "table") return RunTable(job);
  if (job.command == "verify") return RunVerify(job);
  throw Error(ErrorKind::kInvalidArgument,
              "unknown command '" + job.command + "'");
}

}  // namespace indexbound
