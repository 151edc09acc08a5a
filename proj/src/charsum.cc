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

#include "indexbound/charsum.h"

#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <thread>

#include "indexbound/error.h"

namespace indexbound {
namespace {

constexpr uint64_t kParallelThreshold = uint64_t{1} << 16;

void CheckCap(const Field& field, const EnumerationOptions& options) {
  if (field.q() > options.cap) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive enumeration of F_" + std::to_string(field.q()) +
                    " exceeds cap " + std::to_string(options.cap));
  }
}

// Counts over enumeration indices [begin, end) (see Field::ElementAt).
std::vector<uint64_t> CountRange(const SparseMappingPoly& scaled,
                                 uint64_t begin, uint64_t end) {
  const Field& F = *scaled.field();
  const uint64_t p = F.p();
  const uint64_t order = F.q() - 1;
  std::vector<uint64_t> counts(p, 0);
  const uint64_t base = F.Trace(scaled.constant());

  const auto traces = F.power_traces();
  if (!traces.empty()) {
    // Tr is additive, so Tr(c f(g^k)) = Tr(cb) + sum_i Tr(g^(log(c a_i) + k e_i)).
    std::vector<std::pair<uint64_t, uint64_t>> terms;  // (log coeff, exponent)
    for (const Term& term : scaled.terms()) {
      terms.emplace_back(F.Log(term.coeff), term.exponent % order);
    }
    for (uint64_t index = begin; index < end; ++index) {
      if (index == 0) {
        ++counts[base];
        continue;
      }
      const uint64_t k = index - 1;
      uint64_t t = base;
      for (const auto& [log_coeff, e] : terms) {
        t += traces[(log_coeff + k * e) % order];
      }
      ++counts[t % p];
    }
    return counts;
  }
  for (uint64_t index = begin; index < end; ++index) {
    ++counts[F.Trace(scaled.Evaluate(F.ElementAt(index)))];
  }
  return counts;
}

}  // namespace

uint64_t TraceDistribution::total() const {
  uint64_t sum = 0;
  for (uint64_t c : counts) sum += c;
  return sum;
}

TraceDistribution TraceDistribution::Shifted(uint64_t shift) const {
  TraceDistribution result{p, std::vector<uint64_t>(p, 0)};
  for (uint64_t t = 0; t < p; ++t) result.counts[t] = counts[(t + shift) % p];
  return result;
}

TraceDistribution ComputeTraceDistribution(const SparseMappingPoly& f,
                                           Element c,
                                           const EnumerationOptions& options) {
  const Field& F = *f.field();
  CheckCap(F, options);
  const SparseMappingPoly scaled = f.Scaled(c);
  const uint64_t q = F.q();

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (q < kParallelThreshold || threads == 1) {
    return {F.p(), CountRange(scaled, 0, q)};
  }
  // Disjoint ranges; integer counts sum to the same result in any order.
  std::vector<std::future<std::vector<uint64_t>>> parts;
  const uint64_t chunk = (q + threads - 1) / threads;
  for (uint64_t begin = 0; begin < q; begin += chunk) {
    const uint64_t end = std::min(q, begin + chunk);
    parts.push_back(std::async(std::launch::async, CountRange,
                               std::cref(scaled), begin, end));
  }
  TraceDistribution result{F.p(), std::vector<uint64_t>(F.p(), 0)};
  for (auto& part : parts) {
    const auto counts = part.get();
    for (uint64_t t = 0; t < F.p(); ++t) result.counts[t] += counts[t];
  }
  return result;
}

SquaredDistance DistanceSquared(const TraceDistribution& d,
                                const Rational& center) {
  SquaredDistance result;
  const auto& n = d.counts;
  if (d.p == 2) {
    const Rational s = Rational(BigInt(n[0])) - Rational(BigInt(n[1])) - center;
    result.exact = s * s;
  } else if (d.p == 3) {
    // zeta^2 = -1 - zeta, so |a0 + a1 zeta + a2 zeta^2|^2 =
    // a0^2 + a1^2 + a2^2 - a0 a1 - a1 a2 - a0 a2.
    const Rational a0 = Rational(BigInt(n[0])) - center;
    const Rational a1{BigInt(n[1])};
    const Rational a2{BigInt(n[2])};
    result.exact = a0 * a0 + a1 * a1 + a2 * a2 - a0 * a1 - a1 * a2 - a0 * a2;
  }
  if (result.exact) {
    result.approx = static_cast<long double>(*result.exact);
    return result;
  }
  std::complex<long double> sum(-static_cast<long double>(center), 0.0L);
  const long double step = 2.0L * std::numbers::pi_v<long double> /
                           static_cast<long double>(d.p);
  for (uint64_t t = 0; t < d.p; ++t) {
    if (n[t] == 0) continue;
    const long double angle = step * static_cast<long double>(t);
    sum += static_cast<long double>(n[t]) *
           std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  result.approx = std::norm(sum);
  return result;
}

double Magnitude(const TraceDistribution& d) {
  if (d.p == 2) {
    const auto diff = static_cast<int64_t>(d.counts[0]) -
                      static_cast<int64_t>(d.counts[1]);
    return static_cast<double>(diff < 0 ? -diff : diff);
  }
  return static_cast<double>(std::sqrt(DistanceSquared(d, Rational(0)).approx));
}

CurveCount CountArtinSchreier(const SparseMappingPoly& f,
                              const SubfieldTower& tower,
                              const EnumerationOptions& options) {
  const Field& F = *tower.big();
  if (f.field()->q() != F.q() || f.field()->p() != F.p()) {
    throw Error(ErrorKind::kInvalidArgument,
                "polynomial is not defined over the tower's big field");
  }
  CheckCap(F, options);
  const uint64_t q = tower.base_q();

  uint64_t kernel = 0;
  for (uint64_t index = 0; index < F.q(); ++index) {
    if (tower.TraceToSubfield(f.Evaluate(F.ElementAt(index))).is_zero()) {
      ++kernel;
    }
  }

  // The trivial character contributes Q; characters of F_q lift to
  // x -> zeta^Tr_{Q/p}(c x) with c in the subfield.
  std::vector<uint64_t> totals(F.p(), 0);
  const auto subfield = tower.SubfieldElements();
  for (size_t i = 1; i < subfield.size(); ++i) {
    const TraceDistribution d = ComputeTraceDistribution(f, subfield[i], options);
    for (uint64_t t = 0; t < F.p(); ++t) totals[t] += d.counts[t];
  }
  // sum_t totals[t] zeta^t is an integer only if totals[1..p-1] agree.
  for (uint64_t t = 2; t < F.p(); ++t) {
    if (totals[t] != totals[1]) {
      throw Error(ErrorKind::kInternal,
                  "character sum over F_q is not rational: arithmetic bug");
    }
  }
  const auto character = static_cast<int64_t>(F.q()) +
                         static_cast<int64_t>(totals[0]) -
                         static_cast<int64_t>(totals[1]);

  CurveCount count;
  count.kernel_points = q * kernel;
  count.character_points = static_cast<uint64_t>(character);
  count.points = count.kernel_points;
  count.base_q = q;
  count.ext_m = tower.ext_m();
  if (character < 0 || count.kernel_points != count.character_points) {
    throw Error(ErrorKind::kInternal,
                "Artin-Schreier counts disagree: kernel " +
                    std::to_string(count.kernel_points) + " vs character " +
                    std::to_string(character));
  }
  return count;
}

}  // namespace indexbound
