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

#ifndef INDEXBOUND_CHARSUM_H_
#define INDEXBOUND_CHARSUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "indexbound/field.h"
#include "indexbound/mapping_poly.h"
#include "indexbound/rational.h"

namespace indexbound {

// counts[t] = #{x in F_q : Tr_{q/p}(c f(x)) = t}. The character sum
// S = sum_t counts[t] zeta_p^t is determined exactly by these integers.
struct TraceDistribution {
  uint64_t p = 0;
  std::vector<uint64_t> counts;

  uint64_t total() const;
  // Distribution of values t - shift, i.e. of c(f - b) when
  // shift = Tr(c b).
  TraceDistribution Shifted(uint64_t shift) const;

  friend bool operator==(const TraceDistribution&,
                         const TraceDistribution&) = default;
};

struct EnumerationOptions {
  // Largest field that exhaustive enumeration accepts.
  uint64_t cap = uint64_t{1} << 22;
  // Worker threads for large fields; 0 picks hardware concurrency.
  unsigned threads = 0;
};

// Exhaustive over x = 0, g^0, g^1, ..., g^(q-2).
TraceDistribution ComputeTraceDistribution(const SparseMappingPoly& f,
                                           Element c,
                                           const EnumerationOptions& options = {});

// |S|. Exact integer arithmetic for p = 2, 3 up to the final square root.
double Magnitude(const TraceDistribution& d);

// |S - center|^2 for a real center. `exact` is set for p <= 3, where the
// cosines of zeta_p are rational; otherwise only `approx` is meaningful.
struct SquaredDistance {
  std::optional<Rational> exact;
  long double approx = 0;
};
SquaredDistance DistanceSquared(const TraceDistribution& d,
                                const Rational& center);

// Points (x, y) in F_Q^2 on y^q - y = f(x), Q = q^ext_m.
struct CurveCount {
  uint64_t points = 0;
  uint64_t kernel_points = 0;     // q * #{x : Tr_{Q/q}(f(x)) = 0}
  uint64_t character_points = 0;  // Q + sum over nonzero c in F_q of S(c f)
  uint64_t base_q = 0;
  uint32_t ext_m = 0;
};

// Computes both counts and throws kInternal if they disagree.
CurveCount CountArtinSchreier(const SparseMappingPoly& f,
                              const SubfieldTower& tower,
                              const EnumerationOptions& options = {});

}  // namespace indexbound

#endif  // INDEXBOUND_CHARSUM_H_
