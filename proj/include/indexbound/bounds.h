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

#ifndef INDEXBOUND_BOUNDS_H_
#define INDEXBOUND_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indexbound/charsum.h"
#include "indexbound/field.h"
#include "indexbound/mapping_poly.h"
#include "indexbound/rational.h"

namespace indexbound {

enum class Classification { kInformative, kTrivial, kInapplicable };

std::string ToString(Classification c);

// The claim |S - center| <= radius_coeff * sqrt(radicand), kept exact.
//
// For a character sum the center refers to the sum of f - b (the constant
// only rotates S by a root of unity) and the claim is trivial unless it
// improves on |S| <= q. For curve counts the trivial statement is
// |N - Q| <= (q-1) Q. Both are expressed through `reference` and
// `trivial_radius`: the interval is informative iff
// |center - reference| + radius < trivial_radius.
struct BoundInterval {
  std::string name;
  Rational center;
  uint64_t radius_coeff = 0;
  uint64_t radicand = 0;
  Rational reference;
  Rational trivial_radius;
  bool applicable = false;
  std::string reason;

  bool informative() const;
  Classification classification() const;
  // e.g. "18√3"; see RenderRadius.
  std::string RenderedRadius() const;
};

inline Classification Classify(const BoundInterval& b) {
  return b.classification();
}

// K * sqrt(Q) for a prime power Q = p^e written as an integer, or as
// k√p after extracting p^(e/2): RenderRadius(2, 243) == "18√3".
std::string RenderRadius(uint64_t radius_coeff, uint64_t radicand);

struct Containment {
  bool holds = false;
  bool exact = false;      // decided with exact rational arithmetic
  long double lhs = 0;     // |S - C|^2
  long double rhs = 0;     // K^2 Q
};

// Relative tolerance for p >= 5, where |S - C|^2 is evaluated with long
// double cosines; measured against q^2, the scale of |S|^2.
inline constexpr long double kContainmentTolerance = 1e-9L;

// `constant_free` is the distribution of c (f - b).
Containment CheckContainment(const BoundInterval& b,
                             const TraceDistribution& constant_free);
// Curve counts are integers; always exact.
Containment CheckContainment(const BoundInterval& b, uint64_t points);

BoundInterval WeilBound(const SparseMappingPoly& f);

struct WanWangResult {
  BoundInterval interval;
  CanonicalForm form;  // of c f
  uint64_t vanishing = 0;
};
WanWangResult WanWangBound(const SparseMappingPoly& f, Element c);

// Interval of the index bound applied to one class representative.
BoundInterval IndexIntervalFor(const EquivalentForm& form,
                               const std::string& name);

struct ImprovedResult {
  BoundInterval interval;
  EquivalentForm witness;
  // With exhaustive search: the distinct index-bound intervals of every
  // representative, and the narrowest of them. S lies in all of them.
  std::vector<BoundInterval> class_intervals;
  std::optional<BoundInterval> tightest;
};
ImprovedResult ImprovedBound(const SparseMappingPoly& f, Element c,
                             const SearchOptions& search = {},
                             bool exhaustive = false);

struct ReducedWeilResult {
  BoundInterval interval;
  EquivalentForm witness;
};
ReducedWeilResult ReducedWeilBound(const SparseMappingPoly& f, Element c,
                                   const SearchOptions& search = {});

// The binomial specialisation x^n + a x^r: r* = r p^k maximises
// gcd(n - r*, q-1), t = gcd(n, r, q-1), and the centre moves to q/l* when
// x^(n-r*) + c^(p^k - 1) a^(p^k) has a root in F_q^*. For the canonical
// character (c = 1) this is the textbook condition on x^(n-r*) + a^(p^k).
struct BinomialResult {
  BoundInterval interval;
  uint32_t k = 0;
  uint64_t r_star = 0;
  uint64_t index = 0;
  uint64_t t = 0;
  bool root_exists = false;
};
BinomialResult BinomialBound(uint64_t n, uint64_t r, Element a,
                             const FieldPtr& field, Element c);

// If f (ignoring its constant) is a x^n + b x^r with n > r, returns
// (n, r, b/a, a): the monic binomial and the scale to fold into c.
struct BinomialShape {
  uint64_t n = 0;
  uint64_t r = 0;
  Element a;
  Element lead;
};
std::optional<BinomialShape> MatchBinomial(const SparseMappingPoly& f);

enum class CorollaryKind {
  kLeastPrimeFactor,     // x^((q-1)/Q + p^alpha) + a x, Q least prime of q-1
  kRadicalCondition,     // x^(n+p) + a x over F_{p^2}, 2 rad(n) = rad(p+1)
  kHighFrobeniusDegree,  // x^(s p^(m-1)) + a x^r, p < s < sqrt(q)
};

std::string ToString(CorollaryKind kind);

struct CorollaryParams {
  FieldPtr field;
  uint64_t alpha = 1;  // least-prime-factor
  uint64_t n = 0;      // radical-condition
  uint64_t s = 0;      // high-frobenius-degree
  uint64_t r = 0;      // high-frobenius-degree
  Element a;
  Element c{1};
};

struct CorollaryResult {
  bool hypotheses_hold = false;
  std::string reason;  // which hypothesis failed, or a summary
  std::optional<SparseMappingPoly> poly;
  BoundInterval interval;
};
CorollaryResult CorollaryBound(CorollaryKind kind,
                               const CorollaryParams& params);

struct BoundOptions {
  SearchOptions search;
  bool exhaustive = false;
};

// Everything reported for one (f, c).
struct BoundReport {
  BoundInterval weil;
  WanWangResult wan_wang;
  ImprovedResult improved;
  ReducedWeilResult reduced_weil;
  std::optional<BinomialResult> binomial;
};
BoundReport ComputeBounds(const SparseMappingPoly& f, Element c,
                          const BoundOptions& options = {});

// Coefficient-free bounds for x^n + a x^r with generic a (no vanishing):
// used by the table presets.
struct GenericBounds {
  BoundInterval weil;
  BoundInterval wan_wang;
  BoundInterval improved;
  GenericIndexResult improved_witness;
};
GenericBounds GenericBinomialBounds(const FieldPtr& field, uint64_t n,
                                    uint64_t r);

struct CurveBoundOptions {
  SearchOptions search;
  // Also build the interval obtained by bounding every character's sum
  // separately.
  bool certify = false;
};

struct CurveBounds {
  BoundInterval weil;         // |N - Q| <= (q-1)(n-1) sqrt(Q)
  BoundInterval index;        // the index-bound curve estimate
  EquivalentForm witness;
  std::vector<BoundInterval> specialized;
  std::optional<BoundInterval> certified;
};
CurveBounds ComputeCurveBounds(const SparseMappingPoly& f,
                               const SubfieldTower& tower,
                               const CurveBoundOptions& options = {});

}  // namespace indexbound

#endif  // INDEXBOUND_BOUNDS_H_
