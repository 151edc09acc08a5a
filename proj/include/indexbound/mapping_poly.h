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

#ifndef INDEXBOUND_MAPPING_POLY_H_
#define INDEXBOUND_MAPPING_POLY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indexbound/field.h"

namespace indexbound {

struct Term {
  uint64_t exponent = 0;
  Element coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Exponent of the mapping x^e on F_q: e > 0 goes to ((e-1) mod (q-1)) + 1,
// so x^(q-1) stays distinct from the constant 1. Zero stays zero.
uint64_t ReduceExponent(uint64_t e, uint64_t q);

// A polynomial regarded as a function on F_q: nonconstant terms with
// strictly increasing exponents in [1, q-1] and nonzero coefficients, plus a
// separate constant.
class SparseMappingPoly {
 public:
  SparseMappingPoly() = default;
  explicit SparseMappingPoly(FieldPtr field)
      : field_(std::move(field)), constant_(0) {}

  // Reduces arbitrary raw terms as a mapping: exponents folded into
  // [1, q-1], exponent-0 terms moved into the constant, colliding
  // coefficients summed and zeros dropped.
  static SparseMappingPoly FromRaw(FieldPtr field, std::span<const Term> raw);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  Element constant() const { return constant_; }

  bool is_constant() const { return terms_.empty(); }
  // Largest exponent; 0 for a constant.
  uint64_t degree() const { return terms_.empty() ? 0 : terms_.back().exponent; }
  // Smallest nonconstant exponent; 0 for a constant.
  uint64_t lowest_exponent() const {
    return terms_.empty() ? 0 : terms_.front().exponent;
  }

  Element Evaluate(Element x) const;
  SparseMappingPoly Scaled(Element c) const;
  SparseMappingPoly WithoutConstant() const;

  // e.g. "x^25 + g^4*x^4 + g^13".
  std::string ToString() const;

  friend bool operator==(const SparseMappingPoly& a,
                         const SparseMappingPoly& b) {
    return a.field_->q() == b.field_->q() && a.terms_ == b.terms_ &&
           a.constant_ == b.constant_;
  }

 private:
  FieldPtr field_;
  std::vector<Term> terms_;
  Element constant_;
};

inline SparseMappingPoly ReduceAsMapping(FieldPtr field,
                                         std::span<const Term> raw) {
  return SparseMappingPoly::FromRaw(std::move(field), raw);
}

using ParamBindings = std::map<std::string, Element, std::less<>>;

// Grammar (whitespace insignificant):
//   poly := term ('+' term)*
//   term := [coef '*'] 'x' ['^' exp] | coef
//   coef := '0' | int | 'g' ['^' int] | name
// Names are single letters other than x and g, bound through `params`.
SparseMappingPoly ParsePoly(std::string_view expr, const FieldPtr& field,
                            const ParamBindings& params = {});

// Single-letter parameter names occurring in `expr`, sorted.
std::vector<std::string> PolyParameterNames(std::string_view expr);

// f - b = x^lowest * h(x^((q-1)/index)); the leading scalar is kept inside
// h, whose terms are (power of y, coefficient).
struct CanonicalForm {
  uint64_t lowest = 0;
  uint64_t index = 0;
  std::vector<Term> associated;
  Element constant;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// index = (q-1) / gcd({e - r} U {q-1}) over the exponents e of `exponents`
// (ascending, nonempty), r the smallest.
uint64_t IndexOfExponents(std::span<const uint64_t> exponents, uint64_t q);

// Throws for a constant polynomial, whose index is undefined.
CanonicalForm ComputeIndex(const SparseMappingPoly& f);
SparseMappingPoly Expand(const CanonicalForm& form, const FieldPtr& field);

// #{0 <= i < index : h(xi^i) = 0} with xi = g^((q-1)/index).
uint64_t CountVanishing(std::span<const Term> associated, uint64_t index,
                        const Field& field);
inline uint64_t CountVanishing(const CanonicalForm& form, const Field& field) {
  return CountVanishing(form.associated, form.index, field);
}

struct CyclotomicCoset {
  uint64_t leader = 0;
  std::vector<uint64_t> members;  // sorted
  uint64_t modulus = 0;
};

// {i p^j mod (q-1)}; i is taken modulo q-1 first.
CyclotomicCoset CyclotomicCosetOf(uint64_t i, const Field& field);

// entries[0] shifts the constant, entries[1 + t] the t-th term (ascending
// exponent order of the source polynomial). Each entry is in [0, m).
struct ShiftVector {
  std::vector<uint32_t> entries;

  friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;
  std::string ToString() const;
};

// Each monomial a x^e becomes a^(p^v) x^(e p^v), reduced as a mapping.
SparseMappingPoly FrobeniusShift(const SparseMappingPoly& f,
                                 const ShiftVector& shift);

struct SearchOptions {
  // Maximum number of shift vectors (m^k) a class search may enumerate.
  uint64_t budget = 10'000'000;
};

// One member of the Frobenius class of c*f, with its canonical data.
struct EquivalentForm {
  ShiftVector shift;
  SparseMappingPoly representative;  // FrobeniusShift(c * f, shift)
  Element scaling;                   // c
  uint64_t index = 0;
  uint64_t lowest = 0;
  std::vector<Term> associated;
  uint64_t vanishing = 0;  // roots of h among the index-th roots of unity
  uint64_t degree = 0;
  bool degree_coprime_to_p = false;

  // (index - vanishing) * gcd(lowest, (q-1)/index).
  uint64_t RadiusCoefficient() const;
};

// Canonical data for one representative. A representative whose
// nonconstant part cancelled completely is described as index 1 with h = 0
// (one vanishing point), which pins its sum exactly.
EquivalentForm DescribeRepresentative(SparseMappingPoly rep, ShiftVector shift,
                                      Element scaling);

// Number of shift vectors for f, or throws kBudgetExceeded.
uint64_t ClassSize(const SparseMappingPoly& f, const SearchOptions& options);

// Visits every shift vector of c*f in lexicographic order (constant slot
// fixed at 0).
void ForEachRepresentative(
    const SparseMappingPoly& f, Element c, const SearchOptions& options,
    const std::function<void(const ShiftVector&, const SparseMappingPoly&)>&
        visit);

// Smallest index over the class of c*f; ties broken by the smaller radius
// coefficient, then the lexicographically smallest shift.
EquivalentForm MinimizeIndex(const SparseMappingPoly& f, Element c,
                             const SearchOptions& options = {});

// Smallest degree over the class of c*f; ties by the smallest shift.
EquivalentForm MinimizeDegree(const SparseMappingPoly& f, Element c,
                              const SearchOptions& options = {});

// Index minimisation from exponents alone, treating every coefficient as
// generic (nonzero, no cancellation, no vanishing). Used for the table
// presets, where the coefficient a is left free.
struct GenericIndexResult {
  uint64_t index = 0;
  uint64_t lowest = 0;
  uint64_t radius_coeff = 0;  // index * gcd(lowest, (q-1)/index)
  std::vector<uint32_t> shift;
};
GenericIndexResult MinimizeIndexGeneric(std::span<const uint64_t> exponents,
                                        const Field& field);

}  // namespace indexbound

#endif  // INDEXBOUND_MAPPING_POLY_H_
