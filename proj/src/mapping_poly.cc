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

#include "indexbound/mapping_poly.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "indexbound/error.h"
#include "indexbound/number_theory.h"

namespace indexbound {
namespace {

// e * p^v as a mapping exponent, for e in [1, q-1].
uint64_t ShiftedExponent(uint64_t e, uint32_t v, const Field& field) {
  const uint64_t order = field.q() - 1;
  uint64_t x = e % order;
  for (uint32_t i = 0; i < v; ++i) x = x * field.p() % order;
  return x == 0 ? order : x;
}

}  // namespace

uint64_t ReduceExponent(uint64_t e, uint64_t q) {
  if (e == 0) return 0;
  return (e - 1) % (q - 1) + 1;
}

SparseMappingPoly SparseMappingPoly::FromRaw(FieldPtr field,
                                             std::span<const Term> raw) {
  SparseMappingPoly result(std::move(field));
  const Field& F = *result.field_;
  std::map<uint64_t, Element> collected;
  for (const Term& term : raw) {
    if (!F.IsValid(term.coeff)) {
      throw Error(ErrorKind::kInvalidArgument, "coefficient outside the field");
    }
    const uint64_t e = ReduceExponent(term.exponent, F.q());
    if (e == 0) {
      result.constant_ = F.Add(result.constant_, term.coeff);
      continue;
    }
    auto [it, inserted] = collected.try_emplace(e, term.coeff);
    if (!inserted) it->second = F.Add(it->second, term.coeff);
  }
  for (const auto& [e, coeff] : collected) {
    if (!coeff.is_zero()) result.terms_.push_back({e, coeff});
  }
  return result;
}

Element SparseMappingPoly::Evaluate(Element x) const {
  const Field& F = *field_;
  Element value = constant_;
  for (const Term& term : terms_) {
    value = F.Add(value, F.Mul(term.coeff,
                               F.Pow(x, static_cast<int64_t>(term.exponent))));
  }
  return value;
}

SparseMappingPoly SparseMappingPoly::Scaled(Element c) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() + 1);
  for (const Term& term : terms_) {
    raw.push_back({term.exponent, field_->Mul(c, term.coeff)});
  }
  raw.push_back({0, field_->Mul(c, constant_)});
  return FromRaw(field_, raw);
}

SparseMappingPoly SparseMappingPoly::WithoutConstant() const {
  SparseMappingPoly result = *this;
  result.constant_ = field_->zero();
  return result;
}

std::string SparseMappingPoly::ToString() const {
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    if (it->coeff != field_->one()) out << field_->ToString(it->coeff) << '*';
    out << 'x';
    if (it->exponent != 1) out << '^' << it->exponent;
  }
  if (!constant_.is_zero() || first) {
    if (!first) out << " + ";
    out << (constant_.is_zero() ? std::string("0")
                                : field_->ToString(constant_));
  }
  return out.str();
}

uint64_t IndexOfExponents(std::span<const uint64_t> exponents, uint64_t q) {
  if (exponents.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "index of a constant polynomial");
  }
  const uint64_t lowest = *std::min_element(exponents.begin(), exponents.end());
  uint64_t g = q - 1;
  for (uint64_t e : exponents) g = std::gcd(g, e - lowest);
  return (q - 1) / g;
}

CanonicalForm ComputeIndex(const SparseMappingPoly& f) {
  if (f.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument,
                "index is undefined for the constant polynomial " +
                    f.ToString());
  }
  const uint64_t q = f.field()->q();
  std::vector<uint64_t> exponents;
  exponents.reserve(f.terms().size());
  for (const Term& term : f.terms()) exponents.push_back(term.exponent);

  CanonicalForm form;
  form.lowest = f.lowest_exponent();
  form.index = IndexOfExponents(exponents, q);
  form.constant = f.constant();
  const uint64_t step = (q - 1) / form.index;
  for (const Term& term : f.terms()) {
    form.associated.push_back({(term.exponent - form.lowest) / step, term.coeff});
  }
  return form;
}

SparseMappingPoly Expand(const CanonicalForm& form, const FieldPtr& field) {
  const uint64_t step = (field->q() - 1) / form.index;
  std::vector<Term> raw;
  raw.reserve(form.associated.size() + 1);
  for (const Term& term : form.associated) {
    raw.push_back({form.lowest + term.exponent * step, term.coeff});
  }
  raw.push_back({0, form.constant});
  return SparseMappingPoly::FromRaw(field, raw);
}

uint64_t CountVanishing(std::span<const Term> associated, uint64_t index,
                        const Field& field) {
  const uint64_t order = field.q() - 1;
  if (index == 0 || order % index != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "index " + std::to_string(index) + " does not divide q-1");
  }
  if (associated.empty()) return index;
  const uint64_t step = order / index;
  uint64_t count = 0;
  for (uint64_t i = 0; i < index; ++i) {
    const uint64_t root_log = i * step;
    Element value = field.zero();
    for (const Term& term : associated) {
      const uint64_t k = root_log * term.exponent % order;
      value = field.Add(value, field.Mul(term.coeff, field.GeneratorPower(
                                                         static_cast<int64_t>(k))));
    }
    if (value.is_zero()) ++count;
  }
  return count;
}

CyclotomicCoset CyclotomicCosetOf(uint64_t i, const Field& field) {
  CyclotomicCoset coset;
  coset.modulus = field.q() - 1;
  const uint64_t start = i % coset.modulus;
  uint64_t x = start;
  do {
    coset.members.push_back(x);
    x = x * field.p() % coset.modulus;
  } while (x != start);
  std::sort(coset.members.begin(), coset.members.end());
  coset.leader = coset.members.front();
  return coset;
}

std::string ShiftVector::ToString() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << ',';
    out << entries[i];
  }
  out << ')';
  return out.str();
}

SparseMappingPoly FrobeniusShift(const SparseMappingPoly& f,
                                 const ShiftVector& shift) {
  const Field& F = *f.field();
  if (shift.entries.size() != f.terms().size() + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "shift vector has " + std::to_string(shift.entries.size()) +
                    " entries, expected " +
                    std::to_string(f.terms().size() + 1));
  }
  for (uint32_t v : shift.entries) {
    if (v >= F.m()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "shift entry " + std::to_string(v) + " outside [0, m)");
    }
  }
  std::vector<Term> raw;
  raw.reserve(f.terms().size() + 1);
  raw.push_back({0, F.Frobenius(f.constant(), shift.entries[0])});
  for (size_t t = 0; t < f.terms().size(); ++t) {
    const Term& term = f.terms()[t];
    const uint32_t v = shift.entries[t + 1];
    raw.push_back({ShiftedExponent(term.exponent, v, F),
                   F.Frobenius(term.coeff, v)});
  }
  return SparseMappingPoly::FromRaw(f.field(), raw);
}

uint64_t EquivalentForm::RadiusCoefficient() const {
  const uint64_t order = representative.field()->q() - 1;
  return (index - vanishing) * std::gcd(lowest, order / index);
}

EquivalentForm DescribeRepresentative(SparseMappingPoly rep, ShiftVector shift,
                                      Element scaling) {
  EquivalentForm form;
  form.shift = std::move(shift);
  form.scaling = scaling;
  if (rep.is_constant()) {
    form.index = 1;
    form.lowest = 0;
    form.vanishing = 1;
    form.degree = 0;
  } else {
    CanonicalForm canonical = ComputeIndex(rep);
    form.index = canonical.index;
    form.lowest = canonical.lowest;
    form.vanishing = CountVanishing(canonical, *rep.field());
    form.associated = std::move(canonical.associated);
    form.degree = rep.degree();
    form.degree_coprime_to_p = std::gcd(form.degree, rep.field()->p()) == 1;
  }
  form.representative = std::move(rep);
  return form;
}

uint64_t ClassSize(const SparseMappingPoly& f, const SearchOptions& options) {
  const uint64_t m = f.field()->m();
  uint64_t size = 1;
  for (size_t t = 0; t < f.terms().size(); ++t) {
    if (size > options.budget / m) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "class search needs " + std::to_string(m) + "^" +
                      std::to_string(f.terms().size()) +
                      " shift vectors, budget is " +
                      std::to_string(options.budget));
    }
    size *= m;
  }
  return size;
}

void ForEachRepresentative(
    const SparseMappingPoly& f, Element c, const SearchOptions& options,
    const std::function<void(const ShiftVector&, const SparseMappingPoly&)>&
        visit) {
  if (c.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument,
                "character scaling c must be nonzero");
  }
  const SparseMappingPoly scaled = f.Scaled(c);
  const uint64_t count = ClassSize(scaled, options);
  const uint32_t m = f.field()->m();
  ShiftVector shift{std::vector<uint32_t>(scaled.terms().size() + 1, 0)};
  for (uint64_t n = 0; n < count; ++n) {
    visit(shift, FrobeniusShift(scaled, shift));
    for (size_t i = shift.entries.size(); i-- > 1;) {
      if (++shift.entries[i] < m) break;
      shift.entries[i] = 0;
    }
  }
}

EquivalentForm MinimizeIndex(const SparseMappingPoly& f, Element c,
                             const SearchOptions& options) {
  if (f.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument,
                "class search needs a nonconstant polynomial");
  }
  std::optional<EquivalentForm> best;
  uint64_t best_radius = 0;
  std::vector<uint64_t> exponents;
  ForEachRepresentative(
      f, c, options,
      [&](const ShiftVector& shift, const SparseMappingPoly& rep) {
        uint64_t index = 1;
        if (!rep.is_constant()) {
          exponents.clear();
          for (const Term& term : rep.terms()) exponents.push_back(term.exponent);
          index = IndexOfExponents(exponents, rep.field()->q());
        }
        if (best && index > best->index) return;
        EquivalentForm candidate = DescribeRepresentative(rep, shift, c);
        const uint64_t radius = candidate.RadiusCoefficient();
        if (!best || index < best->index || radius < best_radius) {
          best = std::move(candidate);
          best_radius = radius;
        }
      });
  return std::move(*best);
}

EquivalentForm MinimizeDegree(const SparseMappingPoly& f, Element c,
                              const SearchOptions& options) {
  if (f.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument,
                "class search needs a nonconstant polynomial");
  }
  std::optional<ShiftVector> best_shift;
  SparseMappingPoly best_rep;
  ForEachRepresentative(
      f, c, options,
      [&](const ShiftVector& shift, const SparseMappingPoly& rep) {
        if (!best_shift || rep.degree() < best_rep.degree()) {
          best_shift = shift;
          best_rep = rep;
        }
      });
  return DescribeRepresentative(std::move(best_rep), std::move(*best_shift), c);
}

GenericIndexResult MinimizeIndexGeneric(std::span<const uint64_t> exponents,
                                        const Field& field) {
  if (exponents.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "index of a constant polynomial");
  }
  const uint64_t order = field.q() - 1;
  const uint32_t m = field.m();
  SearchOptions options;
  uint64_t count = 1;
  for (size_t t = 0; t < exponents.size(); ++t) {
    if (count > options.budget / m) {
      throw Error(ErrorKind::kBudgetExceeded, "generic class search too large");
    }
    count *= m;
  }
  std::optional<GenericIndexResult> best;
  std::vector<uint32_t> shift(exponents.size(), 0);
  std::vector<uint64_t> shifted;
  for (uint64_t n = 0; n < count; ++n) {
    shifted.clear();
    for (size_t t = 0; t < exponents.size(); ++t) {
      shifted.push_back(
          ShiftedExponent(ReduceExponent(exponents[t], field.q()), shift[t], field));
    }
    std::sort(shifted.begin(), shifted.end());
    shifted.erase(std::unique(shifted.begin(), shifted.end()), shifted.end());
    GenericIndexResult candidate;
    candidate.index = IndexOfExponents(shifted, field.q());
    candidate.lowest = shifted.front();
    candidate.radius_coeff =
        candidate.index * std::gcd(candidate.lowest, order / candidate.index);
    candidate.shift = shift;
    if (!best || candidate.index < best->index ||
        (candidate.index == best->index &&
         candidate.radius_coeff < best->radius_coeff)) {
      best = std::move(candidate);
    }
    for (size_t i = shift.size(); i-- > 0;) {
      if (++shift[i] < m) break;
      shift[i] = 0;
    }
  }
  return *best;
}

}  // namespace indexbound
