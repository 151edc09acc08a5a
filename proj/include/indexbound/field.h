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

#ifndef INDEXBOUND_FIELD_H_
#define INDEXBOUND_FIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indexbound {

struct FieldOptions {
  // Largest field order build accepts.
  uint64_t field_cap = uint64_t{1} << 22;
  // Discrete-log / exponent tables are built only when q is at most this.
  // Without them multiplication and powers use polynomial arithmetic.
  uint64_t log_table_cap = uint64_t{1} << 22;
};

// An element of F_{p^m} in the power basis of the modulus root alpha,
// packed as the base-p integer sum c_i p^i. Comparing packed values is the
// lexicographic order on (c_{m-1}, ..., c_0).
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(uint32_t packed) : packed_(packed) {}

  constexpr uint32_t packed() const { return packed_; }
  constexpr bool is_zero() const { return packed_ == 0; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  uint32_t packed_ = 0;
};

// F_q with q = p^m: the lexicographically smallest monic irreducible modulus
// and the smallest primitive element g. Immutable once built.
class Field {
 public:
  static std::shared_ptr<const Field> Build(uint64_t p, uint32_t m,
                                            const FieldOptions& options = {});

  uint64_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }

  // Low-order coefficients c_0..c_{m-1} of the monic modulus.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  Element generator() const { return generator_; }
  bool has_log_table() const { return !exp_table_.empty(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element FromCoords(std::span<const uint32_t> coords) const;
  std::vector<uint32_t> Coords(Element x) const;
  // The integer k read as 1 + 1 + ... + 1 (k times).
  Element FromInteger(int64_t k) const;
  bool IsValid(Element x) const { return x.packed() < q_; }

  Element Add(Element x, Element y) const;
  Element Sub(Element x, Element y) const;
  Element Neg(Element x) const;
  Element Mul(Element x, Element y) const;
  Element Inv(Element x) const;
  // Square-and-multiply; negative exponents invert first.
  Element Pow(Element x, int64_t e) const;
  // x^(p^times).
  Element Frobenius(Element x, uint32_t times = 1) const;

  // Discrete logarithm base g, in [0, q-1). Throws for zero.
  uint64_t Log(Element x) const;
  Element GeneratorPower(int64_t k) const;

  // Tr_{q/p}(x) as an integer in [0, p).
  uint32_t Trace(Element x) const;
  // Tr(g^k) for k in [0, q-1); empty when the log tables are absent.
  std::span<const uint32_t> power_traces() const { return power_traces_; }

  // Enumeration order used by exhaustive sums: index 0 is zero, index k+1 is
  // g^k.
  Element ElementAt(uint64_t index) const {
    return index == 0 ? zero() : GeneratorPower(static_cast<int64_t>(index - 1));
  }

  // Element literal: "0", a decimal integer, "g", or "g^k" (k may be
  // negative).
  Element ParseLiteral(std::string_view text) const;
  // "0" or "g^k".
  std::string ToString(Element x) const;
  // "[c0,c1,...]".
  std::string CoordString(Element x) const;
  // Modulus as text, highest degree first, e.g. "x^4 + x + 1".
  std::string ModulusString() const;

 private:
  Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus);

  Element MulPoly(Element x, Element y) const;
  Element PowPoly(Element x, uint64_t e) const;
  Element TimesAlpha(Element x) const;
  void BuildTables();

  uint64_t p_;
  uint32_t m_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> basis_traces_;  // Tr(alpha^i)
  Element generator_;
  std::vector<uint32_t> exp_table_;  // g^k, k in [0, q-1)
  std::vector<uint32_t> log_table_;  // indexed by packed value; [0] unused
  std::vector<uint32_t> power_traces_;
};

using FieldPtr = std::shared_ptr<const Field>;

// The extension F_{Q} / F_q with Q = q^ext_m, realised inside the single
// field F_{p^(k * ext_m)} where q = p^k. Subfield elements are the big-field
// elements fixed by y -> y^q.
class SubfieldTower {
 public:
  static SubfieldTower Build(uint64_t base_q, uint32_t ext_m,
                             const FieldOptions& options = {});

  const FieldPtr& big() const { return big_; }
  uint64_t base_q() const { return base_q_; }
  uint32_t ext_m() const { return ext_m_; }
  // k with base_q = p^k.
  uint32_t base_degree() const { return base_degree_; }

  bool InSubfield(Element y) const;
  // Tr_{Q/q}(x) = sum_{i < ext_m} x^(q^i); the result lies in the subfield.
  Element TraceToSubfield(Element x) const;
  // Tr_{q/p}(y) for y in the subfield.
  uint32_t SubfieldTraceToPrime(Element y) const;
  // Zero followed by the q-1 nonzero subfield elements, as powers of
  // g^((Q-1)/(q-1)).
  std::vector<Element> SubfieldElements() const;

 private:
  SubfieldTower(FieldPtr big, uint64_t base_q, uint32_t base_degree,
                uint32_t ext_m)
      : big_(std::move(big)),
        base_q_(base_q),
        ext_m_(ext_m),
        base_degree_(base_degree) {}

  FieldPtr big_;
  uint64_t base_q_;
  uint32_t ext_m_;
  uint32_t base_degree_;
};

}  // namespace indexbound

#endif  // INDEXBOUND_FIELD_H_
