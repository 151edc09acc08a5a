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

#include "indexbound/field.h"

#include <array>
#include <cctype>
#include <limits>
#include <sstream>

#include "indexbound/error.h"
#include "indexbound/number_theory.h"

namespace indexbound {
namespace {

constexpr uint32_t kMaxDegree = 32;
using Digits = std::array<uint64_t, kMaxDegree>;

void Unpack(uint64_t packed, uint64_t p, uint32_t m, Digits& out) {
  for (uint32_t i = 0; i < m; ++i) {
    out[i] = packed % p;
    packed /= p;
  }
}

uint32_t Pack(const Digits& digits, uint64_t p, uint32_t m) {
  uint64_t packed = 0;
  for (uint32_t i = m; i-- > 0;) packed = packed * p + digits[i];
  return static_cast<uint32_t>(packed);
}

// True iff the monic `divisor` divides `poly` over Z_p. Both are full
// coefficient vectors, low degree first, including the leading 1.
bool DividesMonic(std::vector<uint64_t> poly,
                  const std::vector<uint64_t>& divisor, uint64_t p) {
  const size_t d = divisor.size() - 1;
  for (size_t k = poly.size() - 1; k >= d && k < poly.size(); --k) {
    const uint64_t lead = poly[k];
    if (lead == 0) continue;
    for (size_t j = 0; j <= d; ++j) {
      poly[k - d + j] = (poly[k - d + j] + (p - lead) * divisor[j]) % p;
    }
  }
  for (size_t j = 0; j < d; ++j) {
    if (poly[j] != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool IsIrreducible(const std::vector<uint64_t>& poly, uint64_t p) {
  const uint32_t m = static_cast<uint32_t>(poly.size() - 1);
  if (m <= 1) return true;
  if (poly[0] == 0) return false;
  for (uint32_t d = 1; d <= m / 2; ++d) {
    const uint64_t count = CheckedPow(p, d);
    std::vector<uint64_t> divisor(d + 1, 0);
    divisor[d] = 1;
    for (uint64_t low = 0; low < count; ++low) {
      uint64_t rest = low;
      for (uint32_t j = 0; j < d; ++j) {
        divisor[j] = rest % p;
        rest /= p;
      }
      if (DividesMonic(poly, divisor, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), q_(CheckedPow(p, m)), modulus_(std::move(modulus)) {}

std::shared_ptr<const Field> Field::Build(uint64_t p, uint32_t m,
                                          const FieldOptions& options) {
  if (!IsPrime(p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "field characteristic must be prime, got " + std::to_string(p));
  }
  if (m == 0) {
    throw Error(ErrorKind::kInvalidArgument, "field degree m must be >= 1");
  }
  if (m >= kMaxDegree) {
    throw Error(ErrorKind::kCapExceeded,
                "field degree " + std::to_string(m) + " exceeds cap");
  }
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > options.field_cap ||
        q > std::numeric_limits<uint32_t>::max()) {
      throw Error(ErrorKind::kCapExceeded,
                  "field order " + std::to_string(p) + "^" +
                      std::to_string(m) + " exceeds cap " +
                      std::to_string(options.field_cap));
    }
  }

  // Candidates in increasing order of (c_{m-1}, ..., c_0), i.e. of the packed
  // integer sum c_i p^i.
  std::vector<uint64_t> poly(m + 1, 0);
  poly[m] = 1;
  std::vector<uint32_t> modulus;
  for (uint64_t low = 0; low < q; ++low) {
    uint64_t rest = low;
    for (uint32_t i = 0; i < m; ++i) {
      poly[i] = rest % p;
      rest /= p;
    }
    if (IsIrreducible(poly, p)) {
      modulus.assign(poly.begin(), poly.begin() + m);
      break;
    }
  }
  if (modulus.empty()) {
    throw Error(ErrorKind::kInternal, "no irreducible polynomial found");
  }

  std::shared_ptr<Field> field(new Field(p, m, std::move(modulus)));

  const auto factors = Factorize(q - 1);
  for (uint64_t candidate = 1; candidate < q; ++candidate) {
    const Element x(static_cast<uint32_t>(candidate));
    bool primitive = true;
    for (const auto& [prime, k] : factors) {
      if (field->PowPoly(x, (q - 1) / prime) == field->one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      field->generator_ = x;
      break;
    }
  }
  if (field->generator_.is_zero()) {
    throw Error(ErrorKind::kInternal, "no primitive element found");
  }

  field->basis_traces_.resize(m);
  Element alpha_power = field->one();
  for (uint32_t i = 0; i < m; ++i) {
    Element sum = field->zero();
    Element conjugate = alpha_power;
    for (uint32_t j = 0; j < m; ++j) {
      sum = field->Add(sum, conjugate);
      conjugate = field->PowPoly(conjugate, p);
    }
    if (sum.packed() >= p) {
      throw Error(ErrorKind::kInternal, "trace left the prime field");
    }
    field->basis_traces_[i] = sum.packed();
    alpha_power = field->TimesAlpha(alpha_power);
  }

  if (q <= options.log_table_cap) field->BuildTables();
  return field;
}

void Field::BuildTables() {
  const uint64_t order = q_ - 1;
  exp_table_.resize(order);
  log_table_.assign(q_, 0);
  Element x = one();
  for (uint64_t k = 0; k < order; ++k) {
    exp_table_[k] = x.packed();
    log_table_[x.packed()] = static_cast<uint32_t>(k);
    x = MulPoly(x, generator_);
  }
  power_traces_.resize(order);
  for (uint64_t k = 0; k < order; ++k) {
    power_traces_[k] = Trace(Element(exp_table_[k]));
  }
}

Element Field::FromCoords(std::span<const uint32_t> coords) const {
  if (coords.size() != m_) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(m_) + " coordinates, got " +
                    std::to_string(coords.size()));
  }
  Digits digits{};
  for (uint32_t i = 0; i < m_; ++i) {
    if (coords[i] >= p_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "coordinate " + std::to_string(coords[i]) +
                      " out of range for p = " + std::to_string(p_));
    }
    digits[i] = coords[i];
  }
  return Element(Pack(digits, p_, m_));
}

std::vector<uint32_t> Field::Coords(Element x) const {
  Digits digits{};
  Unpack(x.packed(), p_, m_, digits);
  return std::vector<uint32_t>(digits.begin(), digits.begin() + m_);
}

Element Field::FromInteger(int64_t k) const {
  return Element(static_cast<uint32_t>(Mod(k, p_)));
}

Element Field::Add(Element x, Element y) const {
  if (p_ == 2) return Element(x.packed() ^ y.packed());
  uint64_t a = x.packed(), b = y.packed(), result = 0, weight = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    result += s * weight;
    a /= p_;
    b /= p_;
    weight *= p_;
  }
  return Element(static_cast<uint32_t>(result));
}

Element Field::Neg(Element x) const {
  if (p_ == 2) return x;
  uint64_t a = x.packed(), result = 0, weight = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    const uint64_t d = a % p_;
    result += (d == 0 ? 0 : p_ - d) * weight;
    a /= p_;
    weight *= p_;
  }
  return Element(static_cast<uint32_t>(result));
}

Element Field::Sub(Element x, Element y) const { return Add(x, Neg(y)); }

Element Field::TimesAlpha(Element x) const {
  if (m_ == 1) return zero();  // alpha is the root of the modulus x + 0
  Digits digits{};
  Unpack(x.packed(), p_, m_, digits);
  const uint64_t top = digits[m_ - 1];
  for (uint32_t i = m_ - 1; i > 0; --i) digits[i] = digits[i - 1];
  digits[0] = 0;
  if (top != 0) {
    for (uint32_t i = 0; i < m_; ++i) {
      digits[i] = (digits[i] + (p_ - top) * modulus_[i]) % p_;
    }
  }
  return Element(Pack(digits, p_, m_));
}

Element Field::MulPoly(Element x, Element y) const {
  Digits a{}, b{};
  Unpack(x.packed(), p_, m_, a);
  Unpack(y.packed(), p_, m_, b);
  std::array<uint64_t, 2 * kMaxDegree> product{};
  for (uint32_t j = 0; j < m_; ++j) {
    if (b[j] == 0) continue;
    for (uint32_t i = 0; i < m_; ++i) {
      product[i + j] = (product[i + j] + a[i] * b[j]) % p_;
    }
  }
  // x^m = -sum c_i x^i.
  for (uint32_t k = 2 * m_ - 2; k >= m_ && k < 2 * m_; --k) {
    const uint64_t lead = product[k];
    if (lead == 0) continue;
    product[k] = 0;
    for (uint32_t i = 0; i < m_; ++i) {
      product[k - m_ + i] =
          (product[k - m_ + i] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  Digits result{};
  for (uint32_t i = 0; i < m_; ++i) result[i] = product[i];
  return Element(Pack(result, p_, m_));
}

Element Field::PowPoly(Element x, uint64_t e) const {
  Element result = one();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = MulPoly(result, base);
    base = MulPoly(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::Mul(Element x, Element y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  if (!has_log_table()) return MulPoly(x, y);
  uint64_t k = uint64_t{log_table_[x.packed()]} + log_table_[y.packed()];
  if (k >= q_ - 1) k -= q_ - 1;
  return Element(exp_table_[k]);
}

Element Field::Inv(Element x) const {
  if (x.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "inverse of zero");
  }
  if (!has_log_table()) return PowPoly(x, q_ - 2);
  const uint64_t k = log_table_[x.packed()];
  return Element(exp_table_[k == 0 ? 0 : q_ - 1 - k]);
}

Element Field::Pow(Element x, int64_t e) const {
  if (e == 0) return one();
  if (x.is_zero()) {
    if (e < 0) throw Error(ErrorKind::kInvalidArgument, "inverse of zero");
    return zero();
  }
  if (e < 0) x = Inv(x);
  // |e| reduced modulo the group order; x^(q-1) = 1.
  uint64_t n = Mod(e < 0 ? -(e + 1) : e - 1, q_ - 1) + 1;
  Element result = one();
  Element base = x;
  while (n > 0) {
    if (n & 1) result = Mul(result, base);
    base = Mul(base, base);
    n >>= 1;
  }
  return result;
}

Element Field::Frobenius(Element x, uint32_t times) const {
  if (x.is_zero()) return x;
  uint64_t e = 1;
  for (uint32_t i = 0; i < times % m_; ++i) e = e * p_ % (q_ - 1);
  return Pow(x, static_cast<int64_t>(e));
}

uint64_t Field::Log(Element x) const {
  if (x.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "logarithm of zero");
  }
  if (has_log_table()) return log_table_[x.packed()];
  Element y = one();
  for (uint64_t k = 0; k < q_ - 1; ++k) {
    if (y == x) return k;
    y = MulPoly(y, generator_);
  }
  throw Error(ErrorKind::kInternal, "element outside the cyclic group");
}

Element Field::GeneratorPower(int64_t k) const {
  const uint64_t e = Mod(k, q_ - 1);
  if (has_log_table()) return Element(exp_table_[e]);
  return PowPoly(generator_, e);
}

uint32_t Field::Trace(Element x) const {
  uint64_t a = x.packed(), sum = 0;
  for (uint32_t i = 0; i < m_; ++i) {
    sum += (a % p_) * basis_traces_[i];
    a /= p_;
  }
  return static_cast<uint32_t>(sum % p_);
}

Element Field::ParseLiteral(std::string_view text) const {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (begin == end) throw ParseError(begin + 1, "empty element literal");

  auto parse_digits = [&](size_t pos, uint64_t modulus) {
    if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos + 1, "expected a decimal integer");
    }
    uint64_t value = 0;
    for (; pos < end; ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(pos + 1, std::string("unexpected character '") +
                                      text[pos] + "'");
      }
      value = (value * 10 + static_cast<uint64_t>(text[pos] - '0')) % modulus;
    }
    return value;
  };

  if (text[begin] == 'g') {
    if (begin + 1 == end) return generator_;
    if (text[begin + 1] != '^') {
      throw ParseError(begin + 2, "expected '^' after 'g'");
    }
    size_t pos = begin + 2;
    bool negative = false;
    if (pos < end && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    const uint64_t k = parse_digits(pos, q_ - 1);
    return GeneratorPower(negative ? -static_cast<int64_t>(k)
                                   : static_cast<int64_t>(k));
  }
  return FromInteger(static_cast<int64_t>(parse_digits(begin, p_)));
}

std::string Field::ToString(Element x) const {
  if (x.is_zero()) return "0";
  return "g^" + std::to_string(Log(x));
}

std::string Field::CoordString(Element x) const {
  std::ostringstream out;
  out << '[';
  const auto coords = Coords(x);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out << ',';
    out << coords[i];
  }
  out << ']';
  return out.str();
}

std::string Field::ModulusString() const {
  std::ostringstream out;
  out << "x";
  if (m_ > 1) out << '^' << m_;
  for (uint32_t i = m_; i-- > 0;) {
    const uint32_t c = modulus_[i];
    if (c == 0) continue;
    out << " + ";
    if (c != 1 || i == 0) out << c;
    if (i > 0) {
      if (c != 1) out << '*';
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

SubfieldTower SubfieldTower::Build(uint64_t base_q, uint32_t ext_m,
                                   const FieldOptions& options) {
  const auto [p, k] = PrimePowerDecomposition(base_q);
  if (p == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "inconsistent tower: base q = " + std::to_string(base_q) +
                    " is not a prime power");
  }
  if (ext_m == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "inconsistent tower: extension degree must be >= 1");
  }
  return SubfieldTower(Field::Build(p, k * ext_m, options), base_q, k, ext_m);
}

bool SubfieldTower::InSubfield(Element y) const {
  return big_->Pow(y, static_cast<int64_t>(base_q_)) == y;
}

Element SubfieldTower::TraceToSubfield(Element x) const {
  Element sum = big_->zero();
  Element conjugate = x;
  for (uint32_t i = 0; i < ext_m_; ++i) {
    sum = big_->Add(sum, conjugate);
    conjugate = big_->Pow(conjugate, static_cast<int64_t>(base_q_));
  }
  return sum;
}

uint32_t SubfieldTower::SubfieldTraceToPrime(Element y) const {
  if (!InSubfield(y)) {
    throw Error(ErrorKind::kInvalidArgument,
                "element " + big_->ToString(y) + " is not in the subfield");
  }
  Element sum = big_->zero();
  Element conjugate = y;
  for (uint32_t i = 0; i < base_degree_; ++i) {
    sum = big_->Add(sum, conjugate);
    conjugate = big_->Frobenius(conjugate);
  }
  if (sum.packed() >= big_->p()) {
    throw Error(ErrorKind::kInternal, "subfield trace left the prime field");
  }
  return sum.packed();
}

std::vector<Element> SubfieldTower::SubfieldElements() const {
  const uint64_t big_order = big_->q() - 1;
  const uint64_t step = big_order / (base_q_ - 1);
  std::vector<Element> elements;
  elements.reserve(base_q_);
  elements.push_back(big_->zero());
  for (uint64_t j = 0; j < base_q_ - 1; ++j) {
    elements.push_back(big_->GeneratorPower(static_cast<int64_t>(j * step)));
  }
  return elements;
}

}  // namespace indexbound
