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

#include <cctype>
#include <limits>
#include <set>

#include "indexbound/error.h"
#include "indexbound/mapping_poly.h"

namespace indexbound {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const FieldPtr& field,
             const ParamBindings& params)
      : text_(text), field_(field), params_(params) {}

  SparseMappingPoly Parse() {
    std::vector<Term> raw;
    raw.push_back(ParseTerm());
    SkipSpace();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') Fail("expected '+' or end of input");
      ++pos_;
      raw.push_back(ParseTerm());
      SkipSpace();
    }
    return SparseMappingPoly::FromRaw(field_, raw);
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(pos_ + 1, message);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool AtDigit() const {
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Decimal digits reduced modulo `modulus` as they are read.
  uint64_t ParseIntegerMod(uint64_t modulus) {
    if (!AtDigit()) Fail("expected a decimal integer");
    uint64_t value = 0;
    while (AtDigit()) {
      value = (value * 10 + static_cast<uint64_t>(text_[pos_] - '0')) % modulus;
      ++pos_;
    }
    return value;
  }

  uint64_t ParseExponent() {
    if (pos_ < text_.size() && text_[pos_] == '-') {
      Fail("exponent must be nonnegative");
    }
    if (!AtDigit()) Fail("expected a decimal integer");
    uint64_t value = 0;
    while (AtDigit()) {
      const uint64_t digit = static_cast<uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<uint64_t>::max() - digit) / 10) {
        Fail("exponent too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Element ParseCoefficient() {
    const Field& F = *field_;
    if (AtDigit()) {
      return F.FromInteger(static_cast<int64_t>(ParseIntegerMod(F.p())));
    }
    if (pos_ >= text_.size()) Fail("expected a coefficient or 'x'");
    const char c = text_[pos_];
    if (c == 'g') {
      ++pos_;
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] != '^') return F.generator();
      ++pos_;
      SkipSpace();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const auto k = static_cast<int64_t>(ParseIntegerMod(F.q() - 1));
      return F.GeneratorPower(negative ? -k : k);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'x') {
      const size_t start = pos_;
      ++pos_;
      if (pos_ < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        Fail("parameter names are single letters");
      }
      const std::string name(1, c);
      auto it = params_.find(name);
      if (it == params_.end()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "unbound parameter '" + name + "' at position " +
                        std::to_string(start + 1));
      }
      return it->second;
    }
    Fail("expected a coefficient or 'x'");
  }

  Term ParseMonomial(Element coeff) {
    ++pos_;  // 'x'
    SkipSpace();
    uint64_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      SkipSpace();
      exponent = ParseExponent();
    }
    return {exponent, coeff};
  }

  Term ParseTerm() {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      return ParseMonomial(field_->one());
    }
    const Element coeff = ParseCoefficient();
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] != 'x') Fail("expected 'x'");
      return ParseMonomial(coeff);
    }
    return {0, coeff};
  }

  std::string_view text_;
  const FieldPtr& field_;
  const ParamBindings& params_;
  size_t pos_ = 0;
};

}  // namespace

SparseMappingPoly ParsePoly(std::string_view expr, const FieldPtr& field,
                            const ParamBindings& params) {
  return PolyParser(expr, field, params).Parse();
}

std::vector<std::string> PolyParameterNames(std::string_view expr) {
  std::set<std::string> names;
  for (char c : expr) {
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'x' && c != 'g') {
      names.insert(std::string(1, c));
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace indexbound
