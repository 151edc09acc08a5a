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

#ifndef INDEXBOUND_RATIONAL_H_
#define INDEXBOUND_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace indexbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "27/2", "-3", "0".
inline std::string ToString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Inverse of ToString; throws std::runtime_error on malformed text.
Rational ParseRational(const std::string& text);

inline Rational MakeRational(uint64_t num, uint64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace indexbound

#endif  // INDEXBOUND_RATIONAL_H_
