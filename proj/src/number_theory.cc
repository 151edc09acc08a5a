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

#include "indexbound/number_theory.h"

#include <limits>

#include "indexbound/error.h"

namespace indexbound {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, uint32_t>> Factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> factors;
  for (uint64_t d = 2; d * d <= n; ++d) {
    uint32_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) factors.emplace_back(d, k);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

uint64_t Radical(uint64_t n) {
  uint64_t rad = 1;
  for (const auto& [prime, k] : Factorize(n)) rad *= prime;
  return rad;
}

uint32_t Valuation(uint64_t n, uint64_t prime) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "valuation of zero");
  uint32_t k = 0;
  while (n % prime == 0) {
    n /= prime;
    ++k;
  }
  return k;
}

uint64_t LeastPrimeFactor(uint64_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "least prime factor needs n >= 2, got " + std::to_string(n));
  }
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

uint64_t CheckedPow(uint64_t base, uint32_t exp) {
  uint64_t result = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 &&
        result > static_cast<uint64_t>(std::numeric_limits<int64_t>::max()) /
                     base) {
      throw Error(ErrorKind::kCapExceeded,
                  "integer overflow computing " + std::to_string(base) + "^" +
                      std::to_string(exp));
    }
    result *= base;
  }
  return result;
}

std::pair<uint64_t, uint32_t> PrimePowerDecomposition(uint64_t n) {
  if (n < 2) return {0, 0};
  auto factors = Factorize(n);
  if (factors.size() != 1) return {0, 0};
  return factors.front();
}

}  // namespace indexbound
