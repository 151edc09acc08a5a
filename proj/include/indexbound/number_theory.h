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

#ifndef INDEXBOUND_NUMBER_THEORY_H_
#define INDEXBOUND_NUMBER_THEORY_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace indexbound {

// Small-integer helpers. Inputs here are at most a few million, so trial
// division is adequate throughout.

bool IsPrime(uint64_t n);

// Distinct prime factors in increasing order, with multiplicity.
std::vector<std::pair<uint64_t, uint32_t>> Factorize(uint64_t n);

// Product of the distinct primes dividing n; Radical(1) == 1.
uint64_t Radical(uint64_t n);

// Exponent of `prime` in n. n must be nonzero.
uint32_t Valuation(uint64_t n, uint64_t prime);

// Smallest prime dividing n (n >= 2).
uint64_t LeastPrimeFactor(uint64_t n);

// base^exp, throwing on overflow past 2^63.
uint64_t CheckedPow(uint64_t base, uint32_t exp);

// If n == p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
std::pair<uint64_t, uint32_t> PrimePowerDecomposition(uint64_t n);

// Nonnegative residue of a signed value.
inline uint64_t Mod(int64_t value, uint64_t modulus) {
  int64_t r = value % static_cast<int64_t>(modulus);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(modulus) : r);
}

}  // namespace indexbound

#endif  // INDEXBOUND_NUMBER_THEORY_H_
