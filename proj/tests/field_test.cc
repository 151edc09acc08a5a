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

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "indexbound/error.h"
#include "indexbound/number_theory.h"
#include "oracle.h"

namespace indexbound {
namespace {

using testing::NaiveField;

struct Shape {
  uint64_t p;
  uint32_t m;
};

const Shape kSmallFields[] = {{2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                              {3, 3}, {5, 2}, {7, 2}, {2, 6}, {5, 3}};

NaiveField NaiveOf(const Field& F) { return NaiveField(F.p(), F.modulus()); }

TEST(FieldTest, SmallestBinaryQuartic) {
  const FieldPtr F = Field::Build(2, 4);
  EXPECT_EQ(F->q(), 16u);
  EXPECT_EQ(F->modulus(), (std::vector<uint32_t>{1, 1, 0, 0}));
  EXPECT_EQ(F->ModulusString(), "x^4 + x + 1");
}

TEST(FieldTest, TernaryCubicOrder) {
  EXPECT_EQ(Field::Build(3, 3)->q(), 27u);
}

TEST(FieldTest, RejectsNonPrimeCharacteristic) {
  try {
    Field::Build(4, 1);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

TEST(FieldTest, CapIsEnforced) {
  try {
    Field::Build(2, 23);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
  FieldOptions options;
  options.field_cap = 26;
  EXPECT_THROW(Field::Build(3, 3, options), Error);
}

// For m <= 3 a monic polynomial is irreducible iff it has no root, so the
// lexicographically first one can be found by a root scan.
TEST(FieldTest, ModulusIsFirstRootlessCubicOrQuadratic) {
  for (const Shape s : std::vector<Shape>{{2, 2}, {2, 3}, {3, 2}, {3, 3},
                                          {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    const FieldPtr F = Field::Build(s.p, s.m);
    uint64_t q = 1;
    for (uint32_t i = 0; i < s.m; ++i) q *= s.p;
    std::vector<uint32_t> expected;
    for (uint64_t low = 0; low < q && expected.empty(); ++low) {
      std::vector<uint64_t> c(s.m);
      uint64_t rest = low;
      for (uint32_t i = 0; i < s.m; ++i) {
        c[i] = rest % s.p;
        rest /= s.p;
      }
      bool has_root = false;
      for (uint64_t x = 0; x < s.p && !has_root; ++x) {
        uint64_t value = 1;  // leading x^m
        for (uint32_t i = 0; i < s.m; ++i) value = value * x % s.p;
        uint64_t xi = 1;
        for (uint32_t i = 0; i < s.m; ++i) {
          value = (value + c[i] * xi) % s.p;
          xi = xi * x % s.p;
        }
        has_root = value == 0;
      }
      if (!has_root) expected.assign(c.begin(), c.end());
    }
    EXPECT_EQ(F->modulus(), expected) << s.p << "^" << s.m;
  }
}

TEST(FieldTest, ArithmeticMatchesNaiveModel) {
  for (const Shape s : kSmallFields) {
    const FieldPtr F = Field::Build(s.p, s.m);
    const NaiveField N = NaiveOf(*F);
    for (uint32_t x = 0; x < F->q(); ++x) {
      for (uint32_t y = 0; y < F->q(); ++y) {
        const Element ex(x), ey(y);
        ASSERT_EQ(F->Mul(ex, ey).packed(),
                  N.ToPacked(N.Mul(N.FromPacked(x), N.FromPacked(y))));
        ASSERT_EQ(F->Add(ex, ey).packed(),
                  N.ToPacked(N.Add(N.FromPacked(x), N.FromPacked(y))));
        ASSERT_EQ(F->Sub(F->Add(ex, ey), ey), ex);
      }
    }
  }
}

TEST(FieldTest, GeneratorIsSmallestPrimitiveElement) {
  for (const Shape s : kSmallFields) {
    const FieldPtr F = Field::Build(s.p, s.m);
    const NaiveField N = NaiveOf(*F);
    auto order = [&](uint32_t packed) {
      const auto x = N.FromPacked(packed);
      auto power = x;
      uint64_t k = 1;
      while (power != N.One()) {
        power = N.Mul(power, x);
        ++k;
      }
      return k;
    };
    const uint32_t g = F->generator().packed();
    EXPECT_EQ(order(g), F->q() - 1);
    for (uint32_t smaller = 1; smaller < g; ++smaller) {
      EXPECT_LT(order(smaller), F->q() - 1);
    }
  }
}

TEST(FieldTest, TraceMatchesConjugateSum) {
  for (const Shape s : std::vector<Shape>{{3, 4}, {2, 8}, {5, 3}, {7, 2}}) {
    const FieldPtr F = Field::Build(s.p, s.m);
    const NaiveField N = NaiveOf(*F);
    for (uint32_t x = 0; x < F->q(); ++x) {
      ASSERT_EQ(F->Trace(Element(x)), N.Trace(N.FromPacked(x)));
    }
  }
}

TEST(FieldTest, TraceIsAdditiveAndFrobeniusInvariant) {
  std::mt19937 rng(7);
  for (const Shape s : std::vector<Shape>{{2, 12}, {3, 7}, {5, 5}, {7, 4}}) {
    const FieldPtr F = Field::Build(s.p, s.m);
    std::uniform_int_distribution<uint32_t> pick(0, F->q() - 1);
    for (uint32_t x = 0; x < F->q(); ++x) {
      const Element ex(x);
      ASSERT_EQ(F->Trace(F->Frobenius(ex)), F->Trace(ex));
      const Element ey(pick(rng));
      ASSERT_EQ(F->Trace(F->Add(ex, ey)),
                (F->Trace(ex) + F->Trace(ey)) % F->p());
    }
  }
}

TEST(FieldTest, FrobeniusIsAdditive) {
  std::mt19937 rng(11);
  for (const Shape s : std::vector<Shape>{{2, 10}, {3, 6}, {5, 4}, {31, 2}}) {
    const FieldPtr F = Field::Build(s.p, s.m);
    std::uniform_int_distribution<uint32_t> pick(0, F->q() - 1);
    for (int i = 0; i < 2000; ++i) {
      const Element x(pick(rng)), y(pick(rng));
      ASSERT_EQ(F->Frobenius(F->Add(x, y)),
                F->Add(F->Frobenius(x), F->Frobenius(y)));
      ASSERT_EQ(F->Frobenius(x), F->Pow(x, static_cast<int64_t>(F->p())));
    }
    for (uint32_t x = 0; x < std::min<uint64_t>(F->q(), 500); ++x) {
      ASSERT_EQ(F->Frobenius(Element(x), F->m()), Element(x));
    }
  }
}

TEST(FieldTest, LogIsInverseOfGeneratorPower) {
  for (const Shape s : std::vector<Shape>{{2, 4}, {3, 3}, {5, 3}, {2, 9}}) {
    const FieldPtr F = Field::Build(s.p, s.m);
    std::set<uint32_t> seen;
    for (uint64_t k = 0; k + 1 < F->q(); ++k) {
      const Element x = F->GeneratorPower(static_cast<int64_t>(k));
      ASSERT_EQ(F->Log(x), k);
      seen.insert(x.packed());
    }
    EXPECT_EQ(seen.size(), F->q() - 1);
    EXPECT_EQ(seen.count(0), 0u);
  }
}

TEST(FieldTest, PowMatchesRepeatedMultiplication) {
  const FieldPtr F = Field::Build(3, 4);
  const NaiveField N = NaiveOf(*F);
  for (uint32_t x = 1; x < F->q(); x += 7) {
    for (uint64_t e = 0; e < 200; e += 13) {
      ASSERT_EQ(F->Pow(Element(x), static_cast<int64_t>(e)).packed(),
                N.ToPacked(N.Pow(N.FromPacked(x), e)));
    }
    const Element ex(x);
    EXPECT_EQ(F->Mul(F->Pow(ex, -5), F->Pow(ex, 5)), F->one());
    EXPECT_EQ(F->Mul(F->Inv(ex), ex), F->one());
  }
}

TEST(FieldTest, PolynomialPathAgreesWithTables) {
  FieldOptions plain;
  plain.log_table_cap = 0;
  for (const Shape s : std::vector<Shape>{{3, 4}, {2, 7}, {5, 2}}) {
    const FieldPtr tables = Field::Build(s.p, s.m);
    const FieldPtr poly = Field::Build(s.p, s.m, plain);
    ASSERT_TRUE(tables->has_log_table());
    ASSERT_FALSE(poly->has_log_table());
    EXPECT_EQ(tables->modulus(), poly->modulus());
    EXPECT_EQ(tables->generator(), poly->generator());
    for (uint32_t x = 0; x < tables->q(); ++x) {
      const Element ex(x);
      const Element ey((x * 7 + 3) % tables->q());
      ASSERT_EQ(tables->Mul(ex, ey), poly->Mul(ex, ey));
      ASSERT_EQ(tables->Pow(ex, 37), poly->Pow(ex, 37));
      ASSERT_EQ(tables->Trace(ex), poly->Trace(ex));
      if (x != 0) {
        ASSERT_EQ(tables->Log(ex), poly->Log(ex));
      }
    }
  }
}

TEST(FieldTest, BuildIsDeterministic) {
  const FieldPtr a = Field::Build(5, 4);
  const FieldPtr b = Field::Build(5, 4);
  EXPECT_EQ(a->modulus(), b->modulus());
  EXPECT_EQ(a->generator(), b->generator());
  for (uint32_t x = 0; x < a->q(); x += 17) {
    EXPECT_EQ(a->ToString(Element(x)), b->ToString(Element(x)));
  }
}

TEST(FieldTest, ParsesLiterals) {
  const FieldPtr F = Field::Build(3, 2);
  EXPECT_EQ(F->ParseLiteral("0"), F->zero());
  EXPECT_EQ(F->ParseLiteral("1"), F->one());
  EXPECT_EQ(F->ParseLiteral("5"), F->FromInteger(2));
  EXPECT_EQ(F->ParseLiteral("g"), F->generator());
  EXPECT_EQ(F->ParseLiteral("g^3"), F->Pow(F->generator(), 3));
  EXPECT_EQ(F->ParseLiteral("g^-1"), F->Inv(F->generator()));
  EXPECT_EQ(F->ParseLiteral("g^8"), F->one());
  EXPECT_EQ(F->ToString(F->ParseLiteral("g^5")), "g^5");
  EXPECT_EQ(F->ToString(F->zero()), "0");
  EXPECT_THROW(F->ParseLiteral(""), ParseError);
  EXPECT_THROW(F->ParseLiteral("h"), ParseError);
  EXPECT_THROW(F->ParseLiteral("g3"), ParseError);
  try {
    F->ParseLiteral("g^x");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(FieldTest, CoordinatesRoundTrip) {
  const FieldPtr F = Field::Build(5, 3);
  for (uint32_t x = 0; x < F->q(); ++x) {
    const auto coords = F->Coords(Element(x));
    ASSERT_EQ(F->FromCoords(coords), Element(x));
  }
  EXPECT_EQ(F->CoordString(F->one()), "[1,0,0]");
}

TEST(SubfieldTowerTest, SubfieldOfSize16InsideF256) {
  const SubfieldTower T = SubfieldTower::Build(16, 2);
  const Field& F = *T.big();
  EXPECT_EQ(F.q(), 256u);
  EXPECT_EQ(T.base_degree(), 4u);
  const auto sub = T.SubfieldElements();
  ASSERT_EQ(sub.size(), 16u);
  std::set<Element> set(sub.begin(), sub.end());
  EXPECT_EQ(set.size(), 16u);
  for (Element a : sub) {
    EXPECT_TRUE(T.InSubfield(a));
    for (Element b : sub) {
      EXPECT_TRUE(set.count(F.Add(a, b)));
      EXPECT_TRUE(set.count(F.Mul(a, b)));
    }
  }
  uint64_t inside = 0;
  for (uint32_t x = 0; x < F.q(); ++x) inside += T.InSubfield(Element(x));
  EXPECT_EQ(inside, 16u);
}

// Tr_{Q/p} = Tr_{q/p} o Tr_{Q/q}.
TEST(SubfieldTowerTest, TraceIsTransitive) {
  for (const auto& [q, m] : std::vector<std::pair<uint64_t, uint32_t>>{
           {16, 2}, {4, 3}, {9, 2}, {3, 4}, {2, 8}}) {
    const SubfieldTower T = SubfieldTower::Build(q, m);
    const Field& F = *T.big();
    for (uint32_t x = 0; x < F.q(); ++x) {
      const Element down = T.TraceToSubfield(Element(x));
      ASSERT_TRUE(T.InSubfield(down));
      ASSERT_EQ(T.SubfieldTraceToPrime(down), F.Trace(Element(x)));
    }
  }
}

TEST(SubfieldTowerTest, RejectsInconsistentTower) {
  EXPECT_THROW(SubfieldTower::Build(6, 2), Error);
  EXPECT_THROW(SubfieldTower::Build(16, 0), Error);
}

TEST(NumberTheoryTest, Radical) {
  EXPECT_EQ(Radical(12), 6u);
  EXPECT_EQ(Radical(1), 1u);
  EXPECT_EQ(Radical(243), 3u);
  EXPECT_EQ(Radical(6), 6u);
}

TEST(NumberTheoryTest, FactorizeAgreesWithTrialDivision) {
  for (uint64_t n = 2; n < 3000; ++n) {
    uint64_t product = 1;
    uint64_t rest = n;
    for (const auto& [prime, k] : Factorize(n)) {
      ASSERT_TRUE(IsPrime(prime));
      for (uint32_t i = 0; i < k; ++i) product *= prime;
      ASSERT_EQ(Valuation(n, prime), k);
      while (rest % prime == 0) rest /= prime;
    }
    ASSERT_EQ(product, n);
    ASSERT_EQ(rest, 1u);
    uint64_t least = 2;
    while (n % least != 0) ++least;
    ASSERT_EQ(LeastPrimeFactor(n), least);
  }
}

TEST(NumberTheoryTest, PrimePowers) {
  EXPECT_EQ(PrimePowerDecomposition(243), (std::pair<uint64_t, uint32_t>{3, 5}));
  EXPECT_EQ(PrimePowerDecomposition(2), (std::pair<uint64_t, uint32_t>{2, 1}));
  EXPECT_EQ(PrimePowerDecomposition(12).first, 0u);
  EXPECT_EQ(Valuation(96, 2), 5u);
  EXPECT_THROW(CheckedPow(10, 30), Error);
  EXPECT_EQ(Mod(-3, 26), 23u);
}

}  // namespace
}  // namespace indexbound
