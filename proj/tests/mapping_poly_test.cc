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
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "indexbound/charsum.h"
#include "indexbound/error.h"

namespace indexbound {
namespace {

SparseMappingPoly Poly(const FieldPtr& F, const std::string& expr,
                       Element a = Element(0)) {
  ParamBindings params;
  if (!a.is_zero()) params["a"] = a;
  return ParsePoly(expr, F, params);
}

// Evaluates sum coeff x^e by repeated multiplication, without reduction.
Element RawEvaluate(const Field& F, const std::vector<Term>& raw, Element x) {
  Element sum = F.zero();
  for (const Term& t : raw) {
    Element power = F.one();
    for (uint64_t i = 0; i < t.exponent; ++i) power = F.Mul(power, x);
    sum = F.Add(sum, F.Mul(t.coeff, power));
  }
  return sum;
}

TEST(ParsePolyTest, BinomialWithParameter) {
  const FieldPtr F = Field::Build(3, 3);
  const Element g = F->generator();
  const SparseMappingPoly f = Poly(F, "x^25 + a*x^4", g);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms()[0], (Term{4, g}));
  EXPECT_EQ(f.terms()[1], (Term{25, F->one()}));
  EXPECT_TRUE(f.constant().is_zero());
  EXPECT_EQ(f.degree(), 25u);
  EXPECT_EQ(f.lowest_exponent(), 4u);
}

TEST(ParsePolyTest, CharacteristicTwoCancellation) {
  const FieldPtr F = Field::Build(2, 2);
  const SparseMappingPoly f = Poly(F, "x^2 + x^2");
  EXPECT_TRUE(f.terms().empty());
  EXPECT_TRUE(f.is_constant());
}

TEST(ParsePolyTest, CoefficientPowerAndConstant) {
  const FieldPtr F = Field::Build(2, 8);
  const SparseMappingPoly f = Poly(F, "g^3*x^13 + 1");
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.terms()[0], (Term{13, F->GeneratorPower(3)}));
  EXPECT_EQ(f.constant(), F->one());
  EXPECT_EQ(f.ToString(), "g^3*x^13 + g^0");
}

TEST(ParsePolyTest, WhitespaceAndBareTerms) {
  const FieldPtr F = Field::Build(5, 2);
  EXPECT_EQ(Poly(F, " x ^ 3+2 * x+g "), Poly(F, "x^3 + 2*x + g"));
  EXPECT_EQ(Poly(F, "x").terms(), (std::vector<Term>{{1, F->one()}}));
  EXPECT_EQ(Poly(F, "0").is_constant(), true);
}

TEST(ParsePolyTest, SyntaxErrorPosition) {
  const FieldPtr F = Field::Build(3, 3);
  try {
    Poly(F, "x^^2");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
  EXPECT_THROW(Poly(F, "x^2 +"), ParseError);
  EXPECT_THROW(Poly(F, "x^-2"), ParseError);
  EXPECT_THROW(Poly(F, "x^2 * x"), ParseError);
}

TEST(ParsePolyTest, UnboundParameter) {
  const FieldPtr F = Field::Build(3, 3);
  try {
    Poly(F, "x^2 + b*x");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
  EXPECT_EQ(PolyParameterNames("x^25 + a*x^4 + b"),
            (std::vector<std::string>{"a", "b"}));
}

TEST(ReduceTest, ExponentRule) {
  EXPECT_EQ(ReduceExponent(27, 27), 1u);
  EXPECT_EQ(ReduceExponent(26, 27), 26u);
  EXPECT_EQ(ReduceExponent(0, 27), 0u);
  for (uint64_t s = 1; s < 27; ++s) EXPECT_EQ(ReduceExponent(s * 27, 27), s);
}

TEST(ReduceTest, PointwiseAgreementOnF27) {
  const FieldPtr F = Field::Build(3, 3);
  const std::vector<Term> raw{{30, F->one()}, {4, F->one()}};
  const SparseMappingPoly f = ReduceAsMapping(F, raw);
  ASSERT_EQ(f.terms().size(), 1u);  // x^30 -> x^4, so 2 x^4
  EXPECT_EQ(f.terms()[0], (Term{4, F->FromInteger(2)}));
  for (uint32_t x = 0; x < F->q(); ++x) {
    EXPECT_EQ(f.Evaluate(Element(x)), RawEvaluate(*F, raw, Element(x)));
  }
}

TEST(ReduceTest, RandomRawPolynomialsAgreePointwise) {
  std::mt19937 rng(3);
  for (const auto& [p, m] : std::vector<std::pair<uint64_t, uint32_t>>{
           {2, 4}, {3, 2}, {5, 2}, {2, 5}}) {
    const FieldPtr F = Field::Build(p, m);
    std::uniform_int_distribution<uint64_t> exp(0, 3 * F->q());
    std::uniform_int_distribution<uint32_t> coeff(0, F->q() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Term> raw;
      for (int t = 0; t < 4; ++t) raw.push_back({exp(rng), Element(coeff(rng))});
      const SparseMappingPoly f = ReduceAsMapping(F, raw);
      for (size_t i = 1; i < f.terms().size(); ++i) {
        ASSERT_LT(f.terms()[i - 1].exponent, f.terms()[i].exponent);
      }
      for (const Term& t : f.terms()) {
        ASSERT_GE(t.exponent, 1u);
        ASSERT_LE(t.exponent, F->q() - 1);
        ASSERT_FALSE(t.coeff.is_zero());
      }
      for (uint32_t x = 0; x < F->q(); ++x) {
        ASSERT_EQ(f.Evaluate(Element(x)), RawEvaluate(*F, raw, Element(x)));
      }
    }
  }
}

TEST(EvaluateTest, Basics) {
  const FieldPtr F27 = Field::Build(3, 3);
  EXPECT_EQ(Poly(F27, "g^5").Evaluate(F27->generator()), F27->GeneratorPower(5));
  EXPECT_EQ(Poly(F27, "x^25 + a*x^4", F27->generator()).Evaluate(F27->zero()),
            F27->zero());
  const FieldPtr F256 = Field::Build(2, 8);
  EXPECT_EQ(Poly(F256, "x^13 + x").Evaluate(F256->one()), F256->zero());
}

TEST(IndexTest, Examples) {
  const FieldPtr F27 = Field::Build(3, 3);
  const FieldPtr F64 = Field::Build(2, 6);
  const Element a27 = F27->GeneratorPower(4);
  EXPECT_EQ(ComputeIndex(Poly(F27, "x^25 + a*x^4", a27)).index, 26u);
  EXPECT_EQ(ComputeIndex(Poly(F64, "x^41 + a*x^5", F64->generator())).index,
            7u);
  EXPECT_EQ(ComputeIndex(Poly(F27, "x^13 + a*x^7", a27)).index, 13u);
  const CanonicalForm form = ComputeIndex(Poly(F27, "x^13 + a*x^7 + 1", a27));
  EXPECT_EQ(form.lowest, 7u);
  EXPECT_EQ(form.constant, F27->one());
  EXPECT_THROW(ComputeIndex(Poly(F27, "g")), Error);
}

TEST(IndexTest, IndexMatchesGapDefinition) {
  std::mt19937 rng(5);
  const FieldPtr F = Field::Build(3, 4);
  std::uniform_int_distribution<uint64_t> exp(1, F->q() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> raw;
    for (int t = 0; t < 3; ++t) raw.push_back({exp(rng), F->GeneratorPower(t)});
    const SparseMappingPoly f = ReduceAsMapping(F, raw);
    if (f.is_constant()) continue;
    uint64_t g = F->q() - 1;
    for (const Term& t : f.terms()) g = std::gcd(g, t.exponent - f.lowest_exponent());
    const CanonicalForm form = ComputeIndex(f);
    EXPECT_EQ(form.index, (F->q() - 1) / g);
    EXPECT_EQ((F->q() - 1) % form.index, 0u);
    // Expanding the canonical form gives back f.
    EXPECT_EQ(Expand(form, F), f);
  }
}

TEST(CosetTest, Examples) {
  const FieldPtr F27 = Field::Build(3, 3);
  EXPECT_EQ(CyclotomicCosetOf(0, *F27).members, (std::vector<uint64_t>{0}));
  const CyclotomicCoset c25 = CyclotomicCosetOf(25, *F27);
  EXPECT_EQ(c25.members, (std::vector<uint64_t>{17, 23, 25}));
  EXPECT_EQ(c25.leader, 17u);
  EXPECT_EQ(c25.modulus, 26u);
  const FieldPtr F256 = Field::Build(2, 8);
  const CyclotomicCoset c13 = CyclotomicCosetOf(13, *F256);
  EXPECT_EQ(c13.members,
            (std::vector<uint64_t>{13, 26, 52, 67, 104, 134, 161, 208}));
  EXPECT_EQ(c13.leader, 13u);
}

TEST(CosetTest, ClosedUnderMultiplicationByP) {
  const FieldPtr F = Field::Build(2, 8);
  for (uint64_t i = 0; i < 255; ++i) {
    const CyclotomicCoset c = CyclotomicCosetOf(i, *F);
    EXPECT_EQ(c.leader, c.members.front());
    EXPECT_EQ(F->m() % c.members.size(), 0u);
    for (uint64_t e : c.members) {
      EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(),
                                     e * 2 % 255));
    }
  }
}

TEST(FrobeniusShiftTest, Examples) {
  const FieldPtr F27 = Field::Build(3, 3);
  const Element a = F27->GeneratorPower(5);
  const SparseMappingPoly f = Poly(F27, "x^25 + a*x^4", a);
  EXPECT_EQ(FrobeniusShift(f, ShiftVector{{0, 0, 0}}), f);
  EXPECT_EQ(FrobeniusShift(f, ShiftVector{{0, 1, 0}}),
            Poly(F27, "x^25 + a*x^12", F27->Pow(a, 3)));

  const FieldPtr F256 = Field::Build(2, 8);
  const Element b = F256->GeneratorPower(7);
  EXPECT_EQ(FrobeniusShift(Poly(F256, "x^13 + a*x", b), ShiftVector{{0, 0, 2}}),
            Poly(F256, "x^52 + a*x", b));
  EXPECT_THROW(FrobeniusShift(f, ShiftVector{{0, 0}}), Error);
  EXPECT_THROW(FrobeniusShift(f, ShiftVector{{0, 3, 0}}), Error);
}

TEST(FrobeniusShiftTest, ComplementaryShiftUndoes) {
  const FieldPtr F = Field::Build(2, 6);
  const SparseMappingPoly f = Poly(F, "x^41 + g^3*x^5 + x^3 + g");
  const uint32_t m = F->m();
  auto image = [&](uint64_t e, uint32_t times) {
    for (uint32_t k = 0; k < times; ++k) e = e * 2 % 63;
    return e == 0 ? 63 : e;
  };
  int checked = 0;
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      const ShiftVector v{{j, i, j, (i + j) % m}};
      const SparseMappingPoly shifted = FrobeniusShift(f, v);
      if (shifted.terms().size() != f.terms().size()) continue;
      // Complement of the shift that produced each monomial of `shifted`.
      ShiftVector back{{(m - v.entries[0]) % m}};
      for (const Term& term : shifted.terms()) {
        for (size_t t = 0; t < f.terms().size(); ++t) {
          if (image(f.terms()[t].exponent, v.entries[t + 1]) == term.exponent) {
            back.entries.push_back((m - v.entries[t + 1]) % m);
          }
        }
      }
      ASSERT_EQ(back.entries.size(), shifted.terms().size() + 1);
      EXPECT_EQ(FrobeniusShift(shifted, back), f);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

// Tr(pi^v(f)(x)) = Tr(f(x)) pointwise, so the trace multisets agree.
TEST(FrobeniusShiftTest, TraceValuesArePreservedPointwise) {
  for (const auto& [p, m] : std::vector<std::pair<uint64_t, uint32_t>>{
           {3, 3}, {2, 6}, {5, 2}, {3, 5}, {2, 12}}) {
    const FieldPtr F = Field::Build(p, m);
    const SparseMappingPoly f =
        Poly(F, "x^25 + g^4*x^4 + g^7*x^2", F->GeneratorPower(1));
    std::mt19937 rng(static_cast<unsigned>(p * 100 + m));
    std::uniform_int_distribution<uint32_t> pick(0, m - 1);
    for (int trial = 0; trial < 8; ++trial) {
      ShiftVector v;
      v.entries.resize(f.terms().size() + 1);
      for (uint32_t& e : v.entries) e = pick(rng);
      const SparseMappingPoly g = FrobeniusShift(f, v);
      if (g.terms().size() == f.terms().size()) {
        for (uint32_t x = 0; x < F->q(); ++x) {
          ASSERT_EQ(F->Trace(g.Evaluate(Element(x))),
                    F->Trace(f.Evaluate(Element(x))));
        }
      }
      EXPECT_EQ(ComputeTraceDistribution(g, F->one()),
                ComputeTraceDistribution(f, F->one()));
    }
  }
}

TEST(FrobeniusShiftTest, ShiftedExponentsStayInTheirCosets) {
  const FieldPtr F = Field::Build(3, 4);
  const SparseMappingPoly f = Poly(F, "x^44 + g*x^28 + x^7");
  for (uint32_t j = 0; j < F->m(); ++j) {
    const SparseMappingPoly g = FrobeniusShift(f, ShiftVector{{0, j, j, j}});
    for (size_t t = 0; t < f.terms().size(); ++t) {
      const CyclotomicCoset c = CyclotomicCosetOf(f.terms()[t].exponent, *F);
      uint64_t e = f.terms()[t].exponent;
      for (uint32_t k = 0; k < j; ++k) e = e * 3 % 80;
      EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), e));
    }
    (void)g;
  }
  // Every coset member is reached by some shift.
  const CyclotomicCoset c = CyclotomicCosetOf(7, *F);
  std::set<uint64_t> reached;
  for (uint32_t j = 0; j < F->m(); ++j) {
    reached.insert(FrobeniusShift(Poly(F, "x^7"), ShiftVector{{0, j}})
                       .terms()[0]
                       .exponent);
  }
  EXPECT_EQ(std::vector<uint64_t>(reached.begin(), reached.end()), c.members);
}

TEST(VanishingTest, ScalingDoesNotChangeCount) {
  const FieldPtr F = Field::Build(2, 8);
  for (uint32_t k = 0; k < 255; k += 11) {
    const Element a = F->GeneratorPower(k);
    const std::vector<Term> h{{0, a}, {1, F->one()}};
    const uint64_t base = CountVanishing(h, 5, *F);
    for (uint32_t s = 1; s < 255; s += 37) {
      const Element c = F->GeneratorPower(s);
      const std::vector<Term> scaled{{0, F->Mul(c, a)}, {1, c}};
      EXPECT_EQ(CountVanishing(scaled, 5, *F), base);
    }
    // y + a vanishes at a 5th root of unity iff a^5 = 1 (since -1 = 1).
    EXPECT_EQ(base, F->Pow(a, 5) == F->one() ? 1u : 0u);
  }
}

TEST(VanishingTest, ConstantAssociatedPolynomial) {
  const FieldPtr F = Field::Build(3, 3);
  EXPECT_EQ(CountVanishing(std::vector<Term>{{0, F->one()}}, 1, *F), 0u);
  const std::vector<Term> h{{0, F->one()}, {1, F->FromInteger(2)}};
  EXPECT_EQ(CountVanishing(h, 1, *F), 1u);  // 1 + 2 = 0
}

TEST(MinimizeIndexTest, ExampleF27) {
  const FieldPtr F = Field::Build(3, 3);
  for (uint64_t k = 0; k < 26; ++k) {
    const Element a = F->GeneratorPower(k);
    const EquivalentForm w =
        MinimizeIndex(Poly(F, "x^25 + a*x^4", a), F->one());
    EXPECT_EQ(w.index, 2u);
    const Element a3 = F->Pow(a, 3);
    const bool special = a3 == F->one() || a3 == F->Neg(F->one());
    EXPECT_EQ(w.vanishing, special ? 1u : 0u) << "a = g^" << k;
    EXPECT_EQ(w.RadiusCoefficient(), special ? 1u : 2u);
    EXPECT_EQ(FrobeniusShift(Poly(F, "x^25 + a*x^4", a), w.shift),
              w.representative);
  }
}

TEST(MinimizeIndexTest, ExampleF256) {
  const FieldPtr F = Field::Build(2, 8);
  const EquivalentForm w =
      MinimizeIndex(Poly(F, "x^13 + a*x", F->one()), F->one());
  EXPECT_EQ(w.index, 5u);
  EXPECT_EQ(w.vanishing, 1u);
}

TEST(MinimizeIndexTest, NoShiftHelps) {
  const FieldPtr F = Field::Build(3, 3);
  const SparseMappingPoly f = Poly(F, "x^19 + a*x^4", F->generator());
  const EquivalentForm w = MinimizeIndex(f, F->one());
  EXPECT_EQ(w.index, 26u);
  EXPECT_LE(w.index, ComputeIndex(f).index);
}

TEST(MinimizeIndexTest, IndependentOfTheChosenRootOfUnity) {
  // n0 counts roots of h among all l-th roots of unity; use the root
  // xi^j for j coprime to l and compare.
  const FieldPtr F = Field::Build(2, 8);
  for (uint32_t k = 0; k < 255; k += 4) {
    const Element a = F->GeneratorPower(k);
    const EquivalentForm w = MinimizeIndex(Poly(F, "x^13 + a*x", a), F->one());
    const uint64_t l = w.index;
    const Element xi = F->GeneratorPower((255 / l) * 2);  // gcd(2, 5) = 1
    uint64_t count = 0;
    for (uint64_t i = 0; i < l; ++i) {
      const Element y = F->Pow(xi, static_cast<int64_t>(i));
      Element value = F->zero();
      for (const Term& t : w.associated) {
        value = F->Add(value, F->Mul(t.coeff, F->Pow(y, t.exponent)));
      }
      count += value.is_zero();
    }
    EXPECT_EQ(count, w.vanishing);
  }
}

TEST(MinimizeIndexTest, ScalingByCharacter) {
  // f and c f have the same index structure; the witness uses c f.
  const FieldPtr F = Field::Build(3, 3);
  const SparseMappingPoly f = Poly(F, "x^25 + a*x^4", F->one());
  const Element c = F->GeneratorPower(3);
  const EquivalentForm w = MinimizeIndex(f, c);
  EXPECT_EQ(w.index, 2u);
  EXPECT_EQ(FrobeniusShift(f.Scaled(c), w.shift), w.representative);
}

TEST(MinimizeIndexTest, BudgetIsEnforced) {
  const FieldPtr F = Field::Build(2, 8);
  SearchOptions tight;
  tight.budget = 10;
  try {
    MinimizeIndex(Poly(F, "x^13 + x^7 + x"), F->one(), tight);
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(MinimizeDegreeTest, Examples) {
  const FieldPtr F = Field::Build(3, 3);
  for (uint64_t k = 0; k < 26; k += 5) {
    const Element a = F->GeneratorPower(k);
    EXPECT_EQ(MinimizeDegree(Poly(F, "x^19 + a*x^4", a), F->one()).degree, 5u);
    EXPECT_EQ(MinimizeDegree(Poly(F, "x^10 + a*x^5", a), F->one()).degree, 5u);
  }
}

// x^(s p^(m-1)) + a x^r with p < s < sqrt(q), gcd(s, p) = 1, r < s.
TEST(MinimizeDegreeTest, HighFrobeniusFamily) {
  struct Case {
    uint64_t p;
    uint32_t m;
    uint64_t s;
    uint64_t r;
  };
  for (const Case c : std::vector<Case>{{3, 4, 4, 3}, {3, 4, 8, 5}, {5, 3, 6, 2},
                                        {2, 8, 3, 1}, {2, 8, 15, 7}}) {
    const FieldPtr F = Field::Build(c.p, c.m);
    uint64_t e = c.s;
    for (uint32_t i = 0; i + 1 < c.m; ++i) e *= c.p;
    std::vector<Term> raw{{e, F->one()}, {c.r, F->generator()}};
    const SparseMappingPoly f = ReduceAsMapping(F, raw);
    const EquivalentForm w = MinimizeDegree(f, F->one());
    EXPECT_EQ(w.degree, c.s) << c.p << "^" << c.m << " s = " << c.s;
    EXPECT_TRUE(w.degree_coprime_to_p);
    EXPECT_LE(w.degree, f.degree());
    EXPECT_EQ(w.representative.degree(), w.degree);
  }
}

TEST(ClassPropertiesTest, RandomPolynomials) {
  std::mt19937 rng(17);
  for (const auto& [p, m] : std::vector<std::pair<uint64_t, uint32_t>>{
           {2, 6}, {3, 4}, {5, 3}, {2, 8}}) {
    const FieldPtr F = Field::Build(p, m);
    std::uniform_int_distribution<uint64_t> exp(1, F->q() - 1);
    std::uniform_int_distribution<uint32_t> coeff(1, F->q() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Term> raw;
      for (int t = 0; t < 3; ++t) raw.push_back({exp(rng), Element(coeff(rng))});
      const SparseMappingPoly f = ReduceAsMapping(F, raw);
      if (f.is_constant()) continue;
      const EquivalentForm li = MinimizeIndex(f, F->one());
      const EquivalentForm nd = MinimizeDegree(f, F->one());
      EXPECT_LE(li.index, ComputeIndex(f).index);
      EXPECT_LE(nd.degree, f.degree());
      if (!li.representative.is_constant()) {
        EXPECT_EQ(ComputeIndex(li.representative).index, li.index);
      }
      EXPECT_EQ(nd.representative.degree(), nd.degree);
      EXPECT_LE(li.vanishing, li.index);
      EXPECT_EQ((F->q() - 1) % li.index, 0u);
      // Brute force over every shift: nothing beats the reported index.
      ForEachRepresentative(f, F->one(), {},
                            [&](const ShiftVector&, const SparseMappingPoly& g) {
                              if (g.is_constant()) return;
                              EXPECT_GE(ComputeIndex(g).index, li.index);
                              EXPECT_GE(g.degree(), nd.degree);
                            });
    }
  }
}

TEST(GenericIndexTest, AgreesWithSearchOnGenericCoefficients) {
  const FieldPtr F = Field::Build(2, 6);
  const std::vector<uint64_t> exps{5, 41};
  const GenericIndexResult g = MinimizeIndexGeneric(exps, *F);
  EXPECT_EQ(g.index, 3u);
  EXPECT_EQ(g.radius_coeff, 3u);
}

}  // namespace
}  // namespace indexbound
