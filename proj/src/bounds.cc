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

#include "indexbound/bounds.h"

#include <numeric>
#include <sstream>

#include "indexbound/error.h"
#include "indexbound/number_theory.h"

namespace indexbound {
namespace {

BoundInterval SumInterval(std::string name, const Field& field) {
  BoundInterval b;
  b.name = std::move(name);
  b.radicand = field.q();
  b.reference = Rational(0);
  b.trivial_radius = MakeRational(field.q());
  return b;
}

BoundInterval CurveInterval(std::string name, const SubfieldTower& tower) {
  BoundInterval b;
  b.name = std::move(name);
  const uint64_t big_q = tower.big()->q();
  b.radicand = big_q;
  b.reference = MakeRational(big_q);
  b.trivial_radius = MakeRational((tower.base_q() - 1) * big_q);
  return b;
}

BoundInterval Inapplicable(BoundInterval b, std::string reason) {
  b.applicable = false;
  b.reason = std::move(reason);
  return b;
}

// e p^k as a mapping exponent, e in [1, q-1].
uint64_t ShiftExponent(uint64_t e, uint32_t k, const Field& field) {
  const uint64_t order = field.q() - 1;
  uint64_t x = e % order;
  for (uint32_t i = 0; i < k; ++i) x = x * field.p() % order;
  return x == 0 ? order : x;
}

// Whether w is a d-th power in F_q^* (d taken modulo q-1).
bool IsPower(Element w, uint64_t d, const Field& field) {
  if (w.is_zero()) return false;
  const uint64_t order = field.q() - 1;
  return field.Log(w) % std::gcd(d % order, order) == 0;
}

// -c^(p^k - 1) a^(p^k): the constant whose d-th-root existence decides
// whether the shifted binomial's associated polynomial vanishes.
Element RootTarget(Element a, Element c, uint32_t k, const Field& field) {
  const Element c_part = field.Mul(field.Frobenius(c, k), field.Inv(c));
  return field.Neg(field.Mul(c_part, field.Frobenius(a, k)));
}

std::string Describe(const EquivalentForm& form) {
  std::ostringstream out;
  out << "index " << form.index << ", lowest exponent " << form.lowest
      << ", vanishing " << form.vanishing << ", shift "
      << form.shift.ToString();
  return out.str();
}

}  // namespace

std::string ToString(Classification c) {
  switch (c) {
    case Classification::kInformative:
      return "informative";
    case Classification::kTrivial:
      return "trivial";
    case Classification::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

bool BoundInterval::informative() const {
  if (!applicable) return false;
  const Rational offset = abs(center - reference);
  const Rational slack = trivial_radius - offset;
  if (slack <= 0) return false;
  const BigInt k(radius_coeff);
  return slack * slack > Rational(k * k * BigInt(radicand));
}

Classification BoundInterval::classification() const {
  if (!applicable) return Classification::kInapplicable;
  return informative() ? Classification::kInformative
                       : Classification::kTrivial;
}

std::string BoundInterval::RenderedRadius() const {
  return RenderRadius(radius_coeff, radicand);
}

std::string RenderRadius(uint64_t radius_coeff, uint64_t radicand) {
  if (radius_coeff == 0) return "0";
  const auto [p, e] = PrimePowerDecomposition(radicand);
  if (p == 0) {
    return std::to_string(radius_coeff) + "√" + std::to_string(radicand);
  }
  const BigInt whole = BigInt(radius_coeff) * pow(BigInt(p), e / 2);
  if (e % 2 == 0) return whole.str();
  return (whole == 1 ? std::string() : whole.str()) + "√" + std::to_string(p);
}

Containment CheckContainment(const BoundInterval& b,
                             const TraceDistribution& constant_free) {
  Containment result;
  const BigInt k(b.radius_coeff);
  const Rational rhs(k * k * BigInt(b.radicand));
  result.rhs = static_cast<long double>(rhs);
  const SquaredDistance distance = DistanceSquared(constant_free, b.center);
  result.lhs = distance.approx;
  if (distance.exact) {
    result.exact = true;
    result.holds = *distance.exact <= rhs;
  } else {
    const auto q = static_cast<long double>(constant_free.total());
    result.holds =
        distance.approx <= result.rhs + kContainmentTolerance * q * q;
  }
  return result;
}

Containment CheckContainment(const BoundInterval& b, uint64_t points) {
  Containment result;
  const BigInt k(b.radius_coeff);
  const Rational rhs(k * k * BigInt(b.radicand));
  const Rational diff = MakeRational(points) - b.center;
  const Rational lhs = diff * diff;
  result.exact = true;
  result.holds = lhs <= rhs;
  result.lhs = static_cast<long double>(lhs);
  result.rhs = static_cast<long double>(rhs);
  return result;
}

BoundInterval WeilBound(const SparseMappingPoly& f) {
  const Field& F = *f.field();
  BoundInterval b = SumInterval("weil", F);
  if (f.is_constant()) return Inapplicable(b, "constant polynomial");
  const uint64_t n = f.degree();
  if (std::gcd(n, F.p()) != 1) {
    return Inapplicable(b, "p divides the degree " + std::to_string(n));
  }
  b.applicable = true;
  b.radius_coeff = n - 1;
  b.reason = "degree " + std::to_string(n);
  return b;
}

WanWangResult WanWangBound(const SparseMappingPoly& f, Element c) {
  const Field& F = *f.field();
  WanWangResult result;
  result.interval = SumInterval("wan-wang", F);
  const SparseMappingPoly scaled = f.Scaled(c);
  if (scaled.is_constant()) {
    result.interval = Inapplicable(result.interval, "constant polynomial");
    return result;
  }
  result.form = ComputeIndex(scaled);
  result.vanishing = CountVanishing(result.form, F);
  const uint64_t l = result.form.index;
  const uint64_t n0 = result.vanishing;
  BoundInterval& b = result.interval;
  b.applicable = true;
  b.center = MakeRational(F.q() * n0, l);
  b.radius_coeff = (l - n0) * std::gcd(result.form.lowest, (F.q() - 1) / l);
  b.reason = "index " + std::to_string(l) + ", lowest exponent " +
             std::to_string(result.form.lowest) + ", vanishing " +
             std::to_string(n0);
  return result;
}

BoundInterval IndexIntervalFor(const EquivalentForm& form,
                               const std::string& name) {
  const Field& F = *form.representative.field();
  BoundInterval b = SumInterval(name, F);
  b.applicable = true;
  b.center = MakeRational(F.q() * form.vanishing, form.index);
  b.radius_coeff = form.RadiusCoefficient();
  b.reason = Describe(form);
  return b;
}

ImprovedResult ImprovedBound(const SparseMappingPoly& f, Element c,
                             const SearchOptions& search, bool exhaustive) {
  ImprovedResult result;
  if (f.is_constant()) {
    result.interval = Inapplicable(SumInterval("improved", *f.field()),
                                   "constant polynomial");
    return result;
  }
  result.witness = MinimizeIndex(f, c, search);
  result.interval = IndexIntervalFor(result.witness, "improved");
  if (!exhaustive) return result;

  ForEachRepresentative(
      f, c, search, [&](const ShiftVector& shift, const SparseMappingPoly& rep) {
        BoundInterval b = IndexIntervalFor(
            DescribeRepresentative(rep, shift, c), "class-member");
        for (const BoundInterval& seen : result.class_intervals) {
          if (seen.center == b.center && seen.radius_coeff == b.radius_coeff) {
            return;
          }
        }
        result.class_intervals.push_back(std::move(b));
      });
  for (const BoundInterval& b : result.class_intervals) {
    if (!result.tightest || b.radius_coeff < result.tightest->radius_coeff ||
        (b.radius_coeff == result.tightest->radius_coeff &&
         b.center < result.tightest->center)) {
      result.tightest = b;
    }
  }
  result.tightest->name = "class-tightest";
  return result;
}

ReducedWeilResult ReducedWeilBound(const SparseMappingPoly& f, Element c,
                                   const SearchOptions& search) {
  ReducedWeilResult result;
  BoundInterval b = SumInterval("reduced-weil", *f.field());
  if (f.is_constant()) {
    result.interval = Inapplicable(b, "constant polynomial");
    return result;
  }
  result.witness = MinimizeDegree(f, c, search);
  const uint64_t n_star = result.witness.degree;
  if (n_star == 0) {
    result.interval =
        Inapplicable(b, "class contains a constant representative");
  } else if (!result.witness.degree_coprime_to_p) {
    result.interval = Inapplicable(
        b, "p divides the minimal degree " + std::to_string(n_star));
  } else {
    b.applicable = true;
    b.radius_coeff = n_star - 1;
    b.reason = "minimal degree " + std::to_string(n_star) + ", shift " +
               result.witness.shift.ToString();
    result.interval = std::move(b);
  }
  return result;
}

BinomialResult BinomialBound(uint64_t n, uint64_t r, Element a,
                             const FieldPtr& field, Element c) {
  const Field& F = *field;
  const uint64_t order = F.q() - 1;
  if (r < 1 || r >= n || n > order) {
    throw Error(ErrorKind::kInvalidArgument,
                "binomial bound needs 1 <= r < n <= q-1, got n = " +
                    std::to_string(n) + ", r = " + std::to_string(r));
  }
  if (a.is_zero() || c.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument,
                "binomial bound needs nonzero a and c");
  }
  BinomialResult result;
  uint64_t best_gcd = 0;
  int64_t best_diff = 0;
  for (uint32_t k = 0; k < F.m(); ++k) {
    const uint64_t shifted = ShiftExponent(r, k, F);
    const int64_t diff = static_cast<int64_t>(n) - static_cast<int64_t>(shifted);
    const uint64_t g = std::gcd(static_cast<uint64_t>(diff < 0 ? -diff : diff),
                                order);
    if (g > best_gcd) {
      best_gcd = g;
      best_diff = diff;
      result.k = k;
      result.r_star = shifted;
    }
  }
  result.index = order / best_gcd;
  result.t = std::gcd(std::gcd(n, r), order);
  result.root_exists =
      IsPower(RootTarget(a, c, result.k, F), Mod(best_diff, order), F);

  BoundInterval& b = result.interval;
  b = SumInterval("binomial", F);
  b.applicable = true;
  if (result.root_exists) {
    b.center = MakeRational(F.q(), result.index);
    b.radius_coeff = (result.index - 1) * result.t;
  } else {
    b.center = Rational(0);
    b.radius_coeff = result.index * result.t;
  }
  b.reason = "index " + std::to_string(result.index) + ", r* = " +
             std::to_string(result.r_star) + ", t = " +
             std::to_string(result.t) +
             (result.root_exists ? ", root exists" : ", no root");
  return result;
}

std::optional<BinomialShape> MatchBinomial(const SparseMappingPoly& f) {
  if (f.terms().size() != 2) return std::nullopt;
  const Field& F = *f.field();
  BinomialShape shape;
  shape.n = f.terms()[1].exponent;
  shape.r = f.terms()[0].exponent;
  shape.lead = f.terms()[1].coeff;
  shape.a = F.Mul(f.terms()[0].coeff, F.Inv(shape.lead));
  return shape;
}

std::string ToString(CorollaryKind kind) {
  switch (kind) {
    case CorollaryKind::kLeastPrimeFactor:
      return "least-prime-factor";
    case CorollaryKind::kRadicalCondition:
      return "radical-condition";
    case CorollaryKind::kHighFrobeniusDegree:
      return "high-frobenius-degree";
  }
  return "?";
}

CorollaryResult CorollaryBound(CorollaryKind kind,
                               const CorollaryParams& params) {
  const Field& F = *params.field;
  const uint64_t p = F.p();
  const uint64_t q = F.q();
  CorollaryResult result;
  result.interval = SumInterval(ToString(kind), F);
  auto fail = [&](std::string reason) {
    result.hypotheses_hold = false;
    result.reason = reason;
    result.interval = Inapplicable(result.interval, std::move(reason));
    return result;
  };
  if (params.a.is_zero()) return fail("a must be nonzero");
  if (params.c.is_zero()) return fail("c must be nonzero");

  switch (kind) {
    case CorollaryKind::kLeastPrimeFactor: {
      if (q < 3) return fail("q - 1 has no prime factor");
      const uint64_t least = LeastPrimeFactor(q - 1);
      const uint64_t n = (q - 1) / least;
      if (params.alpha < 1) return fail("alpha must be positive");
      if (params.alpha >= 64) return fail("n + p^alpha exceeds q - 1");
      uint64_t p_alpha = 1;
      for (uint64_t i = 0; i < params.alpha; ++i) {
        p_alpha *= p;
        if (p_alpha > q) return fail("n + p^alpha exceeds q - 1");
      }
      const uint64_t e = n + p_alpha;
      if (e <= 1 || e > q - 1) return fail("n + p^alpha exceeds q - 1");
      const std::vector<Term> raw{{e, F.one()}, {1, params.a}};
      result.poly = SparseMappingPoly::FromRaw(params.field, raw);
      const auto k = static_cast<uint32_t>(params.alpha % F.m());
      const bool root = IsPower(RootTarget(params.a, params.c, k, F), n, F);
      result.interval.applicable = true;
      result.interval.center = root ? MakeRational(q, least) : Rational(0);
      result.interval.radius_coeff = root ? least - 1 : least;
      result.reason = "Q = " + std::to_string(least) + ", n = " +
                      std::to_string(n) + (root ? ", root exists" : ", no root");
      break;
    }
    case CorollaryKind::kRadicalCondition: {
      const uint64_t n = params.n;
      if (F.m() != 2 || p == 2) return fail("needs F_{p^2} with p odd");
      if (n % 2 == 0) return fail("n must be odd");
      if (std::gcd(n, p - 1) != 1) return fail("gcd(n, p-1) must be 1");
      if (2 * Radical(n) != Radical(p + 1)) {
        return fail("2 rad(n) must equal rad(p+1)");
      }
      if (n + p <= 1 || n + p > q - 1) return fail("n + p exceeds p^2 - 1");
      const uint64_t s = (q - 1) / std::gcd(n, p + 1);
      const std::vector<Term> raw{{n + p, F.one()}, {1, params.a}};
      result.poly = SparseMappingPoly::FromRaw(params.field, raw);
      const bool root = IsPower(RootTarget(params.a, params.c, 1, F), n, F);
      result.interval.applicable = true;
      result.interval.center = root ? MakeRational(q, s) : Rational(0);
      result.interval.radius_coeff = root ? s - 1 : s;
      result.reason = "s = " + std::to_string(s) +
                      (root ? ", root exists" : ", no root");
      break;
    }
    case CorollaryKind::kHighFrobeniusDegree: {
      const uint64_t s = params.s;
      const uint64_t r = params.r;
      if (s <= p) return fail("s must exceed p");
      if (s * s >= q) return fail("s must be below sqrt(q)");
      if (std::gcd(s, p) != 1) return fail("gcd(s, p) must be 1");
      if (r < 1 || r >= s) return fail("r must satisfy 1 <= r < s");
      const uint64_t e = s * CheckedPow(p, F.m() - 1);
      const std::vector<Term> raw{{e, F.one()}, {r, params.a}};
      result.poly = SparseMappingPoly::FromRaw(params.field, raw);
      result.interval.applicable = true;
      result.interval.center = Rational(0);
      result.interval.radius_coeff = s - 1;
      result.reason = "minimal degree s = " + std::to_string(s);
      break;
    }
  }
  result.hypotheses_hold = true;
  result.interval.reason = result.reason;
  return result;
}

BoundReport ComputeBounds(const SparseMappingPoly& f, Element c,
                          const BoundOptions& options) {
  if (f.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument,
                "bounds need a nonconstant polynomial, got " + f.ToString());
  }
  if (c.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "character scaling c is zero");
  }
  BoundReport report;
  report.weil = WeilBound(f);
  report.wan_wang = WanWangBound(f, c);
  report.improved = ImprovedBound(f, c, options.search, options.exhaustive);
  report.reduced_weil = ReducedWeilBound(f, c, options.search);
  if (const auto shape = MatchBinomial(f)) {
    report.binomial = BinomialBound(shape->n, shape->r, shape->a, f.field(),
                                    f.field()->Mul(c, shape->lead));
  }
  return report;
}

GenericBounds GenericBinomialBounds(const FieldPtr& field, uint64_t n,
                                    uint64_t r) {
  const Field& F = *field;
  const uint64_t q = F.q();
  n = ReduceExponent(n, q);
  r = ReduceExponent(r, q);
  if (r < 1 || r >= n) {
    throw Error(ErrorKind::kInvalidArgument,
                "generic bounds need 1 <= r < n <= q-1 after reduction");
  }
  GenericBounds out;
  out.weil = SumInterval("weil", F);
  if (std::gcd(n, F.p()) != 1) {
    out.weil = Inapplicable(out.weil, "p divides the degree");
  } else {
    out.weil.applicable = true;
    out.weil.radius_coeff = n - 1;
  }

  const std::vector<uint64_t> exponents{r, n};
  const uint64_t l = IndexOfExponents(exponents, q);
  out.wan_wang = SumInterval("wan-wang", F);
  out.wan_wang.applicable = true;
  out.wan_wang.radius_coeff = l * std::gcd(r, (q - 1) / l);
  out.wan_wang.reason = "index " + std::to_string(l);

  out.improved_witness = MinimizeIndexGeneric(exponents, F);
  out.improved = SumInterval("improved", F);
  out.improved.applicable = true;
  out.improved.radius_coeff = out.improved_witness.radius_coeff;
  out.improved.reason = "index " + std::to_string(out.improved_witness.index) +
                        ", lowest exponent " +
                        std::to_string(out.improved_witness.lowest);
  return out;
}

CurveBounds ComputeCurveBounds(const SparseMappingPoly& f,
                               const SubfieldTower& tower,
                               const CurveBoundOptions& options) {
  const Field& F = *tower.big();
  if (f.field()->q() != F.q()) {
    throw Error(ErrorKind::kInvalidArgument,
                "polynomial is not defined over the tower's big field");
  }
  if (f.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument,
                "curve bounds need a nonconstant polynomial");
  }
  const uint64_t q = tower.base_q();
  const uint64_t big_q = F.q();
  const uint64_t p = F.p();
  const auto subfield = tower.SubfieldElements();
  const bool has_constant = !f.constant().is_zero();

  CurveBounds out;
  out.weil = CurveInterval("curve-weil", tower);
  out.weil.center = MakeRational(big_q);
  if (std::gcd(f.degree(), p) != 1) {
    out.weil = Inapplicable(out.weil, "p divides the degree " +
                                          std::to_string(f.degree()));
  } else {
    out.weil.applicable = true;
    out.weil.radius_coeff = (q - 1) * (f.degree() - 1);
    out.weil.reason = "degree " + std::to_string(f.degree());
  }

  out.witness = MinimizeIndex(f, F.one(), options.search);
  const EquivalentForm& w = out.witness;
  out.index = CurveInterval("curve-index", tower);
  out.index.center = MakeRational(big_q) +
                     MakeRational((q - 1) * big_q * w.vanishing, w.index);
  out.index.radius_coeff = (q - 1) * w.RadiusCoefficient();
  out.index.applicable = true;
  out.index.reason = Describe(w);
  if (has_constant && w.vanishing > 0) {
    out.index = Inapplicable(out.index,
                             "nonzero constant term with a shifted centre");
  } else {
    // The same shift must give the same interval for every character c.
    for (size_t i = 2; i < subfield.size(); ++i) {
      const EquivalentForm other = DescribeRepresentative(
          FrobeniusShift(f.Scaled(subfield[i]), w.shift), w.shift, subfield[i]);
      if (other.index != w.index || other.vanishing != w.vanishing ||
          other.RadiusCoefficient() != w.RadiusCoefficient()) {
        out.index = Inapplicable(
            out.index, "vanishing count depends on the character (c = " +
                           F.ToString(subfield[i]) + ")");
        break;
      }
    }
  }

  if (options.certify) {
    BoundInterval b = CurveInterval("curve-certified", tower);
    b.center = MakeRational(big_q);
    b.applicable = true;
    for (size_t i = 1; i < subfield.size(); ++i) {
      const EquivalentForm wc = MinimizeIndex(f, subfield[i], options.search);
      if (has_constant && wc.vanishing > 0) {
        b = Inapplicable(b, "nonzero constant term with a shifted centre");
        break;
      }
      b.center += MakeRational(big_q * wc.vanishing, wc.index);
      b.radius_coeff += wc.RadiusCoefficient();
    }
    if (b.applicable) b.reason = "sum of per-character index bounds";
    out.certified = std::move(b);
  }

  const auto shape = MatchBinomial(f);
  if (shape && !has_constant) {
    // y^q - y = x^(n + p^alpha) + a x with n = (Q-1)/(least prime of Q-1).
    if (shape->r == 1 && shape->lead == F.one() && big_q >= 3) {
      const uint64_t least = LeastPrimeFactor(big_q - 1);
      const uint64_t n = (big_q - 1) / least;
      if (shape->n > n) {
        const auto [base, alpha] = PrimePowerDecomposition(shape->n - n);
        if (base == p && alpha >= 1) {
          BoundInterval b = CurveInterval("curve-least-prime-factor", tower);
          const auto k = static_cast<uint32_t>(alpha % F.m());
          std::optional<bool> root;
          bool consistent = true;
          for (size_t i = 1; i < subfield.size(); ++i) {
            const bool r = IsPower(RootTarget(shape->a, subfield[i], k, F), n, F);
            if (root && *root != r) consistent = false;
            root = r;
          }
          if (!consistent) {
            b = Inapplicable(b, "root condition depends on the character");
          } else {
            b.applicable = true;
            b.center = MakeRational(big_q) +
                       (*root ? MakeRational((q - 1) * big_q, least)
                              : Rational(0));
            b.radius_coeff = (q - 1) * (*root ? least - 1 : least);
            b.reason = "Q = " + std::to_string(least) +
                       (*root ? ", root exists" : ", no root");
          }
          out.specialized.push_back(std::move(b));
        }
      }
    }
    // y^q - y = x^(s Q/p) + a x^r; the first exponent is stored reduced, and
    // s = e p mod (Q-1) recovers it.
    for (int which = 1; which >= 0; --which) {
      const Term& frob = f.terms()[which];
      const Term& other = f.terms()[1 - which];
      if (frob.coeff != F.one()) continue;
      uint64_t s = frob.exponent % (big_q - 1) * p % (big_q - 1);
      if (s == 0) s = big_q - 1;
      if (s <= p || s * s >= big_q || std::gcd(s, p) != 1 ||
          other.exponent >= s) {
        continue;
      }
      BoundInterval b = CurveInterval("curve-high-frobenius-degree", tower);
      b.applicable = true;
      b.center = MakeRational(big_q);
      b.radius_coeff = (q - 1) * (s - 1);
      b.reason = "s = " + std::to_string(s);
      out.specialized.push_back(std::move(b));
      break;
    }
  }
  return out;
}

}  // namespace indexbound
