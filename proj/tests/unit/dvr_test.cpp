#include <random>

#include <gtest/gtest.h>

#include "conmod/dvr.hpp"

namespace conmod {
namespace {

const DvrSpec Z5 = DvrSpec::zlocal(5);
const DvrSpec T5 = DvrSpec::ratfunc(5);
const DvrSpec T3 = DvrSpec::ratfunc(3);

DvrElement q(long num, long den) { return DvrElement::from_fraction(Z5, num, den); }
DvrElement z(long n) { return DvrElement::from_int(Z5, n); }
DvrElement poly(const DvrSpec& s, FpPoly num, FpPoly den = {1}) {
  return DvrElement::from_polys(s, std::move(num), std::move(den));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInvariantViolation;  // sentinel: nothing thrown
}

TEST(DvrSpec, RejectsComposite) {
  EXPECT_EQ(kind_of([] { (void)DvrSpec::zlocal(6); }), ErrorKind::InvalidArgument);
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
}

TEST(DvrAdd, Examples) {
  EXPECT_EQ(q(3, 7) + q(4, 7), z(1));
  EXPECT_TRUE((z(5) + z(-5)).is_zero());
  auto lhs = poly(T5, {0, 1}, {1, 1}) + poly(T5, {0, 0, 1}, {1, 1});
  EXPECT_EQ(lhs, poly(T5, {0, 1}));
}

TEST(DvrAdd, SpecMismatch) {
  EXPECT_EQ(kind_of([] { (void)(z(1) + DvrElement::from_int(DvrSpec::zlocal(7), 1)); }), ErrorKind::SpecMismatch);
  EXPECT_EQ(kind_of([] { (void)(z(1) + DvrElement::from_int(T5, 1)); }), ErrorKind::SpecMismatch);
}

TEST(DvrMul, Examples) {
  EXPECT_EQ(z(2) * z(3), z(6));
  EXPECT_EQ(z(5) * z(5), z(25));
  EXPECT_EQ(poly(T3, {0, 1}) * poly(T3, {0, 1}), poly(T3, {0, 0, 1}));
  EXPECT_EQ(neg(z(4)), z(-4));
}

TEST(DvrValuation, Examples) {
  EXPECT_EQ(valuation(z(50)), Valuation(2));
  EXPECT_EQ(valuation(q(3, 7)), Valuation(0));
  EXPECT_TRUE(valuation(DvrElement(Z5)).is_infinite());
  EXPECT_TRUE(valuation(DvrElement(T5)).is_infinite());
  EXPECT_EQ(valuation(poly(T5, {0, 0, 1, 1})), Valuation(2));
}

TEST(DvrInvertUnit, Examples) {
  EXPECT_EQ(invert_unit(q(3, 7)), q(7, 3));
  EXPECT_EQ(kind_of([] { (void)invert_unit(z(5)); }), ErrorKind::NotAUnit);
  EXPECT_EQ(kind_of([] { (void)invert_unit(z(0)); }), ErrorKind::NotAUnit);
  EXPECT_EQ(invert_unit(poly(T5, {1, 1})), poly(T5, {1}, {1, 1}));
}

TEST(DvrNormalize, Examples) {
  auto n = normalize(z(50));
  EXPECT_EQ(n.unit, z(2));
  EXPECT_EQ(n.valuation, Valuation(2));
  auto u = normalize(q(3, 7));
  EXPECT_EQ(u.unit, q(3, 7));
  EXPECT_EQ(u.valuation, Valuation(0));
  auto t = normalize(poly(T5, {0, 0, 1, 1}));
  EXPECT_EQ(t.unit, poly(T5, {1, 1}));
  EXPECT_EQ(t.valuation, Valuation(2));
  EXPECT_EQ(kind_of([] { (void)normalize(z(0)); }), ErrorKind::ZeroElement);
}

TEST(DvrResidue, Examples) {
  EXPECT_EQ(residue(z(12)), 2u);
  EXPECT_EQ(residue(q(3, 7)), 4u);
  EXPECT_EQ(residue(z(10)), 0u);
  EXPECT_EQ(residue(z(-1)), 4u);
  EXPECT_EQ(residue(poly(T5, {3, 1}, {2})), 4u);
}

TEST(DvrFraction, NonUnitDenominatorRejected) {
  EXPECT_EQ(kind_of([] { (void)q(1, 5); }), ErrorKind::NotAUnit);
  EXPECT_EQ(q(10, 15), q(2, 3));  // canonical reduction
  EXPECT_EQ(kind_of([] { (void)poly(T5, {1}, {0, 1}); }), ErrorKind::NotAUnit);
  EXPECT_EQ(poly(T5, {0, 1}, {0, 1}), poly(T5, {1}));
}

TEST(DvrDivideExact, QuotientInRing) {
  EXPECT_EQ(divide_exact(z(50), z(10)), z(5));
  EXPECT_EQ(divide_exact(z(7), q(7, 3)), z(3));
}

// Random elements of both kinds for the ring-axiom property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  DvrElement zlocal() {
    long num = static_cast<long>(rng_() % 2001) - 1000;
    long den = 1 + static_cast<long>(rng_() % 60);
    if (den % 5 == 0) ++den;
    long shift = static_cast<long>(rng_() % 3);
    return DvrElement::from_fraction(Z5, num * (shift == 2 ? 25 : 1), den);
  }

  DvrElement ratfunc() {
    FpPoly num(rng_() % 5), den(1 + rng_() % 3);
    for (auto& c : num) c = rng_() % 5;
    for (auto& c : den) c = rng_() % 5;
    den[0] = 1 + rng_() % 4;
    while (!num.empty() && num.back() == 0) num.pop_back();
    while (den.size() > 1 && den.back() == 0) den.pop_back();
    return DvrElement::from_polys(T5, num, den);
  }

 private:
  std::mt19937_64 rng_;
};

void check_valuation_laws(const DvrElement& a, const DvrElement& b) {
  EXPECT_EQ(valuation(a * b), valuation(a) + valuation(b));
  auto va = valuation(a), vb = valuation(b);
  auto vs = valuation(a + b);
  EXPECT_GE(vs, std::min(va, vb));
  if (va != vb) EXPECT_EQ(vs, std::min(va, vb));
  if (!a.is_zero()) {
    auto n = normalize(a);
    EXPECT_EQ(n.unit * DvrElement::uniformizer_power(a.spec(), n.valuation.value()), a);
    EXPECT_EQ(valuation(n.unit), Valuation(0));
    EXPECT_EQ(invert_unit(invert_unit(n.unit)), n.unit);
    EXPECT_TRUE((n.unit * invert_unit(n.unit)).is_one());
  }
  EXPECT_EQ(a * (a + b), a * a + a * b);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(DvrProperty, ValuationAndUnitLawsZLocal) {
  Sampler s(11);
  for (int i = 0; i < 400; ++i) check_valuation_laws(s.zlocal(), s.zlocal());
}

TEST(DvrProperty, ValuationAndUnitLawsRatFunc) {
  Sampler s(12);
  for (int i = 0; i < 400; ++i) check_valuation_laws(s.ratfunc(), s.ratfunc());
}

TEST(DvrProperty, ResidueIsRingMap) {
  Sampler s(13);
  for (int i = 0; i < 300; ++i) {
    auto a = s.zlocal(), b = s.zlocal();
    EXPECT_EQ(residue(a * b), residue(a) * residue(b) % 5);
    EXPECT_EQ(residue(a + b), (residue(a) + residue(b)) % 5);
  }
}

}  // namespace
}  // namespace conmod
