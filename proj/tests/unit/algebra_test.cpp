#include <gtest/gtest.h>

#include "conmod/corpus.hpp"
#include "oracle.hpp"

namespace conmod {
namespace {

const DvrSpec Z5 = DvrSpec::zlocal(5);

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(DvrElement::from_int(Z5, x));
  return v;
}

// Structure constants from integer products; unlisted pairs multiply to zero, basis 0 is the unit.
struct Product {
  std::size_t i, j;
  std::vector<long> coords;
};

AlgebraData make_data(std::size_t s, const std::vector<Product>& products, std::vector<long> lambda,
                      Matrix relations = Matrix(Z5, 0, 0), bool symmetric = true) {
  AlgebraData d{Z5, {}, relations.rows() == s ? relations : Matrix(Z5, s, 0), {}, unit_vector(Z5, s, 0), {}};
  d.mult.assign(s, std::vector<Vector>(s, zero_vector(Z5, s)));
  for (std::size_t i = 0; i < s; ++i) d.mult[0][i] = d.mult[i][0] = unit_vector(Z5, s, i);
  for (const auto& p : products) {
    Vector v;
    for (long c : p.coords) v.push_back(DvrElement::from_int(Z5, c));
    d.mult[p.i][p.j] = v;
    if (symmetric) d.mult[p.j][p.i] = v;
  }
  for (long l : lambda) d.lambda.push_back(DvrElement::from_int(Z5, l));
  return d;
}

ErrorKind validation_error(AlgebraData d) {
  try {
    (void)FiniteOAlgebra::validate(std::move(d));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "validation unexpectedly succeeded";
  return ErrorKind::InternalInvariantViolation;
}

bool same_ideal(const FiniteOAlgebra& a, const Ideal& i, const Matrix& gens) {
  return ideal_equal(a, i, ideal_closure(a, gens));
}

// Integer oracle for the Gorenstein non-CI algebra, written from its defining relations:
// x^2 = y^2 = z^2, yz = w x, xz = w y, xy = w z, hence x^2 * x = x * yz... = w^2 x, and so on.
oracle::IntAlgebra gor_not_ci_oracle() {
  const long w = 5;
  oracle::IntAlgebra o;
  o.mult.assign(5, std::vector<oracle::IntVector>(5, oracle::IntVector(5, 0)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    o.mult[i][j] = oracle::IntVector(5, 0);
    o.mult[i][j][k] = c;
    o.mult[j][i] = o.mult[i][j];
  };
  for (std::size_t i = 0; i < 5; ++i) set(0, i, i, 1);
  set(1, 1, 4, 1);
  set(2, 2, 4, 1);
  set(3, 3, 4, 1);
  set(1, 2, 3, w);
  set(1, 3, 2, w);
  set(2, 3, 1, w);
  for (std::size_t i = 1; i < 5; ++i) set(4, i, i, w * w);
  return o;
}

TEST(Validate, TrivialAlgebra) {
  auto o = trivial_algebra(Z5);
  EXPECT_EQ(o.basis_size(), 1u);
  EXPECT_TRUE(ideal_is_zero(o, o.augmentation_ideal()));
  EXPECT_EQ(o.conormal_length(), 0);
  EXPECT_EQ(o.congruence_length(), 0);
}

TEST(Validate, GlueByHand) {
  auto a = FiniteOAlgebra::validate(make_data(2, {{1, 1, {0, 5}}}, {1, 0}));
  EXPECT_EQ(a.rank(), 2);
  EXPECT_TRUE(a.depth_at_least_one());
}

TEST(Validate, SquareZeroIsNotInCategory) {
  EXPECT_EQ(validation_error(make_data(2, {{1, 1, {0, 0}}}, {1, 0})), ErrorKind::ConormalInfinite);
}

TEST(Validate, NamesTheFailedAxiom) {
  // x*x = y, x*y = 0, y*y = y: (x x) y = y but x (x y) = 0.
  EXPECT_EQ(validation_error(make_data(3, {{1, 1, {0, 0, 1}}, {1, 2, {0, 0, 0}}, {2, 2, {0, 0, 1}}}, {1, 0, 0})),
            ErrorKind::NotAssociative);
  EXPECT_EQ(validation_error(make_data(3, {{1, 2, {0, 5, 0}}}, {1, 0, 0}, Matrix(Z5, 0, 0), false)),
            ErrorKind::NotCommutative);
  EXPECT_EQ(validation_error(make_data(2, {{1, 1, {0, 5}}}, {1, 1})), ErrorKind::LambdaNotMultiplicative);
  // O x O with idempotents: e2 never becomes divisible by w.
  auto prod = make_data(2, {{1, 1, {0, 1}}}, {1, 0});
  EXPECT_EQ(validation_error(prod), ErrorKind::NotLocal);
  auto bad_unit = make_data(2, {{1, 1, {0, 5}}}, {1, 0});
  bad_unit.mult[0][1] = ints({0, 2});
  bad_unit.mult[1][0] = ints({0, 2});
  EXPECT_EQ(validation_error(bad_unit), ErrorKind::NotUnital);
}

TEST(Validate, IllDefinedMultiplication) {
  // Basis 1, x with relation w x = 0 but x * x = 1 + ... breaks well-definedness: x * (w x) = w != 0.
  auto d = make_data(2, {{1, 1, {1, 0}}}, {1, 0}, Matrix::from_ints(Z5, {{0}, {5}}));
  EXPECT_EQ(validation_error(d), ErrorKind::IllDefinedMultiplication);
}

TEST(AugmentationIdeal, Examples) {
  auto o = trivial_algebra(Z5);
  EXPECT_TRUE(ideal_is_zero(o, augmentation_ideal(o)));

  auto g = glue_algebra(Z5, 1);
  EXPECT_TRUE(same_ideal(g, g.augmentation_ideal(), Matrix::column(ints({0, 1}))));

  auto gn = gor_not_ci_algebra(Z5);
  Matrix xyz_sq(Z5, 5, 4);
  for (std::size_t i = 0; i < 4; ++i) xyz_sq.at(i + 1, i) = DvrElement::from_int(Z5, 1);
  EXPECT_TRUE(same_ideal(gn, gn.augmentation_ideal(), xyz_sq));
}

TEST(Annihilator, Examples) {
  auto g = glue_algebra(Z5, 1);
  EXPECT_TRUE(same_ideal(g, g.congruence_ideal(), Matrix::column(ints({-5, 1}))));
  EXPECT_TRUE(ideal_equal(g, annihilator_of_ideal(g, g.augmentation_ideal()), g.congruence_ideal()));

  auto d0 = depth0_algebra(Z5);
  EXPECT_TRUE(same_ideal(d0, d0.congruence_ideal(), Matrix::from_ints(Z5, {{5, 0}, {0, 1}})));

  auto gn = gor_not_ci_algebra(Z5);
  // Oracle: (x^2 - w^2) kills x, y, z in the integer table, and the table is associative.
  auto o = gor_not_ci_oracle();
  oracle::IntVector gen{-25, 0, 0, 0, 1};
  for (std::size_t i = 1; i < 4; ++i) EXPECT_TRUE(oracle::is_zero(o.multiply(gen, o.basis(i))));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k)
        EXPECT_EQ(o.multiply(o.multiply(o.basis(i), o.basis(j)), o.basis(k)),
                  o.multiply(o.basis(i), o.multiply(o.basis(j), o.basis(k))));
  EXPECT_TRUE(same_ideal(gn, gn.congruence_ideal(), Matrix::column(ints({-25, 0, 0, 0, 1}))));
}

TEST(Conormal, Examples) {
  EXPECT_EQ(length(conormal_module(glue_algebra(Z5, 1))), 1);
  EXPECT_EQ(length(conormal_module(gor_not_ci_algebra(Z5))), 3);
  EXPECT_EQ(length(conormal_module(trivial_algebra(Z5))), 0);
}

TEST(CongruenceAlgebra, Examples) {
  EXPECT_EQ(congruence_algebra(glue_algebra(Z5, 1)).length, 1);
  EXPECT_EQ(congruence_algebra(gor_not_ci_algebra(Z5)).length, 2);
  EXPECT_EQ(congruence_algebra(trivial_algebra(Z5)).length, 0);
}

TEST(Depth, Examples) {
  auto g = glue_algebra(Z5, 1);
  EXPECT_TRUE(depth_at_least_one(g));
  EXPECT_TRUE(ideal_is_zero(g, torsion_ideal(g)));
  EXPECT_EQ(cm_quotient(g).basis_size(), 2u);

  auto d0 = depth0_algebra(Z5);
  EXPECT_FALSE(depth_at_least_one(d0));
  EXPECT_TRUE(same_ideal(d0, torsion_ideal(d0), Matrix::column(ints({0, 1}))));
  auto b = cm_quotient(d0);
  EXPECT_EQ(b.rank(), 1);
  EXPECT_TRUE(b.depth_at_least_one());
  EXPECT_EQ(b.conormal_length(), 0);

  auto gn = gor_not_ci_algebra(Z5);
  EXPECT_TRUE(depth_at_least_one(gn));
  EXPECT_EQ(gn.rank(), 5);
}

TEST(Depth0Example, CongruenceIdealContainsAugmentationIdeal) {
  auto d0 = depth0_algebra(Z5);
  auto p = d0.augmentation_ideal();
  auto i = d0.congruence_ideal();
  EXPECT_TRUE(same_ideal(d0, p, Matrix::column(ints({0, 1}))));
  EXPECT_TRUE(same_ideal(d0, i, Matrix::from_ints(Z5, {{5, 0}, {0, 1}})));
  // I ∩ p = p as submodules of A.
  auto meet = intersect(ideal_submodule(d0, i), ideal_submodule(d0, p));
  auto ps = ideal_submodule(d0, p);
  EXPECT_TRUE(LinearSolver(hconcat(meet.numerator(), d0.module_relations())).contains_all(ps.numerator()));
  EXPECT_TRUE(LinearSolver(hconcat(ps.numerator(), d0.module_relations())).contains_all(meet.numerator()));
}

TEST(QuotientByIdeal, Examples) {
  auto g = glue_algebra(Z5, 1);
  auto same = quotient_by_ideal(g, zero_ideal(g));
  EXPECT_EQ(same.conormal_length(), g.conormal_length());
  EXPECT_EQ(same.rank(), 2);

  // glue / (w x): relations w x = 0 and then x^2 = w x = 0.
  auto d = quotient_by_ideal(g, ideal_closure(g, Matrix::column(ints({0, 5}))));
  EXPECT_FALSE(d.depth_at_least_one());
  EXPECT_TRUE(d.equal_in_algebra(d.multiply(ints({0, 1}), ints({0, 1})), ints({0, 0})));
  EXPECT_TRUE(d.equal_in_algebra(ints({0, 5}), ints({0, 0})));
  EXPECT_EQ(d.conormal_length(), depth0_algebra(Z5).conormal_length());

  auto o = quotient_by_ideal(g, g.augmentation_ideal());
  EXPECT_EQ(o.rank(), 1);
  EXPECT_TRUE(ideal_is_zero(o, o.augmentation_ideal()));

  try {
    (void)quotient_by_ideal(g, ideal_closure(g, Matrix::column(ints({5, 0}))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AugmentationNotInduced);
  }
}

TEST(ConormalFromPresentation, Examples) {
  EXPECT_EQ(length(conormal_from_presentation(gor_not_ci_linear_parts(Z5))), 3);
  EXPECT_EQ(length(conormal_from_presentation(Matrix::identity(Z5, 3))), 0);
  EXPECT_EQ(length(conormal_from_presentation(Matrix::from_ints(Z5, {{5, 0}, {0, 5}}))), 2);
  EXPECT_EQ(length(conormal_from_presentation(gor_not_ci_linear_parts(Z5))),
            length(conormal_module(gor_not_ci_algebra(Z5))));
}

TEST(MonomialPresentation, CompilesGlue) {
  MonomialPresentation mp{Z5, {"x"}, {{0}, {1}}, {{ints({0, 1}), ints({0, 5})}}, Matrix(Z5, 2, 0), ints({0})};
  auto a = FiniteOAlgebra::validate(compile_monomial_presentation(mp));
  EXPECT_EQ(a.conormal_length(), 1);
  EXPECT_EQ(a.congruence_length(), 1);
}

TEST(AlgebraMapTest, RejectsNonMaps) {
  auto g = glue_algebra(Z5, 1);
  auto o = trivial_algebra(Z5);
  // x -> 1 is not multiplicative (x^2 = w x would need 1 = w).
  try {
    AlgebraMap bad(g, o, Matrix::from_ints(Z5, {{1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAlgebraMap);
  }
  AlgebraMap onto(g, o, Matrix::from_ints(Z5, {{1, 0}}));
  EXPECT_FALSE(onto.is_injective());
  EXPECT_TRUE(ideal_equal(g, onto.kernel(), g.augmentation_ideal()));
}

// Structural identities on every corpus algebra.
class CorpusAlgebra : public ::testing::TestWithParam<int> {
 protected:
  static FiniteOAlgebra algebra(int index) {
    const DvrSpec t3 = DvrSpec::ratfunc(3);
    switch (index) {
      case 0: return trivial_algebra(Z5);
      case 1: return glue_algebra(Z5, 1);
      case 2: return glue_algebra(Z5, 3);
      case 3: return glue_algebra(t3, 2);
      case 4: return depth0_algebra(Z5);
      case 5: return gor_not_ci_algebra(Z5);
      case 6: return gor_not_ci_algebra(t3);
      case 7: return monogenic_algebra(Z5, {1, 2});
      case 8: return monogenic_algebra(Z5, {2, -1, 1});
      case 9: return multi_glue_algebra(Z5, 3);
      case 10: return multi_glue_algebra(Z5, 4);
      case 11: return random_monogenic_algebra(Z5, 3, 4);
      default: return random_monogenic_algebra(t3, 5, 3);
    }
  }
};

TEST_P(CorpusAlgebra, StructuralIdentities) {
  const auto a = algebra(GetParam());
  // The annihilator of the congruence ideal is the augmentation ideal.
  EXPECT_TRUE(ideal_equal(a, annihilator_of_ideal(a, a.congruence_ideal()), a.augmentation_ideal()));
  EXPECT_EQ(free_rank(ideal_submodule(a, a.congruence_ideal())), 1);
  EXPECT_GE(a.conormal_length(), a.congruence_length());
  if (a.depth_at_least_one()) {
    auto g = principal_generator(a, a.congruence_ideal());
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(ideal_equal(a, ideal_closure(a, Matrix::column(*g)), a.congruence_ideal()));
    auto i = a.congruence_ideal();
    Subquotient i_mod_i2(a.underlying(), ideal_submodule(a, i).numerator(),
                         ideal_product(a, i, i).generators);
    EXPECT_EQ(length(i_mod_i2), a.congruence_length());
  }
}

INSTANTIATE_TEST_SUITE_P(All, CorpusAlgebra, ::testing::Range(0, 13));

}  // namespace
}  // namespace conmod
