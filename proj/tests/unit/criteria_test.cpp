#include <gtest/gtest.h>

#include "conmod/corpus.hpp"

namespace conmod {
namespace {

const DvrSpec Z5 = DvrSpec::zlocal(5);

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "nothing thrown";
  return ErrorKind::InternalInvariantViolation;
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(regular_module(trivial_algebra(Z5))).e, 1);
  EXPECT_EQ(algebra_multiplicity(glue_algebra(Z5, 1)), 2);
  EXPECT_EQ(algebra_multiplicity(gor_not_ci_algebra(Z5)), 5);
}

TEST(Multiplicity, NonSuperficialUniformizer) {
  // x (x^2 + w^2 x + w): the branch x = 0 and an Eisenstein branch, each of multiplicity one, while
  // A / wA = k[x]/(x^3) has length 3. The certificate needs an element other than w.
  auto a = monogenic_algebra(Z5, {1, 2});
  auto r = multiplicity(regular_module(a));
  EXPECT_EQ(a.rank(), 3);
  EXPECT_EQ(r.e, 2);
  ASSERT_TRUE(r.superficial_crosscheck.has_value());
  EXPECT_EQ(*r.superficial_crosscheck, r.e);
  ASSERT_TRUE(r.superficial_element.has_value());
  EXPECT_FALSE(*r.superficial_element == scaled(DvrElement::from_int(Z5, 5), a.one()));
}

TEST(Multiplicity, AdditiveOverDirectSums) {
  for (const auto& a : {glue_algebra(Z5, 2), gor_not_ci_algebra(Z5), multi_glue_algebra(Z5, 3)}) {
    auto canon = canonical_modules(a);
    const long e1 = multiplicity(canon.augmentation).e;
    const long e2 = multiplicity(canon.regular).e;
    EXPECT_EQ(multiplicity(direct_sum(canon.augmentation, canon.regular)).e, e1 + e2);
    EXPECT_EQ(e1, 1);
  }
}

TEST(Multiplicity, FreeAlgebraWithSuperficialUniformizer) {
  for (const auto& a : {glue_algebra(Z5, 1), glue_algebra(Z5, 3), gor_not_ci_algebra(Z5), multi_glue_algebra(Z5, 4)}) {
    auto r = multiplicity(regular_module(a));
    ASSERT_TRUE(r.superficial_crosscheck.has_value());
    EXPECT_EQ(r.e, *r.superficial_crosscheck);
    EXPECT_EQ(r.e, length(OModule(a.basis_size(), hconcat(DvrElement::uniformizer_power(Z5, 1) * Matrix::identity(Z5, a.basis_size()),
                                                          a.module_relations()))));
  }
}

TEST(Multiplicity, TorsionIsIgnored) {
  auto g = glue_algebra(Z5, 1);
  auto m = direct_sum(augmentation_module(g), residue_module(g));
  EXPECT_EQ(multiplicity(m).e, 1);
}

FiniteOAlgebra dual_numbers() { return reduction_mod_uniformizer(glue_algebra(Z5, 1)); }

TEST(ZeroDimGorenstein, Examples) {
  auto r = dual_numbers();
  EXPECT_EQ(zero_dim_gorenstein_free_test(regular_module(r)).conclusion, Conclusion::Free);
  auto k = zero_dim_gorenstein_free_test(residue_module(r));
  EXPECT_EQ(k.conclusion, Conclusion::NotFree);
  EXPECT_EQ(k.number("ell_socle_times_module"), 0);
  EXPECT_EQ(zero_dim_gorenstein_free_test(free_module(r, 2)).conclusion, Conclusion::Free);
  auto v = zero_dim_gorenstein_free_test(free_module(r, 2));
  EXPECT_EQ(v.number("ell_module"), 4);
  EXPECT_EQ(v.number("ell_socle_times_module"), 2);
}

TEST(ZeroDimGorenstein, RejectsNonGorenstein) {
  auto r = square_zero_artinian(Z5, 2);
  EXPECT_EQ(error_of([&] { (void)zero_dim_gorenstein_free_test(regular_module(r)); }), ErrorKind::NotGorensteinInput);
  auto g = glue_algebra(Z5, 1);
  EXPECT_EQ(error_of([&] { (void)zero_dim_gorenstein_free_test(regular_module(g)); }), ErrorKind::NotGorensteinInput);
}

TEST(GorensteinTest, Examples) {
  auto g = gorenstein_test(glue_algebra(Z5, 1));
  EXPECT_EQ(g.conclusion, Conclusion::Gorenstein);
  EXPECT_EQ(g.number("socle_length"), 1);
  EXPECT_TRUE(g.flag("socle_equals_congruence_image"));

  auto gn = gorenstein_test(gor_not_ci_algebra(Z5));
  EXPECT_EQ(gn.conclusion, Conclusion::Gorenstein);
  EXPECT_TRUE(gn.flag("socle_equals_congruence_image"));

  auto mg = gorenstein_test(multi_glue_algebra(Z5, 3));
  EXPECT_EQ(mg.conclusion, Conclusion::NotGorenstein);
  EXPECT_EQ(mg.number("socle_length"), 2);

  EXPECT_EQ(gorenstein_test(depth0_algebra(Z5)).conclusion, Conclusion::NotGorenstein);
}

TEST(GorensteinTest, SocleOfGorNotCIIsSquare) {
  auto a = gor_not_ci_algebra(Z5);
  auto r = reduction_mod_uniformizer(a);
  Matrix x2(Z5, 5, 1);
  x2.at(4, 0) = DvrElement::from_int(Z5, 1);
  EXPECT_TRUE(ideal_equal(r, socle(r), ideal_closure(r, x2)));
}

TEST(CiTest, Examples) {
  EXPECT_EQ(ci_test(glue_algebra(Z5, 1)).conclusion, Conclusion::CompleteIntersection);
  auto gn = ci_test(gor_not_ci_algebra(Z5));
  EXPECT_EQ(gn.conclusion, Conclusion::NotCI);
  EXPECT_EQ(gn.number("ell_phi"), 3);
  EXPECT_EQ(gn.number("ell_psi"), 2);
  EXPECT_EQ(ci_test(trivial_algebra(Z5)).conclusion, Conclusion::CompleteIntersection);
  EXPECT_EQ(ci_test(depth0_algebra(Z5)).conclusion, Conclusion::NotCI);
}

TEST(Prediamond, Examples) {
  auto g = glue_algebra(Z5, 1);
  auto free = freeness_prediamond(regular_module(g));
  EXPECT_EQ(free.conclusion, Conclusion::Free);
  EXPECT_EQ(free.number("e_M"), 2);
  EXPECT_EQ(free.number("e_A"), 2);

  auto o = freeness_prediamond(augmentation_module(g));
  EXPECT_EQ(o.conclusion, Conclusion::NotFree);
  EXPECT_EQ(o.number("delta_M"), 1);
  EXPECT_FALSE(o.flag("defect_inequality"));

  auto gn = gor_not_ci_algebra(Z5);
  auto ia = ideal_as_module(gn, gn.congruence_ideal());
  EXPECT_EQ(freeness_prediamond(ia).conclusion, direct_freeness_oracle(ia).conclusion);
}

TEST(Prediamond, Preconditions) {
  auto mg = multi_glue_algebra(Z5, 3);
  EXPECT_EQ(error_of([&] { (void)freeness_prediamond(regular_module(mg)); }), ErrorKind::PreconditionFailed);
  auto g = glue_algebra(Z5, 1);
  EXPECT_EQ(error_of([&] { (void)freeness_prediamond(residue_module(g)); }), ErrorKind::PreconditionFailed);
}

TEST(Diamond, Examples) {
  auto g = glue_algebra(Z5, 1);
  auto two = diamond_test(free_module(g, 2));
  EXPECT_EQ(two.conclusion, Conclusion::Free);
  EXPECT_TRUE(two.flag("complete_intersection"));
  EXPECT_EQ(two.number("e_M"), 4);

  EXPECT_EQ(diamond_test(augmentation_module(g)).conclusion, Conclusion::Inconclusive);
  EXPECT_EQ(diamond_test(regular_module(gor_not_ci_algebra(Z5))).conclusion, Conclusion::Inconclusive);

  EXPECT_EQ(error_of([&] { (void)diamond_test(free_module(g, 0)); }), ErrorKind::PreconditionFailed);
}

TEST(IsoCriteria, Examples) {
  auto g = glue_algebra(Z5, 1);
  EXPECT_EQ(iso_criteria(AlgebraMap::identity(g)).conclusion, Conclusion::Isomorphism);
  AlgebraMap to_o(g, trivial_algebra(Z5), Matrix::from_ints(Z5, {{1, 0}}));
  EXPECT_EQ(iso_criteria(to_o).conclusion, Conclusion::Inconclusive);
  AlgebraMap to_d0(g, depth0_algebra(Z5), Matrix::identity(Z5, 2));
  EXPECT_EQ(error_of([&] { (void)iso_criteria(to_d0); }), ErrorKind::PreconditionFailed);
}

TEST(WilesCriterion, Examples) {
  auto g = glue_algebra(Z5, 1);
  auto id = wiles_criterion(AlgebraMap::identity(g));
  EXPECT_EQ(id.conclusion, Conclusion::Isomorphism);
  EXPECT_TRUE(id.flag("complete_intersection"));

  AlgebraMap to_o(g, trivial_algebra(Z5), Matrix::from_ints(Z5, {{1, 0}}));
  auto v = wiles_criterion(to_o);
  EXPECT_EQ(v.conclusion, Conclusion::Inconclusive);
  EXPECT_EQ(v.number("delta_target"), 1);

  auto d0 = depth0_algebra(Z5);
  auto cm = AlgebraMap::quotient(d0, torsion_ideal(d0));
  auto w = wiles_criterion(cm);
  EXPECT_EQ(w.conclusion, Conclusion::Inconclusive);
  EXPECT_EQ(w.number("delta_target"), 1);
}

TEST(Wiebe, Examples) {
  auto r = truncated_dvr(Z5, 3);
  auto free = wiebe_module_test(regular_module(r));
  EXPECT_EQ(free.conclusion, Conclusion::Free);
  EXPECT_TRUE(free.flag("complete_intersection"));
  EXPECT_EQ(free.number("e_M"), 3);
  EXPECT_EQ(free.number("ell_fitting_times_module"), 1);

  auto k = wiebe_module_test(residue_module(r));
  EXPECT_EQ(k.conclusion, Conclusion::Inconclusive);
  EXPECT_EQ(k.number("ell_fitting_times_module"), 0);

  auto sq = square_zero_artinian(Z5, 2);
  EXPECT_EQ(wiebe_module_test(regular_module(sq)).conclusion, Conclusion::Inconclusive);
  EXPECT_TRUE(ideal_is_zero(sq, fitting_ideal(ideal_as_module(sq, sq.maximal_ideal()))));
}

TEST(FittingIdeal, Examples) {
  auto g = glue_algebra(Z5, 1);
  // A free module of rank one has no 1x1 minors in its (empty) relation matrix.
  EXPECT_TRUE(ideal_is_zero(g, fitting_ideal(regular_module(g))));
  EXPECT_TRUE(ideal_equal(g, fitting_ideal(quotient_module(regular_module(g), Matrix::identity(Z5, 2))), unit_ideal(g)));

  auto j = g.augmentation_ideal();
  EXPECT_TRUE(ideal_equal(g, fitting_ideal(quotient_module(regular_module(g), j.generators)), j));

  auto kernel = kernel_ideal(glue_onto_depth0(Z5, 1));
  auto fitt = fitting_ideal(ideal_as_module(g, kernel));
  EXPECT_TRUE(ideal_equal(g, fitt, g.congruence_ideal()));

  auto r = truncated_dvr(Z5, 3);
  Matrix w2(Z5, 1, 1);
  w2.at(0, 0) = DvrElement::from_int(Z5, 25);
  EXPECT_TRUE(ideal_equal(r, fitting_ideal(ideal_as_module(r, r.maximal_ideal())), ideal_closure(r, w2)));
}

TEST(FreenessOracle, Examples) {
  auto g = glue_algebra(Z5, 1);
  auto f = direct_freeness_oracle(free_module(g, 3));
  EXPECT_EQ(f.conclusion, Conclusion::Free);
  EXPECT_EQ(f.number("nu"), 3);
  EXPECT_EQ(direct_freeness_oracle(residue_module(g)).conclusion, Conclusion::NotFree);
  auto i = direct_freeness_oracle(ideal_as_module(g, g.congruence_ideal()));
  EXPECT_EQ(i.conclusion, Conclusion::NotFree);
  EXPECT_EQ(i.number("nu"), 1);
}

// Both directions of the Gorenstein freeness criterion on corpus modules.
TEST(CriteriaProperty, PrediamondMatchesOracle) {
  const DvrSpec t3 = DvrSpec::ratfunc(3);
  int checked = 0, free_count = 0;
  for (const auto& a : {glue_algebra(Z5, 1), glue_algebra(Z5, 2), glue_algebra(t3, 1), monogenic_algebra(Z5, {1, 2}),
                        gor_not_ci_algebra(Z5), random_monogenic_algebra(Z5, 2, 3)}) {
    ASSERT_EQ(gorenstein_test(a).conclusion, Conclusion::Gorenstein);
    auto canon = canonical_modules(a);
    std::vector<AModule> modules{canon.regular, canon.augmentation, canon.congruence_ideal, canon.augmentation_ideal};
    for (std::uint64_t seed = 0; seed < 5; ++seed) modules.push_back(random_module(a, 100 + seed, 1 + seed % 2, true));
    for (const auto& m : modules) {
      if (!m.depth_ok()) continue;
      auto v = freeness_prediamond(m);
      EXPECT_EQ(v.conclusion, direct_freeness_oracle(m).conclusion);
      ++checked;
      if (v.conclusion == Conclusion::Free) ++free_count;
    }
  }
  EXPECT_GT(checked, 40);
  EXPECT_GT(free_count, 0);
  EXPECT_LT(free_count, checked);
}

TEST(CriteriaProperty, SocleIsCongruenceImage) {
  for (const auto& a : {glue_algebra(Z5, 2), monogenic_algebra(Z5, {1, 1, 2}), gor_not_ci_algebra(Z5)}) {
    auto v = gorenstein_test(a);
    ASSERT_EQ(v.conclusion, Conclusion::Gorenstein);
    auto r = reduction_mod_uniformizer(a);
    EXPECT_TRUE(ideal_equal(r, socle(r), ideal_closure(r, a.congruence_ideal().generators)));
  }
}

}  // namespace
}  // namespace conmod
