#include "conmod/venkatesh.hpp"

namespace conmod {

namespace {

// Valuation of the ideal lambda(J) of O.
long lambda_valuation(const FiniteOAlgebra& a, const Ideal& j) {
  Valuation best = Valuation::infinity();
  for (std::size_t c = 0; c < j.generators.cols(); ++c) best = std::min(best, valuation(a.augmentation(j.generators.col(c))));
  ensure(!best.is_infinite(), "lambda vanishes on an ideal expected to have finite colength image");
  return best.value();
}

long ell_I_of(const FiniteOAlgebra& c, const Ideal& kernel) {
  return lambda_valuation(c, annihilator_of_ideal(c, kernel));
}

}  // namespace

CIPresentation::CIPresentation(FiniteOAlgebra source, FiniteOAlgebra target, Matrix alpha, std::optional<Matrix> linear_part)
    : map_(std::move(source), std::move(target), std::move(alpha)), linear_part_(std::move(linear_part)) {
  if (ci_test(map_.source()).conclusion != Conclusion::CompleteIntersection)
    fail(ErrorKind::PreconditionFailed, "source of the presentation is not a complete intersection");
  if (linear_part_ && length(conormal_from_presentation(*linear_part_)) != map_.source().conormal_length())
    fail(ErrorKind::InvalidArgument, "linear part does not present the conormal module of the source");
}

Ideal kernel_ideal(const CIPresentation& pres) {
  Ideal k = pres.map().kernel();
  ensure(lattice_contains(pres.target().module_relations(), pres.alpha() * k.generators), "kernel does not map to zero");
  return k;
}

IJLengths I_and_J(const CIPresentation& pres) {
  const FiniteOAlgebra& c = pres.source();
  const Ideal kernel = kernel_ideal(pres);
  IJLengths r;
  r.ell_I = ell_I_of(c, kernel);
  r.ell_J = lambda_valuation(c, fitting_ideal(ideal_as_module(c, kernel)));
  ensure(r.ell_J >= r.ell_I, "lambda(Fitt) is not contained in lambda(ann)");
  return r;
}

AQLengths aq_lengths(const CIPresentation& pres) {
  const FiniteOAlgebra& c = pres.source();
  const Ideal kernel = kernel_ideal(pres);
  const Ideal product = ideal_product(c, c.augmentation_ideal(), kernel);
  AQLengths r;
  r.aq1 = length(Subquotient(c.underlying(), kernel.generators, product.generators));
  r.aq2 = pres.target().conormal_length() - c.conormal_length() + r.aq1;
  const long ell_J = lambda_valuation(c, fitting_ideal(ideal_as_module(c, kernel)));
  ensure(r.aq1 == ell_J, "l(Ker / p Ker) = " + std::to_string(r.aq1) + " differs from l(O/J) = " + std::to_string(ell_J));
  ensure(r.aq2 >= 0, "negative second cotangent length");
  return r;
}

VenkateshReport venkatesh_check(const CIPresentation& pres) {
  const FiniteOAlgebra& a = pres.target();
  const IJLengths ij = I_and_J(pres);
  const AQLengths aq = aq_lengths(pres);
  const AlgebraMap to_cm = AlgebraMap::quotient(a, torsion_ideal(a));
  const DefectReport defect = wiles_defect(restrict_along_surjection(regular_module(to_cm.target()), to_cm));

  VenkateshReport r;
  r.ell_I = ij.ell_I;
  r.ell_J = ij.ell_J;
  r.ell_I_over_J = ij.ell_J - ij.ell_I;
  r.aq1 = aq.aq1;
  r.aq2 = aq.aq2;
  r.delta_B = defect.delta;
  r.minimal = pres.source().conormal_length() == a.conormal_length();
  ensure(r.delta_B == r.aq2 - r.ell_I_over_J, "defect of the Cohen-Macaulay quotient differs from aq2 - l(I/J)");
  ensure(r.delta_B <= r.ell_I, "defect of the Cohen-Macaulay quotient exceeds l(O/I)");
  ensure((r.delta_B == r.ell_I) == r.minimal, "equality with l(O/I) does not match minimality");
  return r;
}

GorsumReport gorsum_check(const AlgebraMap& alpha) {
  const FiniteOAlgebra& c = alpha.source();
  const FiniteOAlgebra& a = alpha.target();
  if (gorenstein_test(c).conclusion != Conclusion::Gorenstein) fail(ErrorKind::PreconditionFailed, "source is not Gorenstein");
  const FiniteOAlgebra b = cm_quotient(a);
  GorsumReport r;
  r.ell_psi_C = c.congruence_length();
  r.ell_psi_B = b.congruence_length();
  r.ell_I = ell_I_of(c, alpha.kernel());
  ensure(r.ell_psi_C == r.ell_psi_B + r.ell_I, "l(Psi_C) = " + std::to_string(r.ell_psi_C) + " but l(Psi_B) + l(O/I) = " +
                                                   std::to_string(r.ell_psi_B + r.ell_I));
  return r;
}

}  // namespace conmod
