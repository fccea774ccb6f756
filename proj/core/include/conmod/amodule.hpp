#pragma once

#include <memory>
#include <vector>

#include "conmod/algebra.hpp"

namespace conmod {

// A finitely generated module over a FiniteOAlgebra: an O-module coker(o_relations) on
// generator_count generators, with one O-linear action matrix per algebra basis element.
class AModule {
 public:
  // Validates well-definedness, the structure constants, and the unit; raises InvalidModule.
  AModule(std::shared_ptr<const FiniteOAlgebra> algebra, std::size_t generator_count, Matrix o_relations,
          std::vector<Matrix> action);
  AModule(const FiniteOAlgebra& algebra, std::size_t generator_count, Matrix o_relations, std::vector<Matrix> action);

  const FiniteOAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const FiniteOAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  const DvrSpec& spec() const noexcept { return algebra_->spec(); }
  std::size_t generator_count() const noexcept { return underlying_.generator_count(); }
  const Matrix& o_relations() const noexcept { return underlying_.relations(); }
  const OModule& underlying() const noexcept { return underlying_; }
  const std::vector<Matrix>& action() const noexcept { return action_; }
  // Action of an algebra element given in basis coordinates.
  Matrix action_of(const Vector& element) const;

  // Positive depth: no uniformizer-power torsion in the underlying O-module.
  bool depth_ok() const;
  bool is_zero() const;

 private:
  std::shared_ptr<const FiniteOAlgebra> algebra_;
  OModule underlying_;
  std::vector<Matrix> action_;
};

struct DefectReport {
  long d = 0;
  long ell_phi = 0;
  long ell_psi_M = 0;
  long ell_psi_bar = 0;
  long ell_gap = 0;
  long delta = 0;
  bool depth_ok = false;
};

// M[J] = {m : J m = 0}.
Subquotient torsion_submodule(const AModule& m, const Ideal& j);
// J M.
Subquotient ideal_times_module(const AModule& m, const Ideal& j);
// M / (M[p_A] + M[I_A]).
Subquotient congruence_module(const AModule& m);
// M / (M[I_A] + I_A M).
Subquotient bar_congruence_module(const AModule& m);
// M[p_A] / I_A M.
Subquotient defect_gap_module(const AModule& m);
// Free rank of M[p_A].
long rank_d(const AModule& m);
// d * l(Phi_A) - l(Psi_A(M)), with the decomposition d * delta_A(A) + gap re-verified under depth_ok.
DefectReport wiles_defect(const AModule& m);
// Annihilator of M as an ideal of A.
Ideal module_annihilator(const AModule& m);

// Pull back the action along a surjection source -> target, where m lives over the target.
AModule restrict_along_surjection(const AModule& m, const AlgebraMap& map);

// Builders.
AModule free_module(const FiniteOAlgebra& a, std::size_t rank);
AModule regular_module(const FiniteOAlgebra& a);
AModule direct_sum(const AModule& m, const AModule& n);
// O with A acting through lambda.
AModule augmentation_module(const FiniteOAlgebra& a);
// The residue field k = O / w with A acting through lambda.
AModule residue_module(const FiniteOAlgebra& a);
AModule ideal_as_module(const FiniteOAlgebra& a, const Ideal& j);
// span(numerator + R) / span(denominator + R); both must be A-stable (InvalidArgument otherwise).
AModule subquotient_module(const AModule& m, const Matrix& numerator, const Matrix& denominator);
AModule submodule(const AModule& m, const Matrix& generators);
AModule quotient_module(const AModule& m, const Matrix& sub_generators);

// Minimal A-generators of M (columns in M's coordinates), lifted from a k-basis of M / m_A M.
Matrix minimal_generators(const AModule& m);

}  // namespace conmod
