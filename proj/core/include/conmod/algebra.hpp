#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conmod/omodule.hpp"

namespace conmod {

// Raw structure-constant description; FiniteOAlgebra::validate checks the axioms.
struct AlgebraData {
  DvrSpec spec;
  std::vector<std::string> basis_names;   // empty: b0, b1, ...
  Matrix module_relations;                // s x r, columns are O-relations among basis elements
  std::vector<std::vector<Vector>> mult;  // mult[i][j] = coordinates of b_i * b_j
  Vector one;
  Vector lambda;  // augmentation value on each basis element
};

// An ideal given by O-generators (columns, basis coordinates). Spans are always taken together
// with the module relations of the algebra it belongs to.
struct Ideal {
  Matrix generators;
};

// Commutative local O-algebra, finite as an O-module, with augmentation lambda: A -> O.
// In Artinian mode the underlying module has finite length and lambda is only read modulo
// the uniformizer (so it is the residue map A -> k).
class FiniteOAlgebra {
 public:
  static FiniteOAlgebra validate(AlgebraData data);
  static FiniteOAlgebra validate_artinian(AlgebraData data);

  const AlgebraData& data() const noexcept { return data_; }
  const DvrSpec& spec() const noexcept { return data_.spec; }
  std::size_t basis_size() const noexcept { return data_.one.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return data_.basis_names; }
  const Matrix& module_relations() const noexcept { return data_.module_relations; }
  const OModule& underlying() const noexcept { return underlying_; }
  const Vector& one() const noexcept { return data_.one; }
  const Vector& lambda() const noexcept { return data_.lambda; }
  bool is_artinian() const noexcept { return artinian_; }

  // Left multiplication by b_i (columns are b_i * b_j).
  const Matrix& multiplication_matrix(std::size_t i) const { return mult_matrices_.at(i); }
  Matrix multiplication_matrix(const Vector& a) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  DvrElement augmentation(const Vector& a) const;
  // a - b lies in the module relations.
  bool equal_in_algebra(const Vector& a, const Vector& b) const;

  const Ideal& augmentation_ideal() const noexcept { return augmentation_ideal_; }
  const Ideal& maximal_ideal() const noexcept { return maximal_ideal_; }
  // A[p_A]; in Artinian mode this is the socle A[m_A].
  const Ideal& congruence_ideal() const noexcept { return congruence_ideal_; }
  long conormal_length() const noexcept { return conormal_length_; }
  // Valuation of lambda(I_A); not defined in Artinian mode.
  long congruence_length() const;
  long rank() const noexcept { return rank_; }
  bool depth_at_least_one() const noexcept { return depth_ok_; }

 private:
  FiniteOAlgebra(AlgebraData data, bool artinian);

  AlgebraData data_;
  bool artinian_;
  OModule underlying_;
  std::vector<Matrix> mult_matrices_;
  Ideal augmentation_ideal_;
  Ideal maximal_ideal_;
  Ideal congruence_ideal_;
  long conormal_length_ = 0;
  long congruence_length_ = -1;
  long rank_ = 0;
  bool depth_ok_ = false;
};

// Ideal calculus (generator spans include the module relations).
Ideal ideal_closure(const FiniteOAlgebra& a, const Matrix& gens);
Ideal ideal_product(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j);
Ideal ideal_sum(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j);
bool ideal_contains(const FiniteOAlgebra& a, const Ideal& big, const Ideal& small);
bool ideal_equal(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j);
bool ideal_is_zero(const FiniteOAlgebra& a, const Ideal& i);
Ideal zero_ideal(const FiniteOAlgebra& a);
Ideal unit_ideal(const FiniteOAlgebra& a);
// The O-module J (as a subquotient of the underlying module).
Subquotient ideal_submodule(const FiniteOAlgebra& a, const Ideal& j);

Ideal augmentation_ideal(const FiniteOAlgebra& a);
Ideal annihilator_of_ideal(const FiniteOAlgebra& a, const Ideal& j);
OModule conormal_module(const FiniteOAlgebra& a);
Subquotient conormal_subquotient(const FiniteOAlgebra& a);

struct CongruenceAlgebra {
  long valuation;  // lambda(I_A) = w^valuation O
  long length;     // length of O / lambda(I_A)
};
CongruenceAlgebra congruence_algebra(const FiniteOAlgebra& a);

bool depth_at_least_one(const FiniteOAlgebra& a);
Ideal torsion_ideal(const FiniteOAlgebra& a);
FiniteOAlgebra cm_quotient(const FiniteOAlgebra& a);
// Raises AugmentationNotInduced unless lambda vanishes on j.
FiniteOAlgebra quotient_by_ideal(const FiniteOAlgebra& a, const Ideal& j);
// A / wA as an Artinian algebra.
FiniteOAlgebra reduction_mod_uniformizer(const FiniteOAlgebra& a);

// rows of a_matrix are relations, columns the n variables: coker(O^c -> O^n).
OModule conormal_from_presentation(const Matrix& a_matrix);

// A generator g with A g = j when j is principal.
std::optional<Vector> principal_generator(const FiniteOAlgebra& a, const Ideal& j);

// A claimed monomial O-basis with the reduction of x_v * (basis monomial) for every variable.
// Compiled to structure constants; validity is left to FiniteOAlgebra::validate.
struct MonomialPresentation {
  DvrSpec spec;
  std::vector<std::string> variables;
  std::vector<std::vector<long>> basis;         // exponent vectors; must include the constant monomial
  std::vector<std::vector<Vector>> reductions;  // reductions[v][b] = coordinates of x_v * basis[b]
  Matrix module_relations;
  Vector variable_lambda;
};
AlgebraData compile_monomial_presentation(const MonomialPresentation& presentation);

// An O-algebra map given on bases (target.basis_size x source.basis_size).
class AlgebraMap {
 public:
  // Raises NotAlgebraMap or NotSurjective (when require_surjective).
  AlgebraMap(FiniteOAlgebra source, FiniteOAlgebra target, Matrix matrix, bool require_surjective = true);

  const FiniteOAlgebra& source() const noexcept { return source_; }
  const FiniteOAlgebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  Ideal kernel() const;
  bool is_injective() const;

  static AlgebraMap identity(const FiniteOAlgebra& a);
  // A -> A / j.
  static AlgebraMap quotient(const FiniteOAlgebra& a, const Ideal& j);

 private:
  FiniteOAlgebra source_;
  FiniteOAlgebra target_;
  Matrix matrix_;
};

}  // namespace conmod
