#pragma once

#include <cstddef>

#include "conmod/linalg.hpp"

namespace conmod {

// coker(relations): O^generator_count modulo the column span of relations.
class OModule {
 public:
  OModule(std::size_t generator_count, Matrix relations);

  static OModule free(const DvrSpec& spec, std::size_t rank);
  // O/w^exponent.
  static OModule cyclic(const DvrSpec& spec, long exponent);

  const DvrSpec& spec() const noexcept { return relations_.spec(); }
  std::size_t generator_count() const noexcept { return generator_count_; }
  const Matrix& relations() const noexcept { return relations_; }

  CokernelInvariants invariants() const { return cokernel_invariants(relations_); }

 private:
  std::size_t generator_count_;
  Matrix relations_;
};

OModule direct_sum(const OModule& a, const OModule& b);

// span(numerator + R) / span(denominator + R) inside ambient = O^g / R, with generators as
// columns in ambient coordinates.
class Subquotient {
 public:
  // Raises InvalidArgument unless every denominator generator lies in the numerator span.
  Subquotient(OModule ambient, Matrix numerator, Matrix denominator);

  static Subquotient whole(const OModule& ambient);
  // The submodule generated by gens, with nothing divided out beyond the ambient relations.
  static Subquotient submodule(const OModule& ambient, Matrix gens);

  const OModule& ambient() const noexcept { return ambient_; }
  const Matrix& numerator() const noexcept { return numerator_; }
  const Matrix& denominator() const noexcept { return denominator_; }

  // A presentation of the subquotient on an O-basis of the numerator lattice.
  OModule as_module() const;
  CokernelInvariants invariants() const { return as_module().invariants(); }
  bool is_zero() const;

 private:
  OModule ambient_;
  Matrix numerator_;
  Matrix denominator_;
};

// Raises InfiniteLengthError when the free rank is positive.
long length(const OModule& m);
long length(const Subquotient& m);

long free_rank(const OModule& m);
long free_rank(const Subquotient& m);

// Elements killed by a power of the uniformizer.
Subquotient torsion_part(const OModule& m);
Subquotient torsion_part(const Subquotient& m);

// Both require the same ambient and the same denominator span (AmbientMismatch otherwise).
Subquotient sum(const Subquotient& a, const Subquotient& b);
Subquotient intersect(const Subquotient& a, const Subquotient& b);

// f: source generators -> target coordinates (target.generator_count x source.generator_count).
// Raises IllDefinedMap when f does not carry source relations into target relations.
Subquotient kernel_of_map(const Matrix& f, const OModule& source, const OModule& target);

// Lattice helpers on O^n (columns are generators).
bool lattice_contains(const Matrix& gens, const Matrix& vectors);
Matrix lattice_intersection(const Matrix& a, const Matrix& b);
// {x : w^k x in span(gens) for some k}.
Matrix saturation(const Matrix& gens, std::size_t dimension);

}  // namespace conmod
