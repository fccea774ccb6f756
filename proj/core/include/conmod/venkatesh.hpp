#pragma once

#include <optional>

#include "conmod/criteria.hpp"

namespace conmod {

// A surjection alpha: C -> A from a complete intersection C, with lambda_A o alpha = lambda_C.
class CIPresentation {
 public:
  // Raises NotAlgebraMap / NotSurjective for a bad map, PreconditionFailed when C is not a
  // complete intersection, InvalidArgument when linear_part disagrees with l(Phi_C).
  CIPresentation(FiniteOAlgebra source, FiniteOAlgebra target, Matrix alpha, std::optional<Matrix> linear_part = {});

  const AlgebraMap& map() const noexcept { return map_; }
  const FiniteOAlgebra& source() const noexcept { return map_.source(); }
  const FiniteOAlgebra& target() const noexcept { return map_.target(); }
  const Matrix& alpha() const noexcept { return map_.matrix(); }
  const std::optional<Matrix>& linear_part() const noexcept { return linear_part_; }

 private:
  AlgebraMap map_;
  std::optional<Matrix> linear_part_;
};

Ideal kernel_ideal(const CIPresentation& pres);

struct IJLengths {
  long ell_I = 0;  // I = lambda_C(ann_C Ker)
  long ell_J = 0;  // J = lambda_C(Fitt_C Ker)
};
IJLengths I_and_J(const CIPresentation& pres);

struct AQLengths {
  long aq1 = 0;
  long aq2 = 0;
};
// Raises InternalInvariantViolation when l(Ker / p_C Ker) differs from l(O/J).
AQLengths aq_lengths(const CIPresentation& pres);

struct VenkateshReport {
  long ell_I = 0;
  long ell_J = 0;
  long ell_I_over_J = 0;
  long aq1 = 0;
  long aq2 = 0;
  long delta_B = 0;  // defect of the maximal Cohen-Macaulay quotient B as an A-module
  bool minimal = false;
};
VenkateshReport venkatesh_check(const CIPresentation& pres);

struct GorsumReport {
  long ell_psi_C = 0;
  long ell_psi_B = 0;
  long ell_I = 0;
};
// Requires a Gorenstein source; raises InternalInvariantViolation unless
// l(Psi_C) = l(Psi_B) + l(O/I).
GorsumReport gorsum_check(const AlgebraMap& alpha);

}  // namespace conmod
