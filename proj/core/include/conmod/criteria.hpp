#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "conmod/amodule.hpp"

namespace conmod {

struct MultiplicityResult {
  long e = 0;
  long stabilization_index = 0;
  std::optional<long> superficial_crosscheck;  // l(M / y M) for the certified superficial element y
  std::optional<Vector> superficial_element;   // y, tried in the order w, w + c p_j, w + c sum p_j
  std::vector<long> hilbert;                   // n -> l(m^n M / m^(n+1) M) as computed
};

// Hilbert-Samuel multiplicity with respect to m_A; for an Artinian algebra this is the length.
// With positive depth the value is certified by a nonzerodivisor y with y m^n M = m^(n+1) M,
// which forces the Hilbert function to equal l(M / y M) from n on. With torsion, e is taken from
// M modulo its finite-length torsion. Raises StabilizationFailure when no such y is found before
// the cap, or when l(M / y M) disagrees with the Hilbert value.
MultiplicityResult multiplicity(const AModule& m);
long algebra_multiplicity(const FiniteOAlgebra& a);

enum class Conclusion {
  Free,
  NotFree,
  CompleteIntersection,
  NotCI,
  Gorenstein,
  NotGorenstein,
  Isomorphism,
  Inconclusive,
};
std::string_view to_string(Conclusion c);

using CertificateValue = std::variant<bool, long, std::string>;

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::pair<std::string, CertificateValue>> certificate;  // insertion order

  Verdict& record(std::string key, CertificateValue value);
  const CertificateValue* find(std::string_view key) const;
  long number(std::string_view key) const;
  bool flag(std::string_view key) const;
};

// Socle A[m_A] of an Artinian algebra, and its length.
Ideal socle(const FiniteOAlgebra& artinian);
long socle_length(const FiniteOAlgebra& artinian);

Verdict gorenstein_test(const FiniteOAlgebra& a);
Verdict ci_test(const FiniteOAlgebra& a);

// r = n.algebra() must be Artinian Gorenstein (NotGorensteinInput otherwise).
Verdict zero_dim_gorenstein_free_test(const AModule& n);
// Requires Gorenstein A and depth_ok(M) (PreconditionFailed otherwise).
Verdict freeness_prediamond(const AModule& m);
// Requires M nonzero, d >= 1 and depth_ok(M).
Verdict diamond_test(const AModule& m);
// Requires a target of positive depth.
Verdict iso_criteria(const AlgebraMap& map);
Verdict wiles_criterion(const AlgebraMap& map);
// Over an Artinian algebra; M nonzero.
Verdict wiebe_module_test(const AModule& m);

// Zeroth Fitting ideal over m.algebra(), from a minimal presentation.
Ideal fitting_ideal(const AModule& m);
// Lift a minimal generating set and test the kernel of A^nu -> M.
Verdict direct_freeness_oracle(const AModule& m);

}  // namespace conmod
