#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conmod/venkatesh.hpp"

namespace conmod {

enum class Family { Trivial, Glue, Depth0Example, GorNotCI, MonogenicCI, MultiGlue, RandomMonogenic };

// parameter: m for Glue, r for MultiGlue, degree for RandomMonogenic.
// valuations: MonogenicCI g = x^k + sum_i w^valuations[i] x^i (a negative entry means a zero coefficient).
struct FamilySpec {
  Family family = Family::Trivial;
  DvrSpec dvr = DvrSpec::zlocal(5);
  long parameter = 1;
  std::vector<long> valuations;
  std::uint64_t seed = 0;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilyInfo {
  Family family;
  std::string name;
  std::string description;
};
std::vector<FamilyInfo> list_families();

FiniteOAlgebra build(const FamilySpec& spec);

// sum_i coefficients[i] * w^i
DvrElement uniformizer_polynomial(const DvrSpec& spec, const std::vector<long>& coefficients);

// O itself.
FiniteOAlgebra trivial_algebra(const DvrSpec& spec);
// O[x]/(x^2 - w^m x) = O x_{O/w^m} O.
FiniteOAlgebra glue_algebra(const DvrSpec& spec, long m);
// O[x]/(w x, x^2).
FiniteOAlgebra depth0_algebra(const DvrSpec& spec);
// O[x,y,z]/(x^2-y^2, x^2-z^2, wx-yz, wy-xz, wz-xy) on the basis 1, x, y, z, x^2.
FiniteOAlgebra gor_not_ci_algebra(const DvrSpec& spec);
// Linear parts of the five defining relations above (rows), in the variables x, y, z.
Matrix gor_not_ci_linear_parts(const DvrSpec& spec);
// O[x]/(x g(x)) with g monic, coefficient of x^i equal to units[i] * w^valuations[i].
FiniteOAlgebra monogenic_algebra(const DvrSpec& spec, const std::vector<long>& valuations,
                                 const std::vector<long>& units = {});
// r-fold fibre product O x_k ... x_k O: basis 1, x_1..x_{r-1}, x_i x_j = delta_ij w x_i.
FiniteOAlgebra multi_glue_algebra(const DvrSpec& spec, long r);
// Monogenic complete intersection of the given degree with seed-determined coefficients.
FiniteOAlgebra random_monogenic_algebra(const DvrSpec& spec, std::uint64_t seed, long degree);

// Artinian algebras over O/w^n.
FiniteOAlgebra truncated_dvr(const DvrSpec& spec, long n);
// k[x_1..x_n] / (all products x_i x_j): socle of length n.
FiniteOAlgebra square_zero_artinian(const DvrSpec& spec, long n);

struct CanonicalModules {
  AModule regular;
  AModule augmentation;      // O via lambda
  AModule congruence_ideal;  // I_A
  AModule augmentation_ideal;
};
CanonicalModules canonical_modules(const FiniteOAlgebra& a);

// Seed-deterministic direct sum of size building blocks (free, O via lambda, ideals, quotients,
// residue field). With torsion_free_only, blocks that can carry uniformizer torsion are skipped.
AModule random_module(const FiniteOAlgebra& a, std::uint64_t seed, std::size_t size, bool torsion_free_only = false);

// Seeded rows x cols matrix with entries w^v * u, v uniform in 0..max_valuation and u a unit.
// ZLocal: integers with |w^v u| < numerator_bound. RatFuncLocal: u a polynomial of degree < 4
// with nonzero constant term.
Matrix random_valuation_matrix(const DvrSpec& spec, std::uint64_t seed, std::size_t rows, std::size_t cols,
                               long max_valuation = 3, long numerator_bound = 1000000);

// Presentations used by the cotangent checks.
// O[x]/(x^2 - w^m x) -> O[x]/(w x, x^2); minimal exactly for m = 1.
CIPresentation glue_onto_depth0(const DvrSpec& spec, long m);
// The rank-8 complete intersection O[x,y,z]/(f1, f2, f3) onto the Gorenstein non-CI algebra, with
// f1 = wx - yz + x^2 - z^2, f2 = wy - xz + x^2 - y^2, f3 = wz - xy + x^2 - y^2.
FiniteOAlgebra gor_not_ci_cover(const DvrSpec& spec);
CIPresentation gor_not_ci_presentation(const DvrSpec& spec);
CIPresentation identity_presentation(const FiniteOAlgebra& a);

}  // namespace conmod
