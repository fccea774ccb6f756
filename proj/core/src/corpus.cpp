#include "conmod/corpus.hpp"

#include <random>

namespace conmod {

namespace {

DvrElement integer(const DvrSpec& spec, long v) { return DvrElement::from_int(spec, v); }

DvrElement w_power(const DvrSpec& spec, long e) { return DvrElement::uniformizer_power(spec, e); }

// Structure constants from the left multiplication matrices of all basis elements.
AlgebraData from_actions(const DvrSpec& spec, std::vector<std::string> names, const std::vector<Matrix>& left,
                         Matrix relations, Vector lambda) {
  const std::size_t s = left.size();
  AlgebraData d{spec, std::move(names), std::move(relations), {}, unit_vector(spec, s, 0), std::move(lambda)};
  d.mult.assign(s, std::vector<Vector>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) d.mult[i][j] = left[i].col(j);
  return d;
}

Vector augmentation_at_zero(const DvrSpec& spec, std::size_t s) { return unit_vector(spec, s, 0); }

Ideal principal(const FiniteOAlgebra& a, const Vector& r) { return ideal_closure(a, Matrix::column(r)); }

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 rng_;
};

Vector random_element(const FiniteOAlgebra& a, Draw& draw) {
  Vector r;
  for (std::size_t i = 0; i < a.basis_size(); ++i)
    r.push_back(integer(a.spec(), draw.between(-2, 2)) * w_power(a.spec(), draw.between(0, 1)));
  if (a.equal_in_algebra(r, zero_vector(a.spec(), a.basis_size()))) r = a.one();
  return r;
}

}  // namespace

DvrElement uniformizer_polynomial(const DvrSpec& spec, const std::vector<long>& coefficients) {
  DvrElement r(spec);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) r += integer(spec, coefficients[i]) * w_power(spec, static_cast<long>(i));
  return r;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::Glue: return "glue";
    case Family::Depth0Example: return "depth0";
    case Family::GorNotCI: return "gor-not-ci";
    case Family::MonogenicCI: return "monogenic-ci";
    case Family::MultiGlue: return "multi-glue";
    case Family::RandomMonogenic: return "random-monogenic";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& info : list_families())
    if (info.name == name) return info.family;
  return std::nullopt;
}

std::vector<FamilyInfo> list_families() {
  return {
      {Family::Trivial, "trivial", "O itself"},
      {Family::Glue, "glue", "O[x]/(x^2 - w^m x), parameter m"},
      {Family::Depth0Example, "depth0", "O[x]/(w x, x^2), depth zero"},
      {Family::GorNotCI, "gor-not-ci", "rank-5 Gorenstein algebra that is not a complete intersection"},
      {Family::MonogenicCI, "monogenic-ci", "O[x]/(x g(x)), g given by coefficient valuations"},
      {Family::MultiGlue, "multi-glue", "r-fold fibre product of O over k, parameter r"},
      {Family::RandomMonogenic, "random-monogenic", "seeded monogenic complete intersection, parameter degree"},
  };
}

FiniteOAlgebra build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Trivial: return trivial_algebra(spec.dvr);
    case Family::Glue: return glue_algebra(spec.dvr, spec.parameter);
    case Family::Depth0Example: return depth0_algebra(spec.dvr);
    case Family::GorNotCI: return gor_not_ci_algebra(spec.dvr);
    case Family::MonogenicCI: return monogenic_algebra(spec.dvr, spec.valuations);
    case Family::MultiGlue: return multi_glue_algebra(spec.dvr, spec.parameter);
    case Family::RandomMonogenic: return random_monogenic_algebra(spec.dvr, spec.seed, spec.parameter);
  }
  fail(ErrorKind::InvalidArgument, "unknown family");
}

FiniteOAlgebra trivial_algebra(const DvrSpec& spec) {
  return FiniteOAlgebra::validate(
      from_actions(spec, {"1"}, {Matrix::identity(spec, 1)}, Matrix(spec, 1, 0), augmentation_at_zero(spec, 1)));
}

FiniteOAlgebra monogenic_algebra(const DvrSpec& spec, const std::vector<long>& valuations, const std::vector<long>& units) {
  const std::size_t k = valuations.size();
  if (!units.empty() && units.size() != k) fail(ErrorKind::DimensionMismatch, "one unit per coefficient");
  const std::size_t n = k + 1;
  // x * x^j = x^(j+1); x * x^k = -sum_i c_i x^(i+1).
  Matrix x(spec, n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) x.at(j + 1, j) = integer(spec, 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (valuations[i] < 0) continue;
    const DvrElement c = integer(spec, units.empty() ? 1 : units[i]) * w_power(spec, valuations[i]);
    x.at(i + 1, n - 1) = -c;
  }
  std::vector<Matrix> left{Matrix::identity(spec, n)};
  std::vector<std::string> names{"1"};
  for (std::size_t a = 1; a < n; ++a) {
    left.push_back(x * left.back());
    names.push_back(a == 1 ? "x" : "x^" + std::to_string(a));
  }
  return FiniteOAlgebra::validate(from_actions(spec, std::move(names), left, Matrix(spec, n, 0), augmentation_at_zero(spec, n)));
}

FiniteOAlgebra glue_algebra(const DvrSpec& spec, long m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "glue exponent must be positive");
  return monogenic_algebra(spec, {m}, {-1});
}

FiniteOAlgebra depth0_algebra(const DvrSpec& spec) {
  Matrix x(spec, 2, 2);
  x.at(1, 0) = integer(spec, 1);
  Matrix relations(spec, 2, 1);
  relations.at(1, 0) = w_power(spec, 1);
  return FiniteOAlgebra::validate(
      from_actions(spec, {"1", "x"}, {Matrix::identity(spec, 2), x}, relations, augmentation_at_zero(spec, 2)));
}

FiniteOAlgebra gor_not_ci_algebra(const DvrSpec& spec) {
  // basis 0:1 1:x 2:y 3:z 4:x^2
  const DvrElement w = w_power(spec, 1);
  const DvrElement w2 = w_power(spec, 2);
  auto e = [&](std::size_t i, const DvrElement& c) {
    Vector v = zero_vector(spec, 5);
    v[i] = c;
    return v;
  };
  const DvrElement one = integer(spec, 1);
  AlgebraData d{spec, {"1", "x", "y", "z", "x^2"}, Matrix(spec, 5, 0), {}, unit_vector(spec, 5, 0), unit_vector(spec, 5, 0)};
  d.mult.assign(5, std::vector<Vector>(5));
  for (std::size_t i = 0; i < 5; ++i) {
    d.mult[0][i] = unit_vector(spec, 5, i);
    d.mult[i][0] = unit_vector(spec, 5, i);
  }
  auto set = [&](std::size_t i, std::size_t j, Vector v) {
    d.mult[i][j] = v;
    d.mult[j][i] = std::move(v);
  };
  set(1, 1, e(4, one));
  set(2, 2, e(4, one));
  set(3, 3, e(4, one));
  set(1, 2, e(3, w));
  set(1, 3, e(2, w));
  set(2, 3, e(1, w));
  set(4, 1, e(1, w2));
  set(4, 2, e(2, w2));
  set(4, 3, e(3, w2));
  set(4, 4, e(4, w2));
  return FiniteOAlgebra::validate(std::move(d));
}

Matrix gor_not_ci_linear_parts(const DvrSpec& spec) {
  Matrix m(spec, 5, 3);
  for (std::size_t i = 0; i < 3; ++i) m.at(2 + i, i) = w_power(spec, 1);
  return m;
}

FiniteOAlgebra multi_glue_algebra(const DvrSpec& spec, long r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "need at least one factor");
  const auto s = static_cast<std::size_t>(r);
  std::vector<Matrix> left{Matrix::identity(spec, s)};
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < s; ++i) {
    Matrix x(spec, s, s);
    x.at(i, 0) = integer(spec, 1);
    x.at(i, i) = w_power(spec, 1);
    left.push_back(std::move(x));
    names.push_back("x" + std::to_string(i));
  }
  return FiniteOAlgebra::validate(from_actions(spec, std::move(names), left, Matrix(spec, s, 0), augmentation_at_zero(spec, s)));
}

FiniteOAlgebra random_monogenic_algebra(const DvrSpec& spec, std::uint64_t seed, long degree) {
  if (degree < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  Draw draw(seed);
  const long unit_bound = static_cast<long>(std::min<std::uint64_t>(spec.prime() - 1, 1000));
  std::vector<long> valuations;
  std::vector<long> units;
  for (long i = 0; i + 1 < degree; ++i) {
    const bool constant_term = i == 0;
    valuations.push_back(!constant_term && draw.below(3) == 0 ? -1 : draw.between(1, constant_term ? 3 : 2));
    units.push_back(draw.between(1, unit_bound));
  }
  return monogenic_algebra(spec, valuations, units);
}

FiniteOAlgebra truncated_dvr(const DvrSpec& spec, long n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "truncation exponent must be positive");
  Matrix relations(spec, 1, 1);
  relations.at(0, 0) = w_power(spec, n);
  return FiniteOAlgebra::validate_artinian(
      from_actions(spec, {"1"}, {Matrix::identity(spec, 1)}, relations, augmentation_at_zero(spec, 1)));
}

FiniteOAlgebra square_zero_artinian(const DvrSpec& spec, long n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative variable count");
  const auto s = static_cast<std::size_t>(n) + 1;
  std::vector<Matrix> left{Matrix::identity(spec, s)};
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < s; ++i) {
    Matrix x(spec, s, s);
    x.at(i, 0) = integer(spec, 1);
    left.push_back(std::move(x));
    names.push_back("x" + std::to_string(i));
  }
  const Matrix relations = w_power(spec, 1) * Matrix::identity(spec, s);
  return FiniteOAlgebra::validate_artinian(from_actions(spec, std::move(names), left, relations, augmentation_at_zero(spec, s)));
}

CanonicalModules canonical_modules(const FiniteOAlgebra& a) {
  return CanonicalModules{regular_module(a), augmentation_module(a), ideal_as_module(a, a.congruence_ideal()),
                          ideal_as_module(a, a.augmentation_ideal())};
}

AModule random_module(const FiniteOAlgebra& a, std::uint64_t seed, std::size_t size, bool torsion_free_only) {
  Draw draw(seed);
  const std::uint64_t kinds = torsion_free_only ? 6 : 8;
  auto block = [&]() -> AModule {
    switch (draw.below(kinds)) {
      case 0: return regular_module(a);
      case 1: return augmentation_module(a);
      case 2: return ideal_as_module(a, a.congruence_ideal());
      case 3: return ideal_as_module(a, a.augmentation_ideal());
      case 4: return ideal_as_module(a, principal(a, random_element(a, draw)));
      case 5: return free_module(a, 2);
      case 6: return quotient_module(regular_module(a), principal(a, random_element(a, draw)).generators);
      default: return residue_module(a);
    }
  };
  if (size == 0) return free_module(a, 0);
  AModule m = block();
  for (std::size_t i = 1; i < size; ++i) m = direct_sum(m, block());
  return m;
}

Matrix random_valuation_matrix(const DvrSpec& spec, std::uint64_t seed, std::size_t rows, std::size_t cols, long max_valuation,
                               long numerator_bound) {
  if (max_valuation < 0) fail(ErrorKind::InvalidArgument, "negative valuation bound");
  std::mt19937_64 rng(seed);
  const long p = static_cast<long>(spec.prime());
  Matrix a(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long v = static_cast<long>(rng() % static_cast<std::uint64_t>(max_valuation + 1));
      if (spec.kind() == DvrKind::RatFuncLocal) {
        FpPoly u(4);
        u[0] = 1 + rng() % (spec.prime() - 1);
        for (std::size_t k = 1; k < 4; ++k) u[k] = rng() % spec.prime();
        a.at(i, j) = DvrElement::from_polys(spec, std::move(u), FpPoly{1}) * w_power(spec, v);
        continue;
      }
      long scale = 1;
      for (long e = 0; e < v; ++e) scale *= p;
      const long limit = std::max(2L, numerator_bound / scale);
      long u = 0;
      do {
        u = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * limit - 1)) - (limit - 1);
      } while (u % p == 0);
      a.at(i, j) = integer(spec, u * scale);
    }
  return a;
}

CIPresentation glue_onto_depth0(const DvrSpec& spec, long m) {
  Matrix linear(spec, 1, 1);
  linear.at(0, 0) = -w_power(spec, m);
  return CIPresentation(glue_algebra(spec, m), depth0_algebra(spec), Matrix::identity(spec, 2), linear);
}

FiniteOAlgebra gor_not_ci_cover(const DvrSpec& spec) {
  using Poly = std::vector<long>;
  using Table = std::vector<std::vector<Poly>>;
  // Basis 1, z, z^2, y, yz, yz^2, x, xz; entry [b][c] = coefficient of basis c in (variable * basis b),
  // as a polynomial in w.
  const Table x_table{{{}, {}, {}, {}, {}, {}, {1}, {}},
                      {{}, {}, {}, {}, {}, {}, {}, {1}},
                      {{}, {}, {}, {}, {0, 1}, {1}, {}, {0, -1}},
                      {{}, {0, 1}, {}, {0, -1}, {}, {}, {}, {1}},
                      {{}, {}, {0, 1}, {}, {}, {1}, {}, {0, -1}},
                      {{}, {0, 0, 0, 1}, {}, {}, {}, {0, -1}, {}, {0, 0, 1}},
                      {{}, {}, {1}, {}, {1}, {}, {0, -1}, {}},
                      {{}, {0, 0, 1}, {}, {}, {}, {1}, {}, {0, -1}}};
  const Table y_table{{{}, {}, {}, {1}, {}, {}, {}, {}},
                      {{}, {}, {}, {}, {1}, {}, {}, {}},
                      {{}, {}, {}, {}, {}, {1}, {}, {}},
                      {{}, {}, {1}, {0, 1}, {1}, {}, {0, -1}, {-1}},
                      {{}, {0, 0, 1}, {}, {}, {}, {}, {}, {}},
                      {{}, {}, {0, 0, 1}, {}, {}, {}, {}, {}},
                      {{}, {0, 1}, {}, {0, -1}, {}, {}, {}, {1}},
                      {{}, {}, {0, 1}, {}, {}, {1}, {}, {0, -1}}};
  const Table z_table{{{}, {1}, {}, {}, {}, {}, {}, {}},
                      {{}, {}, {1}, {}, {}, {}, {}, {}},
                      {{}, {0, 0, 1}, {}, {}, {}, {}, {}, {}},
                      {{}, {}, {}, {}, {1}, {}, {}, {}},
                      {{}, {}, {}, {}, {}, {1}, {}, {}},
                      {{}, {}, {}, {}, {0, 0, 1}, {}, {}, {}},
                      {{}, {}, {}, {}, {}, {}, {}, {1}},
                      {{}, {}, {}, {}, {0, 1}, {1}, {}, {0, -1}}};
  MonomialPresentation mp{spec, {"x", "y", "z"}, {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {1, 0, 0}, {1, 0, 1}},
                          {}, Matrix(spec, 8, 0), zero_vector(spec, 3)};
  for (const Table* table : {&x_table, &y_table, &z_table}) {
    std::vector<Vector> reductions;
    for (const auto& row : *table) {
      Vector v;
      for (const Poly& c : row) v.push_back(uniformizer_polynomial(spec, c));
      reductions.push_back(std::move(v));
    }
    mp.reductions.push_back(std::move(reductions));
  }
  return FiniteOAlgebra::validate(compile_monomial_presentation(mp));
}

CIPresentation gor_not_ci_presentation(const DvrSpec& spec) {
  // images of 1, z, z^2, y, yz, yz^2, x, xz in the basis 1, x, y, z, x^2
  const DvrElement w = w_power(spec, 1);
  Matrix alpha(spec, 5, 8);
  alpha.at(0, 0) = integer(spec, 1);
  alpha.at(3, 1) = integer(spec, 1);
  alpha.at(4, 2) = integer(spec, 1);
  alpha.at(2, 3) = integer(spec, 1);
  alpha.at(1, 4) = w;
  alpha.at(2, 5) = w_power(spec, 2);
  alpha.at(1, 6) = integer(spec, 1);
  alpha.at(2, 7) = w;
  const Matrix linear = w * Matrix::identity(spec, 3);
  return CIPresentation(gor_not_ci_cover(spec), gor_not_ci_algebra(spec), alpha, linear);
}

CIPresentation identity_presentation(const FiniteOAlgebra& a) {
  return CIPresentation(a, a, Matrix::identity(a.spec(), a.basis_size()));
}

}  // namespace conmod
