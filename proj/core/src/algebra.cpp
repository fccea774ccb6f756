#include "conmod/algebra.hpp"

#include <sstream>

namespace conmod {

namespace {

Matrix lambda_row(const AlgebraData& d) { return Matrix::from_rows(d.spec, {d.lambda}, d.lambda.size()); }

Matrix scaled_identity(const DvrSpec& spec, std::size_t n, long exponent) {
  return DvrElement::uniformizer_power(spec, exponent) * Matrix::identity(spec, n);
}

void check_shapes(const AlgebraData& d) {
  const std::size_t s = d.one.size();
  if (s == 0) fail(ErrorKind::InvalidArgument, "an algebra needs at least one basis element");
  if (d.lambda.size() != s) fail(ErrorKind::DimensionMismatch, "lambda has the wrong length");
  if (d.module_relations.rows() != s) fail(ErrorKind::DimensionMismatch, "module relations have the wrong row count");
  if (!(d.module_relations.spec() == d.spec)) fail(ErrorKind::SpecMismatch, "module relations over another ring");
  if (!d.basis_names.empty() && d.basis_names.size() != s)
    fail(ErrorKind::DimensionMismatch, "basis names have the wrong length");
  if (d.mult.size() != s) fail(ErrorKind::DimensionMismatch, "structure constants have the wrong row count");
  for (const auto& row : d.mult) {
    if (row.size() != s) fail(ErrorKind::DimensionMismatch, "structure constants have the wrong column count");
    for (const auto& c : row)
      if (c.size() != s) fail(ErrorKind::DimensionMismatch, "structure constant vector has the wrong length");
  }
  for (const auto& x : d.one)
    if (!(x.spec() == d.spec)) fail(ErrorKind::SpecMismatch, "unit coordinates over another ring");
  for (const auto& x : d.lambda)
    if (!(x.spec() == d.spec)) fail(ErrorKind::SpecMismatch, "lambda over another ring");
}

DvrElement dot(const Vector& a, const Vector& b) {
  DvrElement r(a.front().spec());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

std::string name_of(const AlgebraData& d, std::size_t i) {
  return d.basis_names.empty() ? "b" + std::to_string(i) : d.basis_names[i];
}

// Does m_A^N fall into wA + R for some N <= s + 1?
bool residually_nilpotent(const FiniteOAlgebra& a, const Matrix& maximal) {
  const DvrSpec& spec = a.spec();
  const std::size_t s = a.basis_size();
  const Matrix base = hconcat(scaled_identity(spec, s, 1), a.module_relations());
  Matrix power = column_basis(hconcat(maximal, base));
  for (std::size_t n = 1; n <= s + 1; ++n) {
    if (lattice_contains(base, power)) return true;
    std::vector<Matrix> parts{base};
    for (std::size_t i = 0; i < maximal.cols(); ++i) parts.push_back(a.multiplication_matrix(maximal.col(i)) * power);
    power = column_basis(hconcat(spec, s, parts));
  }
  return lattice_contains(base, power);
}

// Well-defined modulo the relations, commutative, unital, associative.
void check_ring_axioms(const FiniteOAlgebra& a) {
  const AlgebraData& d = a.data();
  const DvrSpec& spec = d.spec;
  const std::size_t s = a.basis_size();
  const LinearSolver in_relations(d.module_relations);
  auto same = [&](const Vector& x, const Vector& y) { return in_relations.contains(x - y); };

  for (std::size_t i = 0; i < s; ++i)
    if (!in_relations.contains_all(a.multiplication_matrix(i) * d.module_relations))
      fail(ErrorKind::IllDefinedMultiplication, "multiplication by " + name_of(d, i) + " does not preserve the relations");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!same(d.mult[i][j], d.mult[j][i]))
        fail(ErrorKind::NotCommutative, name_of(d, i) + "*" + name_of(d, j) + " differs from the reverse product");
  const Matrix unit_action = a.multiplication_matrix(d.one);
  for (std::size_t j = 0; j < s; ++j)
    if (!same(unit_action.col(j), unit_vector(spec, s, j)))
      fail(ErrorKind::NotUnital, "one does not act as the identity on " + name_of(d, j));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Matrix left = a.multiplication_matrix(d.mult[i][j]);
      for (std::size_t k = 0; k < s; ++k)
        if (!same(left.col(k), a.multiplication_matrix(i).apply(d.mult[j][k])))
          fail(ErrorKind::NotAssociative,
               "(" + name_of(d, i) + "*" + name_of(d, j) + ")*" + name_of(d, k) + " differs from the other bracketing");
    }
}

}  // namespace

FiniteOAlgebra::FiniteOAlgebra(AlgebraData data, bool artinian)
    : data_(std::move(data)),
      artinian_(artinian),
      underlying_(data_.one.size(), data_.module_relations),
      augmentation_ideal_{Matrix(data_.spec, data_.one.size(), 0)},
      maximal_ideal_{Matrix(data_.spec, data_.one.size(), 0)},
      congruence_ideal_{Matrix(data_.spec, data_.one.size(), 0)} {
  const DvrSpec& spec = data_.spec;
  const std::size_t s = data_.one.size();
  mult_matrices_.reserve(s);
  for (std::size_t i = 0; i < s; ++i) mult_matrices_.push_back(Matrix::from_columns(spec, data_.mult[i], s));
}

Matrix FiniteOAlgebra::multiplication_matrix(const Vector& a) const {
  const std::size_t s = basis_size();
  if (a.size() != s) fail(ErrorKind::DimensionMismatch, "element has the wrong length");
  Matrix r(spec(), s, s);
  for (std::size_t i = 0; i < s; ++i)
    if (!a[i].is_zero()) r = r + a[i] * mult_matrices_[i];
  return r;
}

Vector FiniteOAlgebra::multiply(const Vector& a, const Vector& b) const { return multiplication_matrix(a).apply(b); }

DvrElement FiniteOAlgebra::augmentation(const Vector& a) const {
  if (a.size() != basis_size()) fail(ErrorKind::DimensionMismatch, "element has the wrong length");
  return dot(data_.lambda, a);
}

bool FiniteOAlgebra::equal_in_algebra(const Vector& a, const Vector& b) const {
  return lattice_contains(data_.module_relations, Matrix::column(a - b));
}

long FiniteOAlgebra::congruence_length() const {
  if (artinian_) fail(ErrorKind::PreconditionFailed, "congruence module of an Artinian algebra");
  return congruence_length_;
}

FiniteOAlgebra FiniteOAlgebra::validate(AlgebraData data) {
  check_shapes(data);
  const DvrSpec spec = data.spec;
  const std::size_t s = data.one.size();
  FiniteOAlgebra a(std::move(data), false);
  const AlgebraData& d = a.data_;
  const Matrix& rel = d.module_relations;
  check_ring_axioms(a);

  const Matrix lambda_on_relations = lambda_row(d) * rel;
  if (!lambda_on_relations.is_zero()) fail(ErrorKind::LambdaNotMultiplicative, "lambda does not vanish on the module relations");
  if (!a.augmentation(d.one).is_one()) fail(ErrorKind::LambdaNotMultiplicative, "lambda(one) is not 1");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j)
      if (!(a.augmentation(d.mult[i][j]) == d.lambda[i] * d.lambda[j]))
        fail(ErrorKind::LambdaNotMultiplicative, "lambda(" + name_of(d, i) + "*" + name_of(d, j) + ") != product of values");

  a.augmentation_ideal_ = Ideal{kernel_basis(lambda_row(d))};
  a.maximal_ideal_ = Ideal{hconcat(a.augmentation_ideal_.generators, Matrix::column(scaled(DvrElement::uniformizer_power(spec, 1), d.one)))};
  if (!residually_nilpotent(a, a.maximal_ideal_.generators))
    fail(ErrorKind::NotLocal, "the residual maximal ideal is not nilpotent modulo the uniformizer");

  const Subquotient phi = conormal_subquotient(a);
  const CokernelInvariants phi_inv = phi.invariants();
  if (phi_inv.free_rank > 0)
    fail(ErrorKind::ConormalInfinite, "conormal module has free rank " + std::to_string(phi_inv.free_rank));
  a.conormal_length_ = phi_inv.torsion_length();

  a.congruence_ideal_ = annihilator_of_ideal(a, a.augmentation_ideal_);
  Valuation best = Valuation::infinity();
  for (std::size_t c = 0; c < a.congruence_ideal_.generators.cols(); ++c)
    best = std::min(best, valuation(a.augmentation(a.congruence_ideal_.generators.col(c))));
  ensure(!best.is_infinite(), "lambda vanishes on the congruence ideal");
  a.congruence_length_ = best.value();

  const CokernelInvariants inv = a.underlying_.invariants();
  a.rank_ = inv.free_rank;
  a.depth_ok_ = inv.torsion_valuations.empty();
  return a;
}

FiniteOAlgebra FiniteOAlgebra::validate_artinian(AlgebraData data) {
  check_shapes(data);
  const DvrSpec spec = data.spec;
  const std::size_t s = data.one.size();
  FiniteOAlgebra a(std::move(data), true);
  const AlgebraData& d = a.data_;
  const Matrix& rel = d.module_relations;
  const CokernelInvariants inv = a.underlying_.invariants();
  if (inv.free_rank > 0) fail(ErrorKind::NotFiniteLength, "underlying module has positive free rank");
  check_ring_axioms(a);

  // Only the residue of lambda matters here.
  auto residue_of = [&](const Vector& x) { return residue(a.augmentation(x)); };
  for (std::size_t c = 0; c < rel.cols(); ++c)
    if (residue_of(rel.col(c)) != 0) fail(ErrorKind::LambdaNotMultiplicative, "residue of lambda does not vanish on relations");
  if (residue_of(d.one) != 1 % spec.prime()) fail(ErrorKind::LambdaNotMultiplicative, "lambda(one) is not 1 in the residue field");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const auto lhs = residue_of(d.mult[i][j]);
      const auto rhs = residue(d.lambda[i] * d.lambda[j]);
      if (lhs != rhs) fail(ErrorKind::LambdaNotMultiplicative, "residual lambda is not multiplicative");
    }

  // m = {x : lambda(x) in wO} = ker(lambda) + w*one.
  const Matrix maximal = hconcat(kernel_basis(lambda_row(d)), Matrix::column(scaled(DvrElement::uniformizer_power(spec, 1), d.one)));
  a.maximal_ideal_ = Ideal{column_basis(maximal)};
  a.augmentation_ideal_ = a.maximal_ideal_;
  if (!residually_nilpotent(a, a.maximal_ideal_.generators))
    fail(ErrorKind::NotLocal, "the residual maximal ideal is not nilpotent modulo the uniformizer");
  a.congruence_ideal_ = annihilator_of_ideal(a, a.maximal_ideal_);
  a.conormal_length_ = length(conormal_subquotient(a));
  a.rank_ = 0;
  a.depth_ok_ = false;
  return a;
}

Ideal ideal_closure(const FiniteOAlgebra& a, const Matrix& gens) {
  const std::size_t s = a.basis_size();
  if (gens.rows() != s) fail(ErrorKind::DimensionMismatch, "ideal generators have the wrong length");
  std::vector<Matrix> parts{gens};
  for (std::size_t i = 0; i < s; ++i) parts.push_back(a.multiplication_matrix(i) * gens);
  return Ideal{column_basis(hconcat(a.spec(), s, parts))};
}

Ideal ideal_product(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j) {
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < i.generators.cols(); ++c) parts.push_back(a.multiplication_matrix(i.generators.col(c)) * j.generators);
  return Ideal{column_basis(hconcat(a.spec(), a.basis_size(), parts))};
}

Ideal ideal_sum(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j) {
  (void)a;
  return Ideal{column_basis(hconcat(i.generators, j.generators))};
}

bool ideal_contains(const FiniteOAlgebra& a, const Ideal& big, const Ideal& small) {
  return lattice_contains(hconcat(big.generators, a.module_relations()), small.generators);
}

bool ideal_equal(const FiniteOAlgebra& a, const Ideal& i, const Ideal& j) {
  return ideal_contains(a, i, j) && ideal_contains(a, j, i);
}

bool ideal_is_zero(const FiniteOAlgebra& a, const Ideal& i) { return lattice_contains(a.module_relations(), i.generators); }

Ideal zero_ideal(const FiniteOAlgebra& a) { return Ideal{Matrix(a.spec(), a.basis_size(), 0)}; }

Ideal unit_ideal(const FiniteOAlgebra& a) { return Ideal{Matrix::identity(a.spec(), a.basis_size())}; }

Subquotient ideal_submodule(const FiniteOAlgebra& a, const Ideal& j) {
  return Subquotient::submodule(a.underlying(), j.generators);
}

Ideal augmentation_ideal(const FiniteOAlgebra& a) { return a.augmentation_ideal(); }

Ideal annihilator_of_ideal(const FiniteOAlgebra& a, const Ideal& j) {
  const std::size_t s = a.basis_size();
  const std::size_t k = j.generators.cols();
  if (k == 0) return unit_ideal(a);
  // a -> (a j_1, ..., a j_k) = (L_{j_1} a, ..., L_{j_k} a) into A^k.
  std::vector<Matrix> blocks;
  for (std::size_t c = 0; c < k; ++c) blocks.push_back(a.multiplication_matrix(j.generators.col(c)));
  const Matrix stacked = vconcat(a.spec(), s, blocks);
  std::vector<Matrix> rels(k, a.module_relations());
  const OModule target(s * k, block_diagonal(a.spec(), rels));
  return Ideal{kernel_of_map(stacked, a.underlying(), target).numerator()};
}

Subquotient conormal_subquotient(const FiniteOAlgebra& a) {
  const Ideal& p = a.augmentation_ideal();
  return Subquotient(a.underlying(), p.generators, ideal_product(a, p, p).generators);
}

OModule conormal_module(const FiniteOAlgebra& a) { return conormal_subquotient(a).as_module(); }

CongruenceAlgebra congruence_algebra(const FiniteOAlgebra& a) {
  const long v = a.congruence_length();
  return CongruenceAlgebra{v, v};
}

bool depth_at_least_one(const FiniteOAlgebra& a) { return a.depth_at_least_one(); }

Ideal torsion_ideal(const FiniteOAlgebra& a) { return Ideal{torsion_part(a.underlying()).numerator()}; }

FiniteOAlgebra quotient_by_ideal(const FiniteOAlgebra& a, const Ideal& j) {
  if (j.generators.rows() != a.basis_size()) fail(ErrorKind::DimensionMismatch, "ideal generators have the wrong length");
  const Ideal closed = ideal_closure(a, j.generators);
  for (std::size_t c = 0; c < closed.generators.cols(); ++c) {
    const DvrElement value = a.augmentation(closed.generators.col(c));
    const bool vanishes = a.is_artinian() ? residue(value) == 0 : value.is_zero();
    if (!vanishes) fail(ErrorKind::AugmentationNotInduced, "lambda does not vanish on the ideal");
  }
  AlgebraData d = a.data();
  d.module_relations = column_basis(hconcat(a.module_relations(), closed.generators));
  return a.is_artinian() ? FiniteOAlgebra::validate_artinian(std::move(d)) : FiniteOAlgebra::validate(std::move(d));
}

FiniteOAlgebra cm_quotient(const FiniteOAlgebra& a) { return quotient_by_ideal(a, torsion_ideal(a)); }

FiniteOAlgebra reduction_mod_uniformizer(const FiniteOAlgebra& a) {
  AlgebraData d = a.data();
  d.module_relations = column_basis(hconcat(a.module_relations(), scaled_identity(a.spec(), a.basis_size(), 1)));
  return FiniteOAlgebra::validate_artinian(std::move(d));
}

OModule conormal_from_presentation(const Matrix& a_matrix) {
  return OModule(a_matrix.cols(), a_matrix.transpose());
}

std::optional<Vector> principal_generator(const FiniteOAlgebra& a, const Ideal& j) {
  // Nakayama: any element of j outside m j generates j when j is principal.
  const Ideal mj = ideal_product(a, a.maximal_ideal(), j);
  const Matrix basis = column_basis(hconcat(j.generators, a.module_relations()));
  if (ideal_is_zero(a, j)) return zero_vector(a.spec(), a.basis_size());
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Vector g = basis.col(c);
    if (ideal_contains(a, mj, Ideal{Matrix::column(g)})) continue;
    if (ideal_equal(a, ideal_closure(a, Matrix::column(g)), j)) return g;
    return std::nullopt;
  }
  return std::nullopt;
}

AlgebraMap::AlgebraMap(FiniteOAlgebra source, FiniteOAlgebra target, Matrix matrix, bool require_surjective)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const std::size_t s = source_.basis_size();
  const std::size_t t = target_.basis_size();
  if (matrix_.rows() != t || matrix_.cols() != s) fail(ErrorKind::DimensionMismatch, "algebra map shape");
  const LinearSolver in_target(target_.module_relations());
  if (!in_target.contains_all(matrix_ * source_.module_relations()))
    fail(ErrorKind::NotAlgebraMap, "source relations do not map to target relations");
  if (!in_target.contains(matrix_.apply(source_.one()) - target_.one())) fail(ErrorKind::NotAlgebraMap, "one is not preserved");
  for (std::size_t i = 0; i < s; ++i) {
    const Vector image_i = matrix_.col(i);
    for (std::size_t j = i; j < s; ++j) {
      const Vector lhs = matrix_.apply(source_.data().mult[i][j]);
      const Vector rhs = target_.multiply(image_i, matrix_.col(j));
      if (!in_target.contains(lhs - rhs)) fail(ErrorKind::NotAlgebraMap, "products are not preserved");
    }
    const DvrElement diff = target_.augmentation(image_i) - source_.lambda()[i];
    const bool agrees = (source_.is_artinian() || target_.is_artinian()) ? residue(diff) == 0 : diff.is_zero();
    if (!agrees) fail(ErrorKind::NotAlgebraMap, "augmentations are not compatible");
  }
  if (require_surjective &&
      !lattice_contains(hconcat(matrix_, target_.module_relations()), Matrix::identity(target_.spec(), t)))
    fail(ErrorKind::NotSurjective, "map is not surjective");
}

Ideal AlgebraMap::kernel() const {
  return Ideal{kernel_of_map(matrix_, source_.underlying(), target_.underlying()).numerator()};
}

bool AlgebraMap::is_injective() const { return ideal_is_zero(source_, kernel()); }

AlgebraMap AlgebraMap::identity(const FiniteOAlgebra& a) {
  return AlgebraMap(a, a, Matrix::identity(a.spec(), a.basis_size()));
}

AlgebraMap AlgebraMap::quotient(const FiniteOAlgebra& a, const Ideal& j) {
  FiniteOAlgebra b = quotient_by_ideal(a, j);
  return AlgebraMap(a, std::move(b), Matrix::identity(a.spec(), a.basis_size()));
}

AlgebraData compile_monomial_presentation(const MonomialPresentation& mp) {
  const DvrSpec& spec = mp.spec;
  const std::size_t nv = mp.variables.size();
  const std::size_t s = mp.basis.size();
  if (mp.reductions.size() != nv || mp.variable_lambda.size() != nv)
    fail(ErrorKind::DimensionMismatch, "one reduction table and one lambda value per variable");
  std::size_t one_index = s;
  for (std::size_t b = 0; b < s; ++b) {
    if (mp.basis[b].size() != nv) fail(ErrorKind::DimensionMismatch, "monomial exponent vector length");
    bool constant = true;
    for (long e : mp.basis[b]) {
      if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
      constant = constant && e == 0;
    }
    if (constant) one_index = b;
  }
  if (one_index == s) fail(ErrorKind::InvalidArgument, "the monomial basis must contain 1");

  std::vector<Matrix> variable_action;
  for (std::size_t v = 0; v < nv; ++v) {
    if (mp.reductions[v].size() != s) fail(ErrorKind::DimensionMismatch, "reduction table size");
    variable_action.push_back(Matrix::from_columns(spec, mp.reductions[v], s));
  }

  AlgebraData d{spec, {}, mp.module_relations, {}, unit_vector(spec, s, one_index), {}};
  d.mult.assign(s, std::vector<Vector>(s));
  for (std::size_t a = 0; a < s; ++a) {
    Matrix action = Matrix::identity(spec, s);
    DvrElement value = DvrElement::from_int(spec, 1);
    std::ostringstream name;
    bool first = true;
    for (std::size_t v = 0; v < nv; ++v)
      for (long e = 0; e < mp.basis[a][v]; ++e) {
        action = variable_action[v] * action;
        value *= mp.variable_lambda[v];
      }
    for (std::size_t v = 0; v < nv; ++v) {
      const long e = mp.basis[a][v];
      if (e == 0) continue;
      if (!first) name << "*";
      first = false;
      name << mp.variables[v];
      if (e > 1) name << "^" << e;
    }
    d.basis_names.push_back(first ? "1" : name.str());
    d.lambda.push_back(value);
    for (std::size_t b = 0; b < s; ++b) d.mult[a][b] = action.col(b);
  }
  return d;
}

}  // namespace conmod
