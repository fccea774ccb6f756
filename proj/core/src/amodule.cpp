#include "conmod/amodule.hpp"

namespace conmod {

namespace {

Matrix stacked_actions(const AModule& m, const Matrix& elements) {
  std::vector<Matrix> blocks;
  for (std::size_t c = 0; c < elements.cols(); ++c) blocks.push_back(m.action_of(elements.col(c)));
  return vconcat(m.spec(), m.generator_count(), blocks);
}

Matrix joined_actions(const AModule& m, const Matrix& elements) {
  std::vector<Matrix> blocks;
  for (std::size_t c = 0; c < elements.cols(); ++c) blocks.push_back(m.action_of(elements.col(c)));
  return hconcat(m.spec(), m.generator_count(), blocks);
}

OModule power_of(const OModule& m, std::size_t copies) {
  return OModule(m.generator_count() * copies,
                 block_diagonal(m.spec(), std::vector<Matrix>(copies, m.relations())));
}

bool same_algebra(const FiniteOAlgebra& a, const FiniteOAlgebra& b) {
  if (&a == &b) return true;
  if (!(a.spec() == b.spec()) || a.basis_size() != b.basis_size() || a.is_artinian() != b.is_artinian()) return false;
  if (!(a.module_relations() == b.module_relations()) || a.one() != b.one() || a.lambda() != b.lambda()) return false;
  for (std::size_t i = 0; i < a.basis_size(); ++i)
    if (!(a.multiplication_matrix(i) == b.multiplication_matrix(i))) return false;
  return true;
}

}  // namespace

AModule::AModule(std::shared_ptr<const FiniteOAlgebra> algebra, std::size_t generator_count, Matrix o_relations,
                 std::vector<Matrix> action)
    : algebra_(std::move(algebra)), underlying_(generator_count, std::move(o_relations)), action_(std::move(action)) {
  const FiniteOAlgebra& a = *algebra_;
  const std::size_t s = a.basis_size();
  const std::size_t g = generator_count;
  if (action_.size() != s) fail(ErrorKind::InvalidModule, "need one action matrix per algebra basis element");
  for (const Matrix& x : action_)
    if (x.rows() != g || x.cols() != g) fail(ErrorKind::InvalidModule, "action matrix has the wrong shape");
  const Matrix& rel = underlying_.relations();
  const LinearSolver in_relations(rel);
  for (std::size_t i = 0; i < s; ++i)
    if (!in_relations.contains_all(action_[i] * rel))
      fail(ErrorKind::InvalidModule, "action of basis element " + std::to_string(i) + " does not preserve the relations");
  for (std::size_t c = 0; c < a.module_relations().cols(); ++c)
    if (!in_relations.contains_all(action_of(a.module_relations().col(c))))
      fail(ErrorKind::InvalidModule, "an algebra relation acts nontrivially");
  if (!in_relations.contains_all(action_of(a.one()) - Matrix::identity(spec(), g)))
    fail(ErrorKind::InvalidModule, "one does not act as the identity");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const Matrix composed = action_[i] * action_[j];
      if (!in_relations.contains_all(composed - action_of(a.data().mult[i][j])) ||
          !in_relations.contains_all(action_[j] * action_[i] - composed))
        fail(ErrorKind::InvalidModule,
             "action does not respect the product of basis elements " + std::to_string(i) + " and " + std::to_string(j));
    }
}

AModule::AModule(const FiniteOAlgebra& algebra, std::size_t generator_count, Matrix o_relations, std::vector<Matrix> action)
    : AModule(std::make_shared<const FiniteOAlgebra>(algebra), generator_count, std::move(o_relations), std::move(action)) {}

Matrix AModule::action_of(const Vector& element) const {
  if (element.size() != action_.size()) fail(ErrorKind::DimensionMismatch, "algebra element has the wrong length");
  const std::size_t g = generator_count();
  Matrix r(spec(), g, g);
  for (std::size_t i = 0; i < element.size(); ++i)
    if (!element[i].is_zero()) r = r + element[i] * action_[i];
  return r;
}

bool AModule::depth_ok() const { return underlying_.invariants().torsion_valuations.empty(); }

bool AModule::is_zero() const {
  return lattice_contains(underlying_.relations(), Matrix::identity(spec(), generator_count()));
}

Subquotient torsion_submodule(const AModule& m, const Ideal& j) {
  const std::size_t k = j.generators.cols();
  if (k == 0) return Subquotient::whole(m.underlying());
  return kernel_of_map(stacked_actions(m, j.generators), m.underlying(), power_of(m.underlying(), k));
}

Subquotient ideal_times_module(const AModule& m, const Ideal& j) {
  return Subquotient::submodule(m.underlying(), joined_actions(m, j.generators));
}

Subquotient congruence_module(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const Subquotient mp = torsion_submodule(m, a.augmentation_ideal());
  const Subquotient mi = torsion_submodule(m, a.congruence_ideal());
  return Subquotient(m.underlying(), Matrix::identity(m.spec(), m.generator_count()),
                     hconcat(mp.numerator(), mi.numerator()));
}

Subquotient bar_congruence_module(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const Subquotient mi = torsion_submodule(m, a.congruence_ideal());
  const Subquotient im = ideal_times_module(m, a.congruence_ideal());
  return Subquotient(m.underlying(), Matrix::identity(m.spec(), m.generator_count()),
                     hconcat(mi.numerator(), im.numerator()));
}

Subquotient defect_gap_module(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const Subquotient mp = torsion_submodule(m, a.augmentation_ideal());
  const Subquotient im = ideal_times_module(m, a.congruence_ideal());
  return Subquotient(m.underlying(), mp.numerator(), im.numerator());
}

long rank_d(const AModule& m) { return free_rank(torsion_submodule(m, m.algebra().augmentation_ideal())); }

DefectReport wiles_defect(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  if (a.is_artinian()) fail(ErrorKind::PreconditionFailed, "defect of a module over an Artinian algebra");
  DefectReport r;
  r.d = rank_d(m);
  r.ell_phi = a.conormal_length();
  r.ell_psi_M = length(congruence_module(m));
  r.ell_psi_bar = length(bar_congruence_module(m));
  r.ell_gap = length(defect_gap_module(m));
  r.delta = r.d * r.ell_phi - r.ell_psi_M;
  r.depth_ok = m.depth_ok();
  if (r.depth_ok) {
    const long decomposed = r.d * (r.ell_phi - a.congruence_length()) + r.ell_gap;
    ensure(r.delta == decomposed, "defect " + std::to_string(r.delta) + " differs from its decomposition " +
                                      std::to_string(decomposed));
  }
  return r;
}

Ideal module_annihilator(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const std::size_t g = m.generator_count();
  const std::size_t s = a.basis_size();
  if (g == 0) return unit_ideal(a);
  // element -> (element * e_1, ..., element * e_g)
  Matrix f(m.spec(), g * g, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t r = 0; r < g; ++r) f.at(j * g + r, i) = m.action()[i].at(r, j);
  return Ideal{kernel_of_map(f, a.underlying(), power_of(m.underlying(), g)).numerator()};
}

AModule restrict_along_surjection(const AModule& m, const AlgebraMap& map) {
  if (!same_algebra(map.target(), m.algebra())) fail(ErrorKind::InvalidArgument, "module does not live over the map's target");
  if (!lattice_contains(hconcat(map.matrix(), map.target().module_relations()),
                        Matrix::identity(map.target().spec(), map.target().basis_size())))
    fail(ErrorKind::NotSurjective, "restriction needs a surjective map");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < map.source().basis_size(); ++i) action.push_back(m.action_of(map.matrix().col(i)));
  return AModule(std::make_shared<const FiniteOAlgebra>(map.source()), m.generator_count(), m.o_relations(),
                 std::move(action));
}

AModule free_module(const FiniteOAlgebra& a, std::size_t rank) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.basis_size(); ++i)
    action.push_back(block_diagonal(a.spec(), std::vector<Matrix>(rank, a.multiplication_matrix(i))));
  return AModule(a, a.basis_size() * rank, block_diagonal(a.spec(), std::vector<Matrix>(rank, a.module_relations())),
                 std::move(action));
}

AModule regular_module(const FiniteOAlgebra& a) { return free_module(a, 1); }

AModule direct_sum(const AModule& m, const AModule& n) {
  if (!same_algebra(m.algebra(), n.algebra())) fail(ErrorKind::InvalidArgument, "direct sum over different algebras");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.action().size(); ++i)
    action.push_back(block_diagonal(m.spec(), {m.action()[i], n.action()[i]}));
  return AModule(m.algebra_ptr(), m.generator_count() + n.generator_count(),
                 block_diagonal(m.spec(), {m.o_relations(), n.o_relations()}), std::move(action));
}

namespace {

AModule rank_one_via_lambda(const FiniteOAlgebra& a, long exponent) {
  std::vector<Matrix> action;
  for (const DvrElement& value : a.lambda()) action.push_back(Matrix::diagonal(a.spec(), {value}));
  Matrix rel(a.spec(), 1, exponent > 0 ? 1 : 0);
  if (exponent > 0) rel.at(0, 0) = DvrElement::uniformizer_power(a.spec(), exponent);
  return AModule(a, 1, std::move(rel), std::move(action));
}

}  // namespace

AModule augmentation_module(const FiniteOAlgebra& a) { return rank_one_via_lambda(a, 0); }

AModule residue_module(const FiniteOAlgebra& a) { return rank_one_via_lambda(a, 1); }

AModule subquotient_module(const AModule& m, const Matrix& numerator, const Matrix& denominator) {
  const DvrSpec& spec = m.spec();
  const Matrix& rel = m.o_relations();
  const Matrix basis = column_basis(hconcat(numerator, rel));
  const LinearSolver solver(basis);
  auto coordinates = [&](const Matrix& vectors, const char* what) {
    Matrix out(spec, basis.cols(), vectors.cols());
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
      const auto c = solver.solve(vectors.col(j));
      if (!c) fail(ErrorKind::InvalidArgument, what);
      out.set_col(j, *c);
    }
    return out;
  };
  const Matrix killed = hconcat(denominator, rel);
  const LinearSolver in_killed(killed);
  std::vector<Matrix> action;
  for (const Matrix& x : m.action()) {
    if (!in_killed.contains_all(x * denominator)) fail(ErrorKind::InvalidArgument, "denominator is not A-stable");
    action.push_back(coordinates(x * basis, "numerator is not A-stable"));
  }
  return AModule(m.algebra_ptr(), basis.cols(), coordinates(killed, "denominator is not inside the numerator"),
                 std::move(action));
}

AModule submodule(const AModule& m, const Matrix& generators) {
  return subquotient_module(m, generators, Matrix(m.spec(), m.generator_count(), 0));
}

AModule quotient_module(const AModule& m, const Matrix& sub_generators) {
  return subquotient_module(m, Matrix::identity(m.spec(), m.generator_count()), sub_generators);
}

AModule ideal_as_module(const FiniteOAlgebra& a, const Ideal& j) {
  return submodule(regular_module(a), ideal_closure(a, j.generators).generators);
}

Matrix minimal_generators(const AModule& m) {
  const std::size_t g = m.generator_count();
  Matrix span = hconcat(joined_actions(m, m.algebra().maximal_ideal().generators), m.o_relations());
  std::vector<Vector> chosen;
  for (std::size_t i = 0; i < g; ++i) {
    const Vector e = unit_vector(m.spec(), g, i);
    if (LinearSolver(span).contains(e)) continue;
    chosen.push_back(e);
    span = hconcat(span, Matrix::column(e));
  }
  return Matrix::from_columns(m.spec(), chosen, g);
}

}  // namespace conmod
