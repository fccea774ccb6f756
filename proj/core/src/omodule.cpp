#include "conmod/omodule.hpp"

namespace conmod {

namespace {

Matrix negated(const Matrix& m) { return DvrElement::from_int(m.spec(), -1) * m; }

bool same_ambient(const OModule& a, const OModule& b) {
  return a.generator_count() == b.generator_count() && a.relations() == b.relations();
}

long finite_length(const CokernelInvariants& inv) {
  if (inv.free_rank > 0) throw InfiniteLengthError(inv.free_rank);
  return inv.torsion_length();
}

}  // namespace

OModule::OModule(std::size_t generator_count, Matrix relations)
    : generator_count_(generator_count), relations_(std::move(relations)) {
  if (relations_.rows() != generator_count_) fail(ErrorKind::DimensionMismatch, "relation rows must match generator count");
}

OModule OModule::free(const DvrSpec& spec, std::size_t rank) { return OModule(rank, Matrix(spec, rank, 0)); }

OModule OModule::cyclic(const DvrSpec& spec, long exponent) {
  Matrix r(spec, 1, 1);
  r.at(0, 0) = DvrElement::uniformizer_power(spec, exponent);
  return OModule(1, std::move(r));
}

OModule direct_sum(const OModule& a, const OModule& b) {
  return OModule(a.generator_count() + b.generator_count(), block_diagonal(a.spec(), {a.relations(), b.relations()}));
}

bool lattice_contains(const Matrix& gens, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  return LinearSolver(gens).contains_all(vectors);
}

Matrix lattice_intersection(const Matrix& a, const Matrix& b) {
  const Matrix k = kernel_basis(hconcat(a, negated(b)));
  return column_basis(a * k.block(0, 0, a.cols(), k.cols()));
}

Matrix saturation(const Matrix& gens, std::size_t dimension) {
  if (gens.cols() == 0) return Matrix(gens.spec(), dimension, 0);
  const Matrix annihilators = kernel_basis(gens.transpose());
  return kernel_basis(annihilators.transpose());
}

Subquotient::Subquotient(OModule ambient, Matrix numerator, Matrix denominator)
    : ambient_(std::move(ambient)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  const std::size_t g = ambient_.generator_count();
  if (numerator_.rows() != g || denominator_.rows() != g) fail(ErrorKind::DimensionMismatch, "subquotient generators");
  if (!lattice_contains(hconcat(numerator_, ambient_.relations()), denominator_))
    fail(ErrorKind::InvalidArgument, "denominator is not contained in the numerator");
}

Subquotient Subquotient::whole(const OModule& ambient) {
  const std::size_t g = ambient.generator_count();
  return Subquotient(ambient, Matrix::identity(ambient.spec(), g), Matrix(ambient.spec(), g, 0));
}

Subquotient Subquotient::submodule(const OModule& ambient, Matrix gens) {
  const std::size_t g = ambient.generator_count();
  return Subquotient(ambient, std::move(gens), Matrix(ambient.spec(), g, 0));
}

OModule Subquotient::as_module() const {
  const Matrix& rel = ambient_.relations();
  const Matrix basis = column_basis(hconcat(numerator_, rel));
  const Matrix killed = hconcat(denominator_, rel);
  const LinearSolver solver(basis);
  Matrix coords(basis.spec(), basis.cols(), killed.cols());
  for (std::size_t j = 0; j < killed.cols(); ++j) {
    const auto c = solver.solve(killed.col(j));
    ensure(c.has_value(), "subquotient denominator outside numerator lattice");
    coords.set_col(j, *c);
  }
  return OModule(basis.cols(), std::move(coords));
}

bool Subquotient::is_zero() const {
  return lattice_contains(hconcat(denominator_, ambient_.relations()), numerator_);
}

long length(const OModule& m) { return finite_length(m.invariants()); }
long length(const Subquotient& m) { return finite_length(m.invariants()); }

long free_rank(const OModule& m) { return m.invariants().free_rank; }
long free_rank(const Subquotient& m) { return m.invariants().free_rank; }

Subquotient torsion_part(const OModule& m) { return torsion_part(Subquotient::whole(m)); }

Subquotient torsion_part(const Subquotient& m) {
  const Matrix& rel = m.ambient().relations();
  const std::size_t g = m.ambient().generator_count();
  const Matrix sat = saturation(hconcat(m.denominator(), rel), g);
  return Subquotient(m.ambient(), lattice_intersection(hconcat(m.numerator(), rel), sat), m.denominator());
}

namespace {

void require_compatible(const Subquotient& a, const Subquotient& b) {
  if (!same_ambient(a.ambient(), b.ambient())) fail(ErrorKind::AmbientMismatch, "different ambient modules");
  const Matrix& rel = a.ambient().relations();
  if (!lattice_contains(hconcat(a.denominator(), rel), b.denominator()) ||
      !lattice_contains(hconcat(b.denominator(), rel), a.denominator()))
    fail(ErrorKind::AmbientMismatch, "different denominators");
}

}  // namespace

Subquotient sum(const Subquotient& a, const Subquotient& b) {
  require_compatible(a, b);
  return Subquotient(a.ambient(), hconcat(a.numerator(), b.numerator()), a.denominator());
}

Subquotient intersect(const Subquotient& a, const Subquotient& b) {
  require_compatible(a, b);
  const DvrSpec& spec = a.ambient().spec();
  const std::size_t g = a.ambient().generator_count();
  const Matrix& rel = a.ambient().relations();
  const Matrix full_a = hconcat(spec, g, {a.numerator(), a.denominator(), rel});
  const Matrix full_b = hconcat(spec, g, {b.numerator(), b.denominator(), rel});
  return Subquotient(a.ambient(), lattice_intersection(full_a, full_b), a.denominator());
}

Subquotient kernel_of_map(const Matrix& f, const OModule& source, const OModule& target) {
  if (f.rows() != target.generator_count() || f.cols() != source.generator_count())
    fail(ErrorKind::DimensionMismatch, "map shape does not match source and target");
  if (!lattice_contains(target.relations(), f * source.relations()))
    fail(ErrorKind::IllDefinedMap, "source relations are not sent into target relations");
  const Matrix k = kernel_basis(hconcat(f, negated(target.relations())));
  return Subquotient::submodule(source, column_basis(k.block(0, 0, source.generator_count(), k.cols())));
}

}  // namespace conmod
