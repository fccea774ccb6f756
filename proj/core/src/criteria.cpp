#include "conmod/criteria.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace conmod {

namespace {

OModule power_of(const OModule& m, std::size_t copies) {
  return OModule(m.generator_count() * copies, block_diagonal(m.spec(), std::vector<Matrix>(copies, m.relations())));
}

// A^u -> M sending the j-th standard generator to gens.col(j).
Matrix presentation_map(const AModule& m, const Matrix& gens) {
  const std::size_t s = m.algebra().basis_size();
  const std::size_t u = gens.cols();
  Matrix f(m.spec(), m.generator_count(), s * u);
  for (std::size_t j = 0; j < u; ++j) {
    const Vector g = gens.col(j);
    for (std::size_t i = 0; i < s; ++i) f.set_col(j * s + i, m.action()[i].apply(g));
  }
  return f;
}

struct Presentation {
  Matrix generators;  // in M coordinates
  Matrix relations;   // columns in (O^s)^u: one algebra element per slot
};

Presentation minimal_presentation(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const std::size_t s = a.basis_size();
  Matrix gens = minimal_generators(m);
  const std::size_t u = gens.cols();
  const OModule free = power_of(a.underlying(), u);
  if (u == 0) return {std::move(gens), Matrix(m.spec(), 0, 0)};
  const Matrix kernel = kernel_of_map(presentation_map(m, gens), free, m.underlying()).numerator();

  // Minimal A-generators of the kernel: a k-basis of K / m K.
  std::vector<Matrix> parts{free.relations()};
  const Matrix& maximal = a.maximal_ideal().generators;
  for (std::size_t c = 0; c < maximal.cols(); ++c) {
    const Matrix block = block_diagonal(m.spec(), std::vector<Matrix>(u, a.multiplication_matrix(maximal.col(c))));
    parts.push_back(block * kernel);
  }
  Matrix span = hconcat(m.spec(), s * u, parts);
  std::vector<Vector> chosen;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    const Vector r = kernel.col(c);
    if (LinearSolver(span).contains(r)) continue;
    chosen.push_back(r);
    span = hconcat(span, Matrix::column(r));
  }
  return {std::move(gens), Matrix::from_columns(m.spec(), chosen, s * u)};
}

Vector slot(const Matrix& relations, std::size_t column, std::size_t row, std::size_t s) {
  Vector v;
  v.reserve(s);
  for (std::size_t i = 0; i < s; ++i) v.push_back(relations.at(row * s + i, column));
  return v;
}

// All u x u minors of a u x n matrix over A, by expansion along rows with memoized column subsets.
std::vector<Vector> maximal_minors(const FiniteOAlgebra& a, const Matrix& relations, std::size_t u) {
  const std::size_t s = a.basis_size();
  const std::size_t n = relations.cols();
  if (n > 63) fail(ErrorKind::InvalidArgument, "too many relations for minor expansion");
  std::vector<std::vector<Vector>> entries(u, std::vector<Vector>(n));
  for (std::size_t r = 0; r < u; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r][c] = slot(relations, c, r, s);

  // level r holds determinants of rows r..u-1 on column sets of size u - r.
  std::map<std::uint64_t, Vector> below;
  below[0] = a.one();
  for (std::size_t r = u; r-- > 0;) {
    std::map<std::uint64_t, Vector> here;
    for (const auto& [mask, det] : below) {
      if (is_zero(det)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (mask & bit) continue;
        if (is_zero(entries[r][c])) continue;
        // sign: number of chosen columns left of c
        const int before = __builtin_popcountll(mask & (bit - 1));
        Vector term = a.multiply(entries[r][c], det);
        if (before % 2 == 1) term = scaled(DvrElement::from_int(a.spec(), -1), term);
        auto [it, inserted] = here.try_emplace(mask | bit, term);
        if (!inserted) it->second = it->second + term;
      }
    }
    below = std::move(here);
  }
  std::vector<Vector> minors;
  for (auto& [mask, det] : below) minors.push_back(std::move(det));
  return minors;
}

std::string columns_to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) os << ", ";
    os << "(";
    for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? " " : "") << m.at(r, c).to_string();
    os << ")";
  }
  os << "]";
  return os.str();
}

long torsion_length(const OModule& m) { return m.invariants().torsion_length(); }

}  // namespace

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Free: return "Free";
    case Conclusion::NotFree: return "NotFree";
    case Conclusion::CompleteIntersection: return "CompleteIntersection";
    case Conclusion::NotCI: return "NotCI";
    case Conclusion::Gorenstein: return "Gorenstein";
    case Conclusion::NotGorenstein: return "NotGorenstein";
    case Conclusion::Isomorphism: return "Isomorphism";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict& Verdict::record(std::string key, CertificateValue value) {
  certificate.emplace_back(std::move(key), std::move(value));
  return *this;
}

const CertificateValue* Verdict::find(std::string_view key) const {
  for (const auto& [k, v] : certificate)
    if (k == key) return &v;
  return nullptr;
}

long Verdict::number(std::string_view key) const {
  const auto* v = find(key);
  if (!v || !std::holds_alternative<long>(*v)) fail(ErrorKind::InvalidArgument, "no numeric certificate entry " + std::string(key));
  return std::get<long>(*v);
}

bool Verdict::flag(std::string_view key) const {
  const auto* v = find(key);
  if (!v || !std::holds_alternative<bool>(*v)) fail(ErrorKind::InvalidArgument, "no boolean certificate entry " + std::string(key));
  return std::get<bool>(*v);
}

MultiplicityResult multiplicity(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  MultiplicityResult result;
  if (a.is_artinian()) {
    result.e = length(m.underlying());
    return result;
  }
  const std::size_t g = m.generator_count();
  const DvrSpec& spec = m.spec();
  const Matrix& rel = m.o_relations();
  const Matrix& maximal = a.maximal_ideal().generators;
  const long cap = torsion_length(a.underlying()) + a.rank() + 4;

  // powers[n] spans m^n M (module relations included).
  std::vector<Matrix> powers{hconcat(Matrix::identity(spec, g), rel)};
  auto extend = [&] {
    std::vector<Matrix> parts{rel};
    for (std::size_t c = 0; c < maximal.cols(); ++c) parts.push_back(m.action_of(maximal.col(c)) * powers.back());
    const Matrix next = column_basis(hconcat(spec, g, parts));
    result.hilbert.push_back(length(Subquotient(m.underlying(), powers.back(), next)));
    powers.push_back(next);
  };

  if (!m.depth_ok()) {
    // The torsion submodule has finite length and does not change e.
    const AModule free_part = quotient_module(m, torsion_part(m.underlying()).numerator());
    const MultiplicityResult certified = multiplicity(free_part);
    result.e = certified.e;
    result.stabilization_index = certified.stabilization_index;
    while (static_cast<long>(result.hilbert.size()) <= certified.stabilization_index + 2) extend();
    return result;
  }

  // Candidates for a superficial element: w, then w + c p_j and w + c sum_j p_j for residue units c.
  const Vector w_one = scaled(DvrElement::uniformizer_power(spec, 1), a.one());
  std::vector<Vector> candidates{w_one};
  const Matrix& aug = a.augmentation_ideal().generators;
  const long units = static_cast<long>(std::min<std::uint64_t>(spec.prime() - 1, 6));
  for (long c = 1; c <= units; ++c) {
    const DvrElement unit = DvrElement::from_int(spec, c);
    Vector all = w_one;
    for (std::size_t j = 0; j < aug.cols(); ++j) {
      candidates.push_back(w_one + scaled(unit, aug.col(j)));
      all = all + scaled(unit, aug.col(j));
    }
    if (aug.cols() > 1) candidates.push_back(all);
  }
  std::vector<Matrix> actions;
  std::vector<Vector> nonzerodivisors;
  for (const Vector& y : candidates) {
    Matrix act = m.action_of(y);
    if (!kernel_of_map(act, m.underlying(), m.underlying()).is_zero()) continue;
    actions.push_back(std::move(act));
    nonzerodivisors.push_back(y);
  }

  // If y is a nonzerodivisor with y m^n M = m^(n+1) M, then l(m^k M / m^(k+1) M) = l(M / y M) for all k >= n.
  for (long n = 0; n <= cap; ++n) {
    extend();
    for (std::size_t i = 0; i < actions.size(); ++i) {
      const Matrix image = hconcat(actions[i] * powers[static_cast<std::size_t>(n)], rel);
      if (!lattice_contains(image, powers[static_cast<std::size_t>(n) + 1])) continue;
      const long fibre = length(Subquotient(m.underlying(), Matrix::identity(spec, g), hconcat(actions[i], rel)));
      if (fibre != result.hilbert.back())
        fail(ErrorKind::StabilizationFailure, "Hilbert value " + std::to_string(result.hilbert.back()) +
                                                  " disagrees with l(M/yM) = " + std::to_string(fibre));
      result.e = fibre;
      result.stabilization_index = n;
      result.superficial_crosscheck = fibre;
      result.superficial_element = nonzerodivisors[i];
      return result;
    }
  }
  fail(ErrorKind::StabilizationFailure, "no superficial element certified by n = " + std::to_string(cap));
}

long algebra_multiplicity(const FiniteOAlgebra& a) { return multiplicity(regular_module(a)).e; }

Ideal socle(const FiniteOAlgebra& artinian) {
  if (!artinian.is_artinian()) fail(ErrorKind::PreconditionFailed, "socle of a non-Artinian algebra");
  return annihilator_of_ideal(artinian, artinian.maximal_ideal());
}

long socle_length(const FiniteOAlgebra& artinian) { return length(ideal_submodule(artinian, socle(artinian))); }

Verdict gorenstein_test(const FiniteOAlgebra& a) {
  Verdict v;
  if (!a.is_artinian() && !a.depth_at_least_one()) {
    v.conclusion = Conclusion::NotGorenstein;
    v.record("depth_at_least_one", false);
    return v;
  }
  const FiniteOAlgebra r = a.is_artinian() ? a : reduction_mod_uniformizer(a);
  const Ideal soc = socle(r);
  const long len = length(ideal_submodule(r, soc));
  v.conclusion = len == 1 ? Conclusion::Gorenstein : Conclusion::NotGorenstein;
  v.record("socle_length", len);
  v.record("socle_generators", columns_to_string(column_basis(soc.generators)));
  if (!a.is_artinian() && len == 1) {
    const bool identity = ideal_equal(r, soc, ideal_closure(r, a.congruence_ideal().generators));
    ensure(identity, "socle of A/wA differs from the image of the congruence ideal");
    v.record("socle_equals_congruence_image", identity);
  }
  return v;
}

Verdict ci_test(const FiniteOAlgebra& a) {
  Verdict v;
  if (a.is_artinian()) {
    const Ideal fitt = fitting_ideal(ideal_as_module(a, a.maximal_ideal()));
    const bool ci = !ideal_is_zero(a, fitt) && ideal_equal(a, fitt, socle(a));
    v.conclusion = ci ? Conclusion::CompleteIntersection : Conclusion::NotCI;
    v.record("fitting_of_maximal_is_socle", ci);
    return v;
  }
  v.record("depth_at_least_one", a.depth_at_least_one());
  if (!a.depth_at_least_one()) {
    v.conclusion = Conclusion::NotCI;
    return v;
  }
  const long phi = a.conormal_length();
  const long psi = a.congruence_length();
  v.conclusion = phi == psi ? Conclusion::CompleteIntersection : Conclusion::NotCI;
  v.record("ell_phi", phi);
  v.record("ell_psi", psi);
  return v;
}

Verdict direct_freeness_oracle(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const Matrix gens = minimal_generators(m);
  const std::size_t nu = gens.cols();
  const OModule free = power_of(a.underlying(), nu);
  const Matrix kernel =
      nu == 0 ? Matrix(m.spec(), 0, 0) : kernel_of_map(presentation_map(m, gens), free, m.underlying()).numerator();
  const bool injective = lattice_contains(free.relations(), kernel);
  Verdict v;
  v.conclusion = injective ? Conclusion::Free : Conclusion::NotFree;
  v.record("nu", static_cast<long>(nu));
  v.record("kernel_is_zero", injective);
  return v;
}

Ideal fitting_ideal(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  const Presentation pres = minimal_presentation(m);
  const std::size_t u = pres.generators.cols();
  if (u == 0) return unit_ideal(a);
  if (pres.relations.cols() < u) return zero_ideal(a);
  const std::vector<Vector> minors = maximal_minors(a, pres.relations, u);
  if (minors.empty()) return zero_ideal(a);
  return ideal_closure(a, Matrix::from_columns(a.spec(), minors, a.basis_size()));
}

Verdict zero_dim_gorenstein_free_test(const AModule& n) {
  const FiniteOAlgebra& r = n.algebra();
  if (!r.is_artinian()) fail(ErrorKind::NotGorensteinInput, "the algebra is not Artinian");
  const Ideal soc = socle(r);
  const long soc_len = length(ideal_submodule(r, soc));
  if (soc_len != 1) fail(ErrorKind::NotGorensteinInput, "socle has length " + std::to_string(soc_len));
  const long ell_n = length(n.underlying());
  const long ell_soc_n = length(ideal_times_module(n, soc));
  const long ell_r = length(r.underlying());
  const bool free = ell_n <= ell_soc_n * ell_r;
  ensure((direct_freeness_oracle(n).conclusion == Conclusion::Free) == free, "socle test disagrees with the freeness oracle");
  Verdict v;
  v.conclusion = free ? Conclusion::Free : Conclusion::NotFree;
  v.record("ell_module", ell_n).record("ell_socle_times_module", ell_soc_n).record("ell_algebra", ell_r);
  return v;
}

Verdict freeness_prediamond(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  if (a.is_artinian()) fail(ErrorKind::PreconditionFailed, "needs a one-dimensional algebra");
  if (gorenstein_test(a).conclusion != Conclusion::Gorenstein) fail(ErrorKind::PreconditionFailed, "algebra is not Gorenstein");
  if (!m.depth_ok()) fail(ErrorKind::PreconditionFailed, "module has uniformizer torsion");
  const DefectReport rm = wiles_defect(m);
  const DefectReport ra = wiles_defect(regular_module(a));
  const long e_m = multiplicity(m).e;
  const long e_a = algebra_multiplicity(a);
  const bool defect_ok = rm.delta <= rm.d * ra.delta;
  const bool multiplicity_ok = e_m <= rm.d * e_a;
  if (defect_ok) {
    ensure(rm.delta == rm.d * ra.delta, "defect inequality holds but is strict");
    ensure(rm.ell_gap == 0, "defect inequality holds but the gap module is nonzero");
  }
  const bool free = defect_ok && multiplicity_ok;
  ensure((direct_freeness_oracle(m).conclusion == Conclusion::Free) == free, "criterion disagrees with the freeness oracle");
  Verdict v;
  v.conclusion = free ? Conclusion::Free : Conclusion::NotFree;
  v.record("d", rm.d).record("delta_M", rm.delta).record("delta_A", ra.delta).record("e_M", e_m).record("e_A", e_a);
  v.record("defect_inequality", defect_ok).record("multiplicity_inequality", multiplicity_ok);
  return v;
}

Verdict diamond_test(const AModule& m) {
  const FiniteOAlgebra& a = m.algebra();
  if (a.is_artinian()) fail(ErrorKind::PreconditionFailed, "needs a one-dimensional algebra");
  if (m.is_zero()) fail(ErrorKind::PreconditionFailed, "module is zero");
  if (!m.depth_ok()) fail(ErrorKind::PreconditionFailed, "module has uniformizer torsion");
  const DefectReport rm = wiles_defect(m);
  if (rm.d < 1) fail(ErrorKind::PreconditionFailed, "module is not supported at the augmentation prime");
  Verdict v;
  v.record("d", rm.d).record("delta_M", rm.delta);
  if (rm.delta != 0) {
    v.conclusion = Conclusion::Inconclusive;
    return v;
  }
  const bool ci = ci_test(a).conclusion == Conclusion::CompleteIntersection;
  ensure(ci, "zero defect but the algebra is not a complete intersection");
  const bool faithful = ideal_is_zero(a, module_annihilator(m));
  ensure(faithful, "zero defect but the module is not faithful");
  const Subquotient mp = torsion_submodule(m, a.augmentation_ideal());
  const Subquotient im = ideal_times_module(m, a.congruence_ideal());
  const bool equal = lattice_contains(hconcat(im.numerator(), m.o_relations()), mp.numerator());
  ensure(equal, "zero defect but M[p] differs from I M");
  v.record("complete_intersection", ci).record("faithful", faithful).record("torsion_equals_product", equal);
  const long e_m = multiplicity(m).e;
  const long e_a = algebra_multiplicity(a);
  v.record("e_M", e_m).record("e_A", e_a);
  if (e_m <= rm.d * e_a) {
    ensure(direct_freeness_oracle(m).conclusion == Conclusion::Free, "criterion says free but the oracle disagrees");
    v.conclusion = Conclusion::Free;
  } else {
    v.conclusion = Conclusion::Inconclusive;
  }
  return v;
}

Verdict iso_criteria(const AlgebraMap& map) {
  const FiniteOAlgebra& a = map.source();
  const FiniteOAlgebra& b = map.target();
  if (a.is_artinian() || b.is_artinian()) fail(ErrorKind::PreconditionFailed, "needs one-dimensional algebras");
  if (!b.depth_at_least_one()) fail(ErrorKind::PreconditionFailed, "target has depth zero");
  Verdict v;
  const bool psi_equal = a.congruence_length() == b.congruence_length();
  const bool phi_equal = a.conormal_length() == b.conormal_length();
  const bool via_congruence = psi_equal && gorenstein_test(a).conclusion == Conclusion::Gorenstein;
  const bool via_conormal = phi_equal && ci_test(b).conclusion == Conclusion::CompleteIntersection;
  v.record("ell_psi_source", a.congruence_length()).record("ell_psi_target", b.congruence_length());
  v.record("ell_phi_source", a.conormal_length()).record("ell_phi_target", b.conormal_length());
  v.record("via_congruence", via_congruence).record("via_conormal", via_conormal);
  if (via_congruence || via_conormal) {
    const bool injective = map.is_injective();
    ensure(injective, "criterion claims an isomorphism but the kernel is nonzero");
    v.record("kernel_is_zero", injective);
    v.conclusion = Conclusion::Isomorphism;
  } else {
    v.conclusion = Conclusion::Inconclusive;
  }
  return v;
}

Verdict wiles_criterion(const AlgebraMap& map) {
  const FiniteOAlgebra& b = map.target();
  if (map.source().is_artinian() || b.is_artinian()) fail(ErrorKind::PreconditionFailed, "needs one-dimensional algebras");
  if (!b.depth_at_least_one()) fail(ErrorKind::PreconditionFailed, "target has depth zero");
  const DefectReport r = wiles_defect(restrict_along_surjection(regular_module(b), map));
  Verdict v;
  v.record("delta_target", r.delta);
  if (r.delta != 0) {
    v.conclusion = Conclusion::Inconclusive;
    return v;
  }
  const bool injective = map.is_injective();
  ensure(injective, "zero defect but the kernel is nonzero");
  const bool ci = ci_test(b).conclusion == Conclusion::CompleteIntersection;
  ensure(ci, "zero defect but the target is not a complete intersection");
  v.record("kernel_is_zero", injective).record("complete_intersection", ci);
  v.conclusion = Conclusion::Isomorphism;
  return v;
}

Verdict wiebe_module_test(const AModule& m) {
  const FiniteOAlgebra& r = m.algebra();
  if (!r.is_artinian()) fail(ErrorKind::PreconditionFailed, "needs an Artinian algebra");
  if (m.is_zero()) fail(ErrorKind::PreconditionFailed, "module is zero");
  const Ideal fitt = fitting_ideal(ideal_as_module(r, r.maximal_ideal()));
  const long e_m = length(m.underlying());
  const long e_r = length(r.underlying());
  const long fitt_m = length(ideal_times_module(m, fitt));
  Verdict v;
  v.record("e_M", e_m).record("e_R", e_r).record("ell_fitting_times_module", fitt_m);
  if (e_m <= fitt_m * e_r) {
    const bool ci = !ideal_is_zero(r, fitt) && ideal_equal(r, fitt, socle(r));
    ensure(ci, "inequality holds but the algebra is not a complete intersection");
    ensure(direct_freeness_oracle(m).conclusion == Conclusion::Free, "inequality holds but the module is not free");
    v.record("complete_intersection", ci);
    v.conclusion = Conclusion::Free;
  } else {
    v.conclusion = Conclusion::Inconclusive;
  }
  return v;
}

}  // namespace conmod
