// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "conmod/corpus.hpp"
#include "conmod_cli/selftest.hpp"

namespace {

using namespace conmod;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  void note(const std::string& s) { notes_ << s << ' '; }
  bool failed() const { return failed_; }
  std::string summary() const {
    std::string s = notes_.str();
    for (const auto& f : failures_) s += "[" + f + "] ";
    return s;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::ostringstream notes_;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 for no runtime bound
  std::function<void(Check&)> body;
};

const DvrSpec Z5 = DvrSpec::zlocal(5);

// Equal submodules of the ambient, compared modulo its relations.
bool same_span(const Subquotient& a, const Matrix& gens) {
  const Matrix& rel = a.ambient().relations();
  return LinearSolver(hconcat(a.numerator(), rel)).contains_all(gens) &&
         LinearSolver(hconcat(gens, rel)).contains_all(a.numerator());
}

void gor_not_ci(Check& c) {
  for (const auto& spec : {Z5, DvrSpec::zlocal(3), DvrSpec::ratfunc(5)}) {
    auto a = gor_not_ci_algebra(spec);
    c.expect(a.rank() == 5, "rank 5");
    c.expect(a.conormal_length() == 3, "conormal length 3");
    c.expect(gorenstein_test(a).conclusion == Conclusion::Gorenstein, "Gorenstein");
    c.expect(ci_test(a).conclusion == Conclusion::NotCI, "not CI");
    c.expect(a.congruence_length() == 2, "congruence length 2");
    c.expect(wiles_defect(regular_module(a)).delta == 1, "defect 1");
    c.expect(algebra_multiplicity(a) == 5, "multiplicity 5");
  }
}

void depth_zero(Check& c) {
  auto a = depth0_algebra(Z5);
  const auto w = DvrElement::from_int(Z5, 5);
  Matrix i_gens(Z5, 2, 2);
  i_gens.at(0, 0) = w;
  i_gens.at(1, 1) = DvrElement::from_int(Z5, 1);
  Matrix p_gens(Z5, 2, 1);
  p_gens.at(1, 0) = DvrElement::from_int(Z5, 1);
  const auto expected_i = ideal_closure(a, i_gens);
  const auto expected_p = ideal_closure(a, p_gens);
  c.expect(ideal_equal(a, a.congruence_ideal(), expected_i), "I = (w, x)");
  c.expect(ideal_equal(a, a.augmentation_ideal(), expected_p), "p = (x)");
  auto meet = intersect(ideal_submodule(a, a.congruence_ideal()), ideal_submodule(a, a.augmentation_ideal()));
  c.expect(same_span(meet, ideal_submodule(a, a.augmentation_ideal()).numerator()), "I meet p = p");
  c.expect(!a.depth_at_least_one(), "depth zero");
}

std::vector<FiniteOAlgebra> defect_algebras() {
  std::vector<FiniteOAlgebra> out;
  for (long m = 1; m <= 4; ++m) out.push_back(glue_algebra(Z5, m));
  out.push_back(glue_algebra(DvrSpec::ratfunc(3), 2));
  for (const auto& v : std::vector<std::vector<long>>{{1, 1}, {2, 1}, {1, 2}, {3, -1, 1}})
    out.push_back(monogenic_algebra(Z5, v));
  for (std::uint64_t s = 0; s < 3; ++s) out.push_back(random_monogenic_algebra(Z5, s, 3));
  out.push_back(multi_glue_algebra(Z5, 3));
  out.push_back(multi_glue_algebra(Z5, 4));
  out.push_back(gor_not_ci_algebra(Z5));
  out.push_back(gor_not_ci_algebra(DvrSpec::zlocal(3)));
  return out;
}

void defect_decomposition(Check& c) {
  long pairs = 0;
  for (const auto& a : defect_algebras()) {
    auto canon = canonical_modules(a);
    std::vector<AModule> modules{canon.regular, canon.augmentation, canon.congruence_ideal, canon.augmentation_ideal};
    for (std::uint64_t seed = 0; seed < 14; ++seed) modules.push_back(random_module(a, seed, 1 + seed % 3));
    for (const auto& m : modules) {
      if (!m.depth_ok()) continue;
      ++pairs;
      auto r = wiles_defect(m);
      c.expect(r.delta == r.d * (r.ell_phi - a.congruence_length()) + r.ell_gap, "decomposition");
      c.expect(r.ell_gap == length(defect_gap_module(m)), "gap length");
      c.expect(r.delta >= 0, "nonnegative defect");
    }
  }
  c.note("pairs=" + std::to_string(pairs));
  c.expect(pairs >= 200, "at least 200 pairs");
}

std::vector<FiniteOAlgebra> corpus_algebras() {
  std::vector<FiniteOAlgebra> out;
  for (const auto& spec : {Z5, DvrSpec::ratfunc(3), DvrSpec::zlocal(2)})
    for (const auto& info : list_families()) {
      for (long parameter = 1; parameter <= 3; ++parameter) {
        // MultiGlue and RandomMonogenic need at least two components.
        const bool shifted = info.family == Family::MultiGlue || info.family == Family::RandomMonogenic;
        FamilySpec fs{info.family, spec, parameter + (shifted ? 1 : 0), {parameter, 1}, 11};
        out.push_back(build(fs));
      }
    }
  return out;
}

void structural(Check& c) {
  long modules_checked = 0;
  for (const auto& a : corpus_algebras()) {
    const auto& i = a.congruence_ideal();
    const auto& p = a.augmentation_ideal();
    c.expect(ideal_equal(a, annihilator_of_ideal(a, i), p), "p = ann I");
    c.expect(free_rank(ideal_submodule(a, i)) == 1, "rank I = 1");
    c.expect(a.conormal_length() >= a.congruence_length(), "conormal dominates congruence");
    if (a.depth_at_least_one()) {
      auto g = principal_generator(a, i);
      c.expect(g.has_value(), "I principal");
      Subquotient i_mod_i2(a.underlying(), ideal_submodule(a, i).numerator(), ideal_product(a, i, i).generators);
      c.expect(length(i_mod_i2) == a.congruence_length(), "I/I^2 length");
    }
    auto canon = canonical_modules(a);
    std::vector<AModule> modules{canon.regular, canon.augmentation, canon.congruence_ideal};
    for (std::uint64_t seed = 0; seed < 3; ++seed) modules.push_back(random_module(a, seed, 2));
    for (const auto& m : modules) {
      if (!m.depth_ok()) continue;
      ++modules_checked;
      const auto mp = torsion_submodule(m, p);
      const auto mi = torsion_submodule(m, i);
      c.expect(intersect(mp, mi).is_zero(), "M[p] meets M[I] trivially");
      const auto d = rank_d(m);
      auto mp_inv = mp.invariants();
      c.expect(mp_inv.torsion_length() == 0 && mp_inv.free_rank == d, "M[p] free of rank d");
      Subquotient quotient(m.underlying(), Matrix::identity(a.spec(), m.generator_count()), mi.numerator());
      auto q_inv = quotient.invariants();
      c.expect(q_inv.torsion_length() == 0 && q_inv.free_rank == d, "M/M[I] free of rank d");
    }
  }
  c.note("modules=" + std::to_string(modules_checked));
}

void prediamond_agreement(Check& c) {
  long pairs = 0, non_free = 0;
  std::vector<FiniteOAlgebra> algebras;
  for (long m = 1; m <= 4; ++m) algebras.push_back(glue_algebra(Z5, m));
  algebras.push_back(glue_algebra(DvrSpec::ratfunc(3), 1));
  algebras.push_back(gor_not_ci_algebra(Z5));
  algebras.push_back(monogenic_algebra(Z5, {1, 2}));
  algebras.push_back(monogenic_algebra(Z5, {2, 1, -1}));
  algebras.push_back(random_monogenic_algebra(Z5, 9, 3));
  algebras.push_back(multi_glue_algebra(Z5, 2));
  for (const auto& a : algebras) {
    c.expect(gorenstein_test(a).conclusion == Conclusion::Gorenstein, "Gorenstein source");
    auto canon = canonical_modules(a);
    std::vector<AModule> modules{canon.regular, canon.augmentation, canon.congruence_ideal, canon.augmentation_ideal,
                                 free_module(a, 2), direct_sum(canon.regular, canon.augmentation)};
    for (std::uint64_t seed = 0; seed < 12; ++seed) modules.push_back(random_module(a, seed, 1 + seed % 3, true));
    for (const auto& m : modules) {
      if (!m.depth_ok()) continue;
      const auto predicted = freeness_prediamond(m).conclusion;
      const auto actual = direct_freeness_oracle(m).conclusion;
      ++pairs;
      if (actual == Conclusion::NotFree) ++non_free;
      c.expect(predicted == actual, std::string("prediamond says ") + std::string(to_string(predicted)));
    }
  }
  c.note("pairs=" + std::to_string(pairs) + " non_free=" + std::to_string(non_free));
  c.expect(pairs >= 100, "at least 100 pairs");
  c.expect(non_free > 0, "some non-free modules");
}

void venkatesh_example(Check& c) {
  auto pres = glue_onto_depth0(Z5, 1);
  auto r = venkatesh_check(pres);
  c.expect(r.ell_I == 1 && r.ell_J == 1 && r.aq1 == 1 && r.aq2 == 1 && r.delta_B == 1 && r.minimal, "worked report");
  c.expect(r.aq1 == r.ell_J && r.delta_B == r.aq2 - r.ell_I_over_J, "identities");
  std::vector<FiniteOAlgebra> sources;
  for (long m = 1; m <= 3; ++m) sources.push_back(glue_algebra(Z5, m));
  sources.push_back(gor_not_ci_algebra(Z5));
  sources.push_back(monogenic_algebra(Z5, {1, 2}));
  sources.push_back(trivial_algebra(Z5));
  for (const auto& a : sources) {
    if (ci_test(a).conclusion == Conclusion::CompleteIntersection) {
      auto z = venkatesh_check(identity_presentation(a));
      c.expect(z.ell_I == 0 && z.ell_J == 0 && z.ell_I_over_J == 0 && z.aq1 == 0 && z.aq2 == 0 && z.delta_B == 0,
               "identity presentation");
    }
    if (gorenstein_test(a).conclusion != Conclusion::Gorenstein) continue;
    for (const auto& f : {AlgebraMap::identity(a), AlgebraMap::quotient(a, a.augmentation_ideal())}) {
      auto g = gorsum_check(f);
      c.expect(g.ell_psi_C == g.ell_psi_B + g.ell_I, "gorsum");
    }
  }
  auto g = gorsum_check(pres.map());
  c.expect(g.ell_psi_C == g.ell_psi_B + g.ell_I, "gorsum on the example");
}

void wiebe(Check& c) {
  auto r = truncated_dvr(Z5, 3);
  auto free = wiebe_module_test(regular_module(r));
  c.expect(free.conclusion == Conclusion::Free && free.flag("complete_intersection"), "R: CI and free");
  c.expect(wiebe_module_test(residue_module(r)).conclusion == Conclusion::Inconclusive, "k: inconclusive");
}

void snf_floor(Check& c) {
  auto a = random_valuation_matrix(Z5, 42, 200, 200);
  auto r = snf(a);
  c.expect(verify_snf(a, r), "reconstruction");
  c.note("rank=" + std::to_string(r.rank()));
}

void determinism(Check& c) {
  cli::SelftestOptions opts;
  opts.seed = 7;
  auto first = cli::run_selftest(opts);
  auto second = cli::run_selftest(opts);
  c.expect(first.to_json().dump(2) == second.to_json().dump(2), "byte-identical report");
  c.expect(first.exit_code == 0, "selftest passes");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GorNotCI invariants", 1, gor_not_ci},
      {2, "Depth0 ideals", 1, depth_zero},
      {3, "defect decomposition suite", 60, defect_decomposition},
      {4, "structural identities on the corpus", 0, structural},
      {5, "prediamond agrees with the freeness oracle", 0, prediamond_agreement},
      {6, "CI presentation worked example", 5, venkatesh_example},
      {7, "Wiebe test on O/w^3", 0, wiebe},
      {8, "SNF 200x200 floor", 10, snf_floor},
      {9, "selftest determinism", 0, determinism},
  };
  bool all = true;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.budget_seconds > 0 && seconds >= crit.budget_seconds) check.expect(false, "over time budget");
    const bool pass = !check.failed();
    all = all && pass;
    std::printf("criterion %d %s  %s (%.2fs) %s\n", crit.number, pass ? "PASS" : "FAIL", crit.title.c_str(), seconds,
                check.summary().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
