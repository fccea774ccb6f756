#include "conmod_cli/selftest.hpp"

#include <map>
#include <random>

namespace conmod::cli {

namespace {

struct Case {
  std::string label;
  FiniteOAlgebra algebra;
  std::vector<AModule> modules;
  std::vector<CIPresentation> presentations;
};

class Suite {
 public:
  explicit Suite(const SelftestOptions& options) : options_(options) {
    for (const auto& name : selftest_identities()) counts_[name] = 0;
  }

  long fault(const std::string& identity) const { return identity == options_.inject_fault ? 1 : 0; }

  // An injected fault makes the identity fail.
  void check(const std::string& identity, bool holds, const std::string& where, const std::string& detail) {
    record(identity, holds && fault(identity) == 0, where, detail);
  }

  void record(const std::string& identity, bool holds, const std::string& where, const std::string& detail) {
    ++counts_.at(identity);
    if (!holds) {
      failures_.push_back({{"identity", identity}, {"case", where}, {"detail", detail}});
      violated_ = true;
    }
  }

  void equal(const std::string& identity, long lhs, long rhs, const std::string& where) {
    const long shifted = lhs + fault(identity);
    record(identity, shifted == rhs, where, std::to_string(shifted) + " vs " + std::to_string(rhs));
  }

  void record_error(const std::string& where, const Error& e) {
    if (e.kind() == ErrorKind::InternalInvariantViolation) {
      failures_.push_back({{"identity", "checked-consequence"}, {"case", where}, {"detail", e.what()}});
      violated_ = true;
      return;
    }
    errors_.push_back({{"kind", std::string(to_string(e.kind()))}, {"message", where + ": " + e.what()}});
    errored_ = true;
  }

  void algebra_identities(const FiniteOAlgebra& a, const std::string& where) {
    if (a.is_artinian()) return;
    const Ideal& p = a.augmentation_ideal();
    const Ideal& cong = a.congruence_ideal();
    check("annihilator-of-congruence-ideal", ideal_equal(a, annihilator_of_ideal(a, cong), p),
          where, "ann(I_A) differs from the augmentation ideal");
    equal("congruence-ideal-rank-one", free_rank(ideal_submodule(a, cong)), 1, where);
    const long phi = a.conormal_length();
    const long psi = a.congruence_length();
    check("conormal-bounds-congruence", phi >= psi, where, std::to_string(phi) + " < " + std::to_string(psi));
    if (a.depth_at_least_one()) {
      check("congruence-ideal-principal", principal_generator(a, cong).has_value(), where,
            "no single generator");
      const Ideal square = ideal_product(a, cong, cong);
      equal("congruence-ideal-conormal-length", length(Subquotient(a.underlying(), cong.generators, square.generators)), psi, where);
      if (gorenstein_test(a).conclusion == Conclusion::Gorenstein) {
        const GorsumReport g = gorsum_check(AlgebraMap::quotient(a, p));
        equal("gorenstein-congruence-sum", g.ell_psi_C, g.ell_psi_B + g.ell_I, where);
      }
    }
  }

  void module_identities(const AModule& m, const std::string& where) {
    const FiniteOAlgebra& a = m.algebra();
    const DefectReport r = wiles_defect(m);
    last_ = r;
    if (!r.depth_ok) return;
    const OModule& amb = m.underlying();
    const Subquotient mp = torsion_submodule(m, a.augmentation_ideal());
    const Subquotient mi = torsion_submodule(m, a.congruence_ideal());
    check("torsion-submodules-meet-trivially", intersect(mp, mi).is_zero(), where,
          "M[p] and M[I] intersect");
    const Subquotient quotient(amb, Matrix::identity(m.spec(), m.generator_count()), mi.numerator());
    const bool free_parts = length(torsion_part(mp)) == 0 && length(torsion_part(quotient)) == 0;
    check("torsion-free-parts-equal-rank", free_parts && free_rank(mp) == free_rank(quotient),
          where, "M[p] and M/M[I] are not free of equal rank");
    const long psi_a = a.congruence_length();
    equal("defect-decomposition", r.delta, r.d * (r.ell_phi - psi_a) + r.ell_gap, where);
    check("defect-nonnegative", r.delta >= 0, where, "negative defect");
    equal("bar-congruence-sequence", r.ell_psi_bar, r.ell_psi_M + r.ell_gap, where);
    equal("bar-congruence-length", r.ell_psi_bar, r.d * psi_a, where);
    const DvrElement w = DvrElement::uniformizer_power(m.spec(), 1);
    const Subquotient w_m = Subquotient::submodule(amb, w * Matrix::identity(m.spec(), m.generator_count()));
    for (const Subquotient* torsion : {&mp, &mi}) {
      const Subquotient meet = intersect(w_m, *torsion);
      const Subquotient excess(amb, meet.numerator(), w * torsion->numerator());
      equal("uniformizer-multiple-meets-torsion", length(excess), 0, where);
    }
    if (gorenstein_test(a).conclusion == Conclusion::Gorenstein) {
      const bool free_by_theorem = freeness_prediamond(m).conclusion == Conclusion::Free;
      const bool free_by_oracle = direct_freeness_oracle(m).conclusion == Conclusion::Free;
      check("prediamond-agrees-with-oracle", free_by_theorem == free_by_oracle,
            where, "criterion and oracle disagree");
    }
  }

  void presentation_identities(const CIPresentation& p, const std::string& where) {
    const VenkateshReport v = venkatesh_check(p);
    equal("cotangent-defect-identity", v.delta_B, v.aq2 - v.ell_I_over_J, where);
    check("cotangent-defect-bound", v.delta_B <= v.ell_I && (v.delta_B == v.ell_I) == v.minimal, where,
          "defect bound or minimality equivalence fails");
  }

  void run_case(const Case& c, Json& summaries) {
    Json summary;
    summary["case"] = c.label;
    try {
      algebra_identities(c.algebra, c.label);
      Json mods = Json::array();
      for (std::size_t i = 0; i < c.modules.size(); ++i) {
        module_identities(c.modules[i], c.label + "/module" + std::to_string(i));
        mods.push_back({{"generators", c.modules[i].generator_count()},
                        {"depthOk", last_.depth_ok},
                        {"d", last_.d},
                        {"delta", last_.delta}});
      }
      for (std::size_t i = 0; i < c.presentations.size(); ++i)
        presentation_identities(c.presentations[i], c.label + "/presentation" + std::to_string(i));
      summary["modules"] = std::move(mods);
    } catch (const Error& e) {
      record_error(c.label, e);
      summary["error"] = std::string(to_string(e.kind()));
    }
    summaries.push_back(std::move(summary));
  }

  Report finish(Json cases) const {
    Report report;
    report.command = "selftest";
    report.results["seed"] = options_.seed;
    report.results["count"] = options_.count;
    Json checks = Json::object();
    long total = 0;
    for (const auto& name : selftest_identities()) {
      checks[name] = counts_.at(name);
      total += counts_.at(name);
    }
    report.results["checks"] = std::move(checks);
    report.results["totalChecks"] = total;
    report.results["failures"] = failures_;
    report.results["cases"] = std::move(cases);
    report.diagnostics = errors_;
    for (const auto& f : failures_)
      report.diagnostics.push_back({{"kind", "InternalInvariantViolation"},
                                    {"message", "violated " + f.at("identity").get<std::string>() + " in " +
                                                    f.at("case").get<std::string>() + ": " + f.at("detail").get<std::string>()}});
    report.exit_code = violated_ ? kExitInvariantViolation : errored_ ? kExitPrecondition : kExitOk;
    return report;
  }

 private:
  const SelftestOptions& options_;
  std::map<std::string, long> counts_;
  Json failures_ = Json::array();
  Json errors_ = Json::array();
  bool violated_ = false;
  bool errored_ = false;
  DefectReport last_;
};

std::vector<AModule> canonical_list(const FiniteOAlgebra& a) {
  CanonicalModules c = canonical_modules(a);
  return {c.regular, c.augmentation, c.congruence_ideal, c.augmentation_ideal, free_module(a, 2)};
}

std::vector<Case> fixed_cases(const DvrSpec& spec) {
  std::vector<Case> cases;
  auto add = [&](std::string label, FiniteOAlgebra a, std::vector<CIPresentation> pres) {
    std::vector<AModule> mods = canonical_list(a);
    cases.push_back({std::move(label), std::move(a), std::move(mods), std::move(pres)});
  };
  add("trivial", trivial_algebra(spec), {identity_presentation(trivial_algebra(spec))});
  for (long m = 1; m <= 3; ++m)
    add("glue(" + std::to_string(m) + ")", glue_algebra(spec, m), {identity_presentation(glue_algebra(spec, m))});
  add("depth0", depth0_algebra(spec), {glue_onto_depth0(spec, 1), glue_onto_depth0(spec, 2), glue_onto_depth0(spec, 3)});
  add("gor-not-ci", gor_not_ci_algebra(spec), {gor_not_ci_presentation(spec)});
  add("multi-glue(3)", multi_glue_algebra(spec, 3), {});
  add("monogenic-ci(1,2)", monogenic_algebra(spec, {1, 2}), {identity_presentation(monogenic_algebra(spec, {1, 2}))});
  return cases;
}

Case random_case(const DvrSpec& spec, std::mt19937_64& rng, std::size_t index) {
  const std::string tag = "random" + std::to_string(index) + ":";
  const std::uint64_t pick = rng() % 6;
  std::string label;
  auto algebra = [&]() -> FiniteOAlgebra {
    switch (pick) {
      case 0: {
        const long m = 1 + static_cast<long>(rng() % 3);
        label = "glue(" + std::to_string(m) + ")";
        return glue_algebra(spec, m);
      }
      case 1: {
        std::vector<long> v{1 + static_cast<long>(rng() % 2)};
        if (rng() % 2 == 0) v.push_back(1 + static_cast<long>(rng() % 2));
        label = "monogenic-ci(" + std::to_string(v.size()) + ")";
        return monogenic_algebra(spec, v);
      }
      case 2: {
        const long r = 2 + static_cast<long>(rng() % 2);
        label = "multi-glue(" + std::to_string(r) + ")";
        return multi_glue_algebra(spec, r);
      }
      case 3: label = "gor-not-ci"; return gor_not_ci_algebra(spec);
      case 4: label = "depth0"; return depth0_algebra(spec);
      default: {
        const std::uint64_t seed = rng();
        const long degree = 2 + static_cast<long>(rng() % 3);
        label = "random-monogenic(" + std::to_string(degree) + ")";
        return random_monogenic_algebra(spec, seed, degree);
      }
    }
  }();
  const std::uint64_t module_seed = rng();
  const std::size_t blocks = 1 + rng() % 3;
  const bool torsion_free = rng() % 2 == 0;
  AModule m = random_module(algebra, module_seed, blocks, torsion_free);
  return {tag + label, std::move(algebra), {std::move(m)}, {}};
}

}  // namespace

const std::vector<std::string>& selftest_identities() {
  static const std::vector<std::string> names{
      "annihilator-of-congruence-ideal",
      "congruence-ideal-rank-one",
      "conormal-bounds-congruence",
      "congruence-ideal-principal",
      "congruence-ideal-conormal-length",
      "gorenstein-congruence-sum",
      "torsion-submodules-meet-trivially",
      "torsion-free-parts-equal-rank",
      "defect-decomposition",
      "defect-nonnegative",
      "bar-congruence-sequence",
      "bar-congruence-length",
      "uniformizer-multiple-meets-torsion",
      "prediamond-agrees-with-oracle",
      "cotangent-defect-identity",
      "cotangent-defect-bound",
  };
  return names;
}

Report run_selftest(const SelftestOptions& options) {
  Suite suite(options);
  const DvrSpec spec = DvrSpec::zlocal(5);
  Json cases = Json::array();
  std::vector<Case> fixed;
  try {
    fixed = fixed_cases(spec);
  } catch (const Error& e) {
    suite.record_error("corpus", e);
  }
  for (const auto& c : fixed) suite.run_case(c, cases);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    try {
      suite.run_case(random_case(spec, rng, i), cases);
    } catch (const Error& e) {
      suite.record_error("random" + std::to_string(i), e);
    }
  }
  return suite.finish(std::move(cases));
}

}  // namespace conmod::cli
