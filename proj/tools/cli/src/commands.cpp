#include "conmod_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conmod_cli/selftest.hpp"

namespace conmod::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json certificate_value(const CertificateValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

const AModule& find_module(const Document& doc, const std::string& name) {
  const auto it = doc.modules.find(name);
  if (it == doc.modules.end()) fail(ErrorKind::ParseError, "no module named \"" + name + "\"");
  return it->second;
}

const CIPresentation& find_presentation(const Document& doc, const std::string& name) {
  if (name.empty()) {
    if (doc.presentations.size() != 1) fail(ErrorKind::ParseError, "--presentation is required unless the file holds exactly one");
    return doc.presentations.begin()->second;
  }
  const auto it = doc.presentations.find(name);
  if (it == doc.presentations.end()) fail(ErrorKind::ParseError, "no presentation named \"" + name + "\"");
  return it->second;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& item : j.items()) flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

DvrSpec parse_dvr_flag(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::ParseError, "--dvr expects kind:p, e.g. zlocal:5");
  Json j;
  j["kind"] = text.substr(0, colon);
  try {
    j["p"] = std::stoull(text.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "--dvr: malformed prime in " + text);
  }
  return parse_dvr(j);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "malformed integer list " + text);
    }
  }
  return out;
}

Json emit_family(const FamilySpec& fs) {
  const FiniteOAlgebra a = build(fs);
  Json doc;
  for (const auto& info : list_families())
    if (info.family == fs.family) doc["description"] = info.description;
  doc["dvr"] = to_json(fs.dvr);
  doc["algebra"] = algebra_to_json(a);
  Json modules = Json::object();
  for (const char* kind : {"regular", "augmentation", "congruence_ideal", "augmentation_ideal"}) modules[kind]["builtin"] = kind;
  doc["modules"] = std::move(modules);
  Json pres = Json::object();
  if (fs.family == Family::Depth0Example) pres["glue_cover"] = presentation_to_json(glue_onto_depth0(fs.dvr, 1));
  else if (fs.family == Family::GorNotCI) pres["ci_cover"] = presentation_to_json(gor_not_ci_presentation(fs.dvr));
  else if (ci_test(a).conclusion == Conclusion::CompleteIntersection) pres["identity"] = presentation_to_json(identity_presentation(a));
  doc["presentations"] = std::move(pres);
  return doc;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InternalInvariantViolation: return kExitInvariantViolation;
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::NotAssociative:
    case ErrorKind::NotCommutative:
    case ErrorKind::NotUnital:
    case ErrorKind::LambdaNotMultiplicative:
    case ErrorKind::NotLocal:
    case ErrorKind::ConormalInfinite:
    case ErrorKind::IllDefinedMultiplication:
    case ErrorKind::NotFiniteLength:
    case ErrorKind::AugmentationNotInduced:
    case ErrorKind::NotSurjective:
    case ErrorKind::NotAlgebraMap:
    case ErrorKind::InvalidModule:
    case ErrorKind::IllDefinedMap:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidArgument: return kExitValidation;
    default: return kExitPrecondition;
  }
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = std::string(to_string(v.conclusion));
  Json cert = Json::object();
  for (const auto& [key, value] : v.certificate) cert[key] = certificate_value(value);
  j["certificate"] = std::move(cert);
  return j;
}

Json defect_to_json(const DefectReport& r) {
  Json j;
  j["d"] = r.d;
  j["ellPhi"] = r.ell_phi;
  j["ellPsi"] = r.ell_psi_M;
  j["ellPsiBar"] = r.ell_psi_bar;
  j["gap"] = r.ell_gap;
  j["delta"] = r.delta;
  j["depthOk"] = r.depth_ok;
  return j;
}

Json venkatesh_to_json(const VenkateshReport& r) {
  Json j;
  j["ellI"] = r.ell_I;
  j["ellJ"] = r.ell_J;
  j["ellIOverJ"] = r.ell_I_over_J;
  j["aq1"] = r.aq1;
  j["aq2"] = r.aq2;
  j["deltaB"] = r.delta_B;
  j["minimal"] = r.minimal;
  return j;
}

Json invariants_results(const FiniteOAlgebra& a) {
  Json j;
  j["basisSize"] = a.basis_size();
  if (a.is_artinian()) {
    j["artinian"] = true;
    j["length"] = length(a.underlying());
    j["socleLength"] = socle_length(a);
    j["gorenstein"] = socle_length(a) == 1;
    j["ci"] = ci_test(a).conclusion == Conclusion::CompleteIntersection;
    j["e"] = algebra_multiplicity(a);
    return j;
  }
  const DefectReport self = wiles_defect(regular_module(a));
  j["rank"] = a.rank();
  j["depthAtLeastOne"] = a.depth_at_least_one();
  j["ellPhi"] = a.conormal_length();
  j["ellPsi"] = a.congruence_length();
  if (const auto g = principal_generator(a, a.congruence_ideal())) j["congruenceIdealGenerator"] = to_json(*g);
  else j["congruenceIdeal"] = to_json(a.congruence_ideal().generators.transpose());
  j["e"] = algebra_multiplicity(a);
  j["gorenstein"] = gorenstein_test(a).conclusion == Conclusion::Gorenstein;
  j["ci"] = ci_test(a).conclusion == Conclusion::CompleteIntersection;
  j["delta"] = self.delta;
  return j;
}

Json defect_results(const AModule& m) {
  const DefectReport r = wiles_defect(m);
  Json j = defect_to_json(r);
  if (r.depth_ok) {
    const long delta_a = r.ell_phi - m.algebra().congruence_length();
    j["decomposition"]["dTimesDeltaA"] = r.d * delta_a;
    j["decomposition"]["gap"] = r.ell_gap;
  }
  return j;
}

Json freeness_results(const AModule& m, std::string_view criterion) {
  if (criterion == "prediamond") return verdict_to_json(freeness_prediamond(m));
  if (criterion == "diamond") return verdict_to_json(diamond_test(m));
  if (criterion == "oracle") return verdict_to_json(direct_freeness_oracle(m));
  if (criterion == "wiebe") return verdict_to_json(wiebe_module_test(m));
  if (criterion == "zero-dim-gorenstein") return verdict_to_json(zero_dim_gorenstein_free_test(m));
  fail(ErrorKind::ParseError, "unknown criterion " + std::string(criterion));
}

Json venkatesh_results(const CIPresentation& p) { return venkatesh_to_json(venkatesh_check(p)); }

Json Report::to_json() const {
  Json j;
  j["tool"] = "conmod";
  j["version"] = kToolVersion;
  j["command"] = command;
  if (!input_digest.empty()) j["inputDigest"] = "fnv1a64:" + input_digest;
  j["exitCode"] = exit_code;
  j["results"] = results;
  j["diagnostics"] = diagnostics;
  return j;
}

std::string render_table(const Json& results) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (results.is_object() && results.empty()) return {};
  flatten(results, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Congruence modules, conormal modules and Wiles defects over a discrete valuation ring", "conmod"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the machine-readable report");
  app.set_version_flag("--version", kToolVersion);

  std::string file;
  std::string module_name;
  std::string criterion = "prediamond";
  std::string presentation_name;

  auto* validate = app.add_subcommand("validate", "Check the algebra axioms and all module and presentation blocks");
  validate->add_option("file", file, "Document path, - for stdin")->required();
  auto* invariants = app.add_subcommand("invariants", "Conormal and congruence lengths, depth, rank, multiplicity, verdicts");
  invariants->add_option("file", file)->required();
  auto* defect = app.add_subcommand("defect", "Wiles defect of a module with its decomposition");
  defect->add_option("file", file)->required();
  defect->add_option("--module", module_name, "Module name")->required();
  auto* freeness = app.add_subcommand("freeness", "Freeness verdict for a module");
  freeness->add_option("file", file)->required();
  freeness->add_option("--module", module_name)->required();
  freeness->add_option("--criterion", criterion)
      ->check(CLI::IsMember({"prediamond", "diamond", "oracle", "wiebe", "zero-dim-gorenstein"}));
  auto* venkatesh = app.add_subcommand("venkatesh", "Cotangent lengths and the defect of the Cohen-Macaulay quotient");
  venkatesh->add_option("file", file)->required();
  venkatesh->add_option("--presentation", presentation_name);

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run the identity suite on corpus and seeded inputs");
  selftest->add_option("--seed", st.seed);
  selftest->add_option("--count", st.count);
  selftest->add_option("--inject-fault", st.inject_fault, "Perturb one identity (testing the harness)")
      ->group("");

  auto* corpus = app.add_subcommand("corpus", "Built-in example families");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List families");
  FamilySpec fs;
  std::string family;
  std::string dvr_text = "zlocal:5";
  std::string valuations_text;
  auto* corpus_emit = corpus->add_subcommand("emit", "Print a family member as a document");
  corpus_emit->add_option("family", family)->required();
  corpus_emit->add_option("--dvr", dvr_text, "kind:p");
  auto* parameter = corpus_emit->add_option("--parameter", fs.parameter, "m for glue, r for multi-glue, degree for random-monogenic");
  corpus_emit->add_option("--valuations", valuations_text, "Comma-separated coefficient valuations");
  corpus_emit->add_option("--seed", fs.seed);

  for (auto* sub : {validate, invariants, defect, freeness, venkatesh, selftest, corpus_list})
    sub->add_flag("--json", json, "Print the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Report report;
  std::string input;
  try {
    if (*corpus_emit) {
      const auto parsed = parse_family(family);
      if (!parsed) fail(ErrorKind::ParseError, "unknown family " + family);
      fs.family = *parsed;
      if (parameter->count() == 0) {
        if (fs.family == Family::MultiGlue || fs.family == Family::RandomMonogenic) fs.parameter = 3;
        if (fs.family == Family::MonogenicCI && valuations_text.empty()) valuations_text = "1";
      }
      fs.dvr = parse_dvr_flag(dvr_text);
      if (!valuations_text.empty()) fs.valuations = parse_long_list(valuations_text);
      out << emit_family(fs).dump(2) << "\n";
      return kExitOk;
    }
    if (*corpus_list) {
      report.command = "corpus list";
      Json families = Json::array();
      for (const auto& info : list_families()) families.push_back({{"name", info.name}, {"description", info.description}});
      report.results["families"] = std::move(families);
    } else if (*selftest) {
      report = run_selftest(st);
    } else {
      input = read_input(file);
      report.input_digest = fnv1a64_hex(input);
      const Document doc = parse_document(input);
      if (*validate) {
        report.command = "validate";
        report.results["valid"] = true;
        report.results["basisSize"] = doc.algebra->basis_size();
        report.results["artinian"] = doc.algebra->is_artinian();
        report.results["modules"] = doc.modules.size();
        report.results["presentations"] = doc.presentations.size();
      } else if (*invariants) {
        report.command = "invariants";
        report.results = invariants_results(*doc.algebra);
      } else if (*defect) {
        report.command = "defect";
        report.results = defect_results(find_module(doc, module_name));
      } else if (*freeness) {
        report.command = "freeness";
        report.results = freeness_results(find_module(doc, module_name), criterion);
      } else if (*venkatesh) {
        report.command = "venkatesh";
        report.results = venkatesh_results(find_presentation(doc, presentation_name));
      }
    }
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e.kind());
    report.results = Json::object();
    report.diagnostics.push_back({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
  }
  if (report.command.empty()) report.command = app.get_subcommands().front()->get_name();

  if (json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << render_table(report.results);
    for (const auto& d : report.diagnostics) err << d.at("message").get<std::string>() << "\n";
  }
  return report.exit_code;
}

}  // namespace conmod::cli
