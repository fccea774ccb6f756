#include "conmod_cli/format.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

namespace conmod::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

void check_keys(const Json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) parse_fail(std::string(where) + ": expected an object");
  for (const auto& item : j.items())
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      parse_fail(std::string(where) + ": unknown key \"" + item.key() + "\"");
}

const Json& required(const Json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) parse_fail(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t parse_count(const Json& j, std::string_view where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(std::string(where) + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

FpPoly parse_poly(const DvrSpec& spec, const Json& j) {
  if (!j.is_array()) parse_fail("polynomial coefficients must be an array");
  FpPoly out;
  const auto p = static_cast<long long>(spec.prime());
  for (const auto& c : j) {
    if (!c.is_number_integer()) parse_fail("polynomial coefficient must be an integer");
    const long long r = ((c.get<long long>() % p) + p) % p;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name, std::string_view where) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) parse_fail(std::string(where) + ": unknown basis element \"" + name + "\"");
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> parse_names(const Json& j, std::string_view where) {
  if (!j.is_array() || j.empty()) parse_fail(std::string(where) + ": expected a non-empty array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : j) {
    if (!n.is_string()) parse_fail(std::string(where) + ": names must be strings");
    if (!seen.insert(n.get<std::string>()).second) parse_fail(std::string(where) + ": duplicate name " + n.get<std::string>());
    names.push_back(n.get<std::string>());
  }
  return names;
}

// A list of vectors of length n, stored as the columns of an n x k matrix.
Matrix parse_columns(const DvrSpec& spec, const Json& j, std::size_t n, std::string_view where) {
  if (!j.is_array()) parse_fail(std::string(where) + ": expected an array of vectors");
  Matrix out(spec, n, j.size());
  for (std::size_t c = 0; c < j.size(); ++c) out.set_col(c, parse_vector(spec, j[c], n));
  return out;
}

std::optional<std::size_t> unit_index(const Vector& one) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (one[i].is_zero()) continue;
    if (!one[i].is_one() || found) return std::nullopt;
    found = i;
  }
  return found;
}

AlgebraData parse_structure_constants(const DvrSpec& spec, const Json& j) {
  check_keys(j, "algebra", {"basis", "module_relations", "mult", "one", "lambda", "artinian"});
  AlgebraData d{spec, parse_names(required(j, "basis", "algebra"), "algebra.basis"), Matrix(spec, 0, 0), {}, {}, {}};
  const std::size_t s = d.basis_names.size();
  d.module_relations = j.contains("module_relations") ? parse_columns(spec, j.at("module_relations"), s, "algebra.module_relations")
                                                      : Matrix(spec, s, 0);
  d.one = parse_vector(spec, required(j, "one", "algebra"), s);
  d.lambda = parse_vector(spec, required(j, "lambda", "algebra"), s);

  std::vector<std::vector<std::optional<Vector>>> table(s, std::vector<std::optional<Vector>>(s));
  const Json& mult = required(j, "mult", "algebra");
  if (!mult.is_object()) parse_fail("algebra.mult: expected an object");
  for (const auto& item : mult.items()) {
    const std::string& key = item.key();
    // Basis names may contain '*'; take the unique split into two basis names.
    std::optional<std::pair<std::size_t, std::size_t>> split;
    for (auto star = key.find('*'); star != std::string::npos; star = key.find('*', star + 1)) {
      const auto left = std::find(d.basis_names.begin(), d.basis_names.end(), key.substr(0, star));
      const auto right = std::find(d.basis_names.begin(), d.basis_names.end(), key.substr(star + 1));
      if (left == d.basis_names.end() || right == d.basis_names.end()) continue;
      if (split) parse_fail("algebra.mult: ambiguous key \"" + key + "\"");
      split = {static_cast<std::size_t>(left - d.basis_names.begin()), static_cast<std::size_t>(right - d.basis_names.begin())};
    }
    if (!split) parse_fail("algebra.mult: key \"" + key + "\" is not a product of two basis elements");
    const auto [a, b] = *split;
    if (table[a][b]) parse_fail("algebra.mult: duplicate product " + key);
    table[a][b] = parse_vector(spec, item.value(), s);
  }
  const auto unit = unit_index(d.one);
  d.mult.assign(s, std::vector<Vector>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      if (table[a][b]) d.mult[a][b] = *table[a][b];
      else if (table[b][a]) d.mult[a][b] = *table[b][a];
      else if (unit == a) d.mult[a][b] = unit_vector(spec, s, b);
      else if (unit == b) d.mult[a][b] = unit_vector(spec, s, a);
      else parse_fail("algebra.mult: missing product " + d.basis_names[a] + "*" + d.basis_names[b]);
    }
  return d;
}

AlgebraData parse_monomial(const DvrSpec& spec, const Json& j) {
  check_keys(j, "algebra", {"variables", "monomials", "reductions", "module_relations", "variable_lambda", "artinian"});
  MonomialPresentation mp{spec, parse_names(required(j, "variables", "algebra"), "algebra.variables"), {}, {}, Matrix(spec, 0, 0), {}};
  const std::size_t nv = mp.variables.size();
  const Json& monomials = required(j, "monomials", "algebra");
  if (!monomials.is_array() || monomials.empty()) parse_fail("algebra.monomials: expected a non-empty array");
  for (const auto& m : monomials) {
    if (!m.is_array() || m.size() != nv) parse_fail("algebra.monomials: exponent vector of wrong length");
    std::vector<long> e;
    for (const auto& x : m) {
      if (!x.is_number_integer() || x.get<long>() < 0) parse_fail("algebra.monomials: exponents must be non-negative integers");
      e.push_back(x.get<long>());
    }
    mp.basis.push_back(std::move(e));
  }
  const std::size_t s = mp.basis.size();
  mp.module_relations = j.contains("module_relations") ? parse_columns(spec, j.at("module_relations"), s, "algebra.module_relations")
                                                       : Matrix(spec, s, 0);
  mp.variable_lambda = parse_vector(spec, required(j, "variable_lambda", "algebra"), nv);
  const Json& reductions = required(j, "reductions", "algebra");
  if (!reductions.is_object() || reductions.size() != nv) parse_fail("algebra.reductions: one entry per variable");
  for (const auto& v : mp.variables) {
    if (!reductions.contains(v)) parse_fail("algebra.reductions: missing variable " + v);
    const Json& rows = reductions.at(v);
    if (!rows.is_array() || rows.size() != s) parse_fail("algebra.reductions." + v + ": one vector per monomial");
    std::vector<Vector> images;
    for (const auto& r : rows) images.push_back(parse_vector(spec, r, s));
    mp.reductions.push_back(std::move(images));
  }
  return compile_monomial_presentation(mp);
}

FiniteOAlgebra parse_algebra(const DvrSpec& spec, const Json& j) {
  if (!j.is_object()) parse_fail("algebra: expected an object");
  AlgebraData d = j.contains("variables") ? parse_monomial(spec, j) : parse_structure_constants(spec, j);
  const bool artinian = j.contains("artinian") && j.at("artinian").is_boolean() && j.at("artinian").get<bool>();
  if (j.contains("artinian") && !j.at("artinian").is_boolean()) parse_fail("algebra.artinian must be a boolean");
  return artinian ? FiniteOAlgebra::validate_artinian(std::move(d)) : FiniteOAlgebra::validate(std::move(d));
}

AModule parse_module(const std::shared_ptr<const FiniteOAlgebra>& a, const Json& j, const std::string& name) {
  const std::string where = "modules." + name;
  if (!j.is_object()) parse_fail(where + ": expected an object");
  if (j.contains("builtin")) {
    check_keys(j, where, {"builtin", "rank"});
    const Json& kind = j.at("builtin");
    if (!kind.is_string()) parse_fail(where + ".builtin must be a string");
    if (kind == "regular") return regular_module(*a);
    if (kind == "augmentation") return augmentation_module(*a);
    if (kind == "residue") return residue_module(*a);
    if (kind == "congruence_ideal") return ideal_as_module(*a, a->congruence_ideal());
    if (kind == "augmentation_ideal") return ideal_as_module(*a, a->augmentation_ideal());
    if (kind == "free") return free_module(*a, parse_count(required(j, "rank", where), where + ".rank"));
    parse_fail(where + ": unknown builtin module " + kind.dump());
  }
  check_keys(j, where, {"generators", "o_relations", "action"});
  const DvrSpec& spec = a->spec();
  const std::size_t n = parse_count(required(j, "generators", where), where + ".generators");
  Matrix relations = j.contains("o_relations") ? parse_columns(spec, j.at("o_relations"), n, where + ".o_relations")
                                               : Matrix(spec, n, 0);
  const std::vector<std::string> names = basis_names(*a);
  const Json& action = required(j, "action", where);
  if (!action.is_object()) parse_fail(where + ".action: expected an object");
  std::vector<std::optional<Matrix>> given(names.size());
  for (const auto& item : action.items())
    given[index_of(names, item.key(), where + ".action")] = parse_matrix(spec, item.value(), n, n);
  const auto unit = unit_index(a->one());
  std::vector<Matrix> matrices;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (given[i]) matrices.push_back(*given[i]);
    else if (unit == i) matrices.push_back(Matrix::identity(spec, n));
    else parse_fail(where + ".action: missing basis element " + names[i]);
  }
  return AModule(a, n, std::move(relations), std::move(matrices));
}

CIPresentation parse_presentation(const DvrSpec& spec, const FiniteOAlgebra& target, const Json& j, const std::string& name) {
  const std::string where = "presentations." + name;
  check_keys(j, where, {"source", "alpha", "linear_part"});
  FiniteOAlgebra source = parse_algebra(spec, required(j, "source", where));
  Matrix alpha = parse_matrix(spec, required(j, "alpha", where), target.basis_size(), source.basis_size());
  std::optional<Matrix> linear;
  if (j.contains("linear_part")) {
    const Json& rows = j.at("linear_part");
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) parse_fail(where + ".linear_part: expected a non-empty matrix");
    linear = parse_matrix(spec, rows, rows.size(), rows[0].size());
  }
  return CIPresentation(std::move(source), target, std::move(alpha), std::move(linear));
}

Json element_list(const Vector& v) { return to_json(v); }

Json columns_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(element_list(m.col(c)));
  return out;
}

Json structure_block(const FiniteOAlgebra& a) {
  const std::vector<std::string> names = basis_names(a);
  Json j;
  j["basis"] = names;
  j["module_relations"] = columns_to_json(a.module_relations());
  const auto unit = unit_index(a.one());
  Json mult = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = i; k < names.size(); ++k) {
      if (unit == i || unit == k) continue;
      mult[names[i] + "*" + names[k]] = to_json(a.data().mult[i][k]);
    }
  j["mult"] = std::move(mult);
  j["one"] = to_json(a.one());
  j["lambda"] = to_json(a.lambda());
  if (a.is_artinian()) j["artinian"] = true;
  return j;
}

}  // namespace

DvrSpec parse_dvr(const Json& j) {
  check_keys(j, "dvr", {"kind", "p"});
  const Json& kind = required(j, "kind", "dvr");
  const std::size_t p = parse_count(required(j, "p", "dvr"), "dvr.p");
  if (!kind.is_string()) parse_fail("dvr.kind must be a string");
  try {
    if (kind == "zlocal") return DvrSpec::zlocal(p);
    if (kind == "ratfunc") return DvrSpec::ratfunc(p);
  } catch (const Error& e) {
    parse_fail(std::string("dvr: ") + e.what());
  }
  parse_fail("dvr.kind must be \"zlocal\" or \"ratfunc\"");
}

DvrElement parse_element(const DvrSpec& spec, const Json& j) {
  try {
    if (j.is_number_integer()) return DvrElement::from_integer(spec, mpz_class(std::to_string(j.get<long long>())));
    if (spec.kind() == DvrKind::ZLocal) {
      if (!j.is_string()) parse_fail("element must be a \"num/den\" string");
      const std::string text = j.get<std::string>();
      const auto slash = text.find('/');
      mpz_class num;
      mpz_class den = 1;
      if (num.set_str(text.substr(0, slash), 10) != 0) parse_fail("malformed element \"" + text + "\"");
      if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
        parse_fail("malformed element \"" + text + "\"");
      return DvrElement::from_fraction(spec, num, den);
    }
    if (!j.is_array() || j.size() != 2) parse_fail("element must be [[num coefficients], [den coefficients]]");
    return DvrElement::from_polys(spec, parse_poly(spec, j[0]), parse_poly(spec, j[1]));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    parse_fail(std::string("element: ") + e.what());
  }
}

Vector parse_vector(const DvrSpec& spec, const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    parse_fail("expected a vector of length " + std::to_string(expected));
  Vector v;
  for (const auto& e : j) v.push_back(parse_element(spec, e));
  return v;
}

Matrix parse_matrix(const DvrSpec& spec, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) parse_fail("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(spec, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = parse_vector(spec, j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

std::vector<std::string> basis_names(const FiniteOAlgebra& a) {
  std::vector<std::string> names = a.basis_names();
  if (names.size() != a.basis_size()) {
    names.clear();
    for (std::size_t i = 0; i < a.basis_size(); ++i) names.push_back("b" + std::to_string(i));
  }
  return names;
}

Json to_json(const DvrSpec& spec) {
  Json j;
  j["kind"] = spec.kind() == DvrKind::ZLocal ? "zlocal" : "ratfunc";
  j["p"] = spec.prime();
  return j;
}

Json to_json(const DvrElement& e) {
  if (e.spec().kind() == DvrKind::ZLocal) return e.rational().get_str();
  return Json::array({Json(e.poly_num()), Json(e.poly_den())});
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json algebra_to_json(const FiniteOAlgebra& a) { return structure_block(a); }

Json module_to_json(const AModule& m) {
  const std::vector<std::string> names = basis_names(m.algebra());
  Json j;
  j["generators"] = m.generator_count();
  j["o_relations"] = columns_to_json(m.o_relations());
  Json action = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) action[names[i]] = to_json(m.action()[i]);
  j["action"] = std::move(action);
  return j;
}

Json presentation_to_json(const CIPresentation& p) {
  Json j;
  j["source"] = structure_block(p.source());
  j["alpha"] = to_json(p.alpha());
  if (p.linear_part()) j["linear_part"] = to_json(*p.linear_part());
  return j;
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  check_keys(j, "document", {"dvr", "algebra", "modules", "presentations", "description"});
  Document doc;
  doc.spec = parse_dvr(required(j, "dvr", "document"));
  doc.algebra = std::make_shared<const FiniteOAlgebra>(parse_algebra(doc.spec, required(j, "algebra", "document")));
  if (j.contains("modules")) {
    const Json& modules = j.at("modules");
    if (!modules.is_object()) parse_fail("modules: expected an object");
    for (const auto& item : modules.items()) doc.modules.emplace(item.key(), parse_module(doc.algebra, item.value(), item.key()));
  }
  if (j.contains("presentations")) {
    const Json& pres = j.at("presentations");
    if (!pres.is_object()) parse_fail("presentations: expected an object");
    for (const auto& item : pres.items())
      doc.presentations.emplace(item.key(), parse_presentation(doc.spec, *doc.algebra, item.value(), item.key()));
  }
  return doc;
}

}  // namespace conmod::cli
