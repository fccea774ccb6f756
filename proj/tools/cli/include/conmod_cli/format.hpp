#pragma once

// JSON document format for algebras, modules and presentations.
//
// {
//   "dvr": {"kind": "zlocal" | "ratfunc", "p": 5},
//   "algebra": {
//     "basis": ["1", "x"],
//     "module_relations": [[elt, ...], ...],     one O-relation per entry, basis coordinates
//     "mult": {"x*x": [elt, ...], ...},          every unordered pair once; pairs with the unit may be omitted
//     "one": [elt, ...],
//     "lambda": [elt, ...],
//     "artinian": false
//   },
//   "modules": {
//     "M": {"builtin": "regular" | "augmentation" | "residue" | "congruence_ideal" | "augmentation_ideal" | "free",
//           "rank": 2},
//     "N": {"generators": 2, "o_relations": [[elt, elt]], "action": {"x": [[row], [row]]}}
//   },
//   "presentations": {
//     "P": {"source": <algebra block>, "alpha": [[row], ...], "linear_part": [[row], ...]}
//   }
// }
//
// Instead of "mult" an algebra block may carry a monomial presentation:
//   "variables": ["x", "y"], "monomials": [[0,0], [1,0], ...],
//   "reductions": {"x": [[coords of x*m_0], [coords of x*m_1], ...]}, "variable_lambda": [elt, ...]
//
// Elements: ZLocal as "num/den" or "num" (or a JSON integer); RatFuncLocal as
// [[num coefficients], [den coefficients]] lowest degree first, or a JSON integer.
// Matrices are row-major arrays. Unknown keys are rejected.

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "conmod/corpus.hpp"

namespace conmod::cli {

using Json = nlohmann::ordered_json;

struct Document {
  DvrSpec spec = DvrSpec::zlocal(5);
  std::shared_ptr<const FiniteOAlgebra> algebra;
  std::map<std::string, AModule> modules;
  std::map<std::string, CIPresentation> presentations;
};

// Raises Error(ParseError) on malformed input; validation errors propagate with their own kind.
Document parse_document(const std::string& text);

DvrSpec parse_dvr(const Json& j);
DvrElement parse_element(const DvrSpec& spec, const Json& j);
Vector parse_vector(const DvrSpec& spec, const Json& j, std::size_t expected);
Matrix parse_matrix(const DvrSpec& spec, const Json& j, std::size_t rows, std::size_t cols);

std::vector<std::string> basis_names(const FiniteOAlgebra& a);

Json to_json(const DvrSpec& spec);
Json to_json(const DvrElement& e);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json algebra_to_json(const FiniteOAlgebra& a);
Json module_to_json(const AModule& m);
Json presentation_to_json(const CIPresentation& p);

}  // namespace conmod::cli
