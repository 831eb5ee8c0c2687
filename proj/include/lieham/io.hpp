#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lieham/catalog.hpp"
#include "lieham/invariants.hpp"
#include "lieham/operator.hpp"
#include "lieham/pencil.hpp"

namespace lieham {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become PARSE_ERROR with line and column.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// Scalars travel as strings such as "-3/2" or "1/2+3*sqrt(2)".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where);

/// { "dim": n, "field_sqrt": d, "brackets": [ { "i": 1, "j": 2, "out": { "3": "1" } }, ... ] }
Json algebra_to_json(const LieAlgebra& g);
/// Reads structure constants without checking skew-symmetry or Jacobi.
/// field_sqrt, when given, must be >= 0 and agree with every scalar (0 = rationals).
Tensor3<Scalar> structure_constants_from_json(const Json& j, long field_sqrt = -1);
LieAlgebra algebra_from_json(const Json& j, long field_sqrt = -1);

/// { "dim": n, "field_sqrt": d, "g": [[..]], "omega": [[..]], "params": [..] }
Json operator_to_json(const PolyOperator& op);
PolyOperator operator_from_json(const Json& j, long field_sqrt = -1);

/// A matrix of scalar strings, either bare or as { "matrix": [[..]] }.
Json matrix_to_json(const ScalarMatrix& m);
Json matrix_to_json(const PolyMatrix& m);
ScalarMatrix scalar_matrix_from_json(const Json& j, long field_sqrt = -1);

Json space_to_json(const std::vector<ScalarMatrix>& basis);
Json report_to_json(const VerificationReport& r);
Json report_to_json(const PencilReport& r);
Json report_to_json(const EntryReport& r);
Json report_to_json(const CatalogSummary& s);
Json system_to_json(const QuasilinearSystem& s);
Json entry_to_json(const CatalogEntry& e);

/// LaTeX for one polynomial in the display style used for operators: u^{1}, f^{12}, g_{14}, \alpha.
std::string latex(const Poly& p);
std::string latex(const PolyMatrix& m);
std::string latex(const ScalarMatrix& m);
/// g \partial_x + (linear part of omega) + (constant part of omega); summands that vanish are dropped.
std::string latex_operator(const PolyOperator& op);
/// Generic element t_1 B_1 + ... + t_k B_k of a space, as one matrix with named parameters.
std::string latex_space(const std::vector<ScalarMatrix>& basis, const std::string& param = "t");

}  // namespace lieham
