#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieham/lie_algebra.hpp"
#include "lieham/operator.hpp"

namespace lieham {

/// Correction of one printed cell. target is "eta" or "omega<b>" for the b-th printed summand.
struct Erratum {
  std::string target;
  std::size_t row;  // 1-based
  std::size_t col;  // 1-based
  std::string printed;
  std::string corrected;
};

/// Parameter of the algebra itself, with the value used for numeric invariants.
struct AlgebraParam {
  std::string name;
  std::string value;
};

/// [e_i, e_j] = sum coef * e_k with coefficients that may involve algebra parameters.
struct BracketLiteral {
  std::size_t i;
  std::size_t j;
  std::vector<std::pair<std::size_t, std::string>> out;
};

struct CatalogEntry {
  std::string name;
  std::string algebra_name;
  std::string structure;  // expected classification label
  std::string source;
  std::vector<AlgebraParam> algebra_params;
  StringMatrix printed_eta;
  std::vector<StringMatrix> printed_omega;  // summands as printed
  std::vector<Erratum> errata;
  std::vector<BracketLiteral> brackets;

  StringMatrix eta;    // errata applied
  StringMatrix omega;  // errata applied, summands combined
  std::vector<std::string> eta_params;
  std::vector<std::string> f_params;
  LieAlgebra algebra;  // algebra parameters at their representative values
  StructureTags tags;

  std::size_t dim() const { return algebra.dim(); }
  std::map<std::string, Scalar> representative_values() const;
  /// The printed family, symbolic in every parameter, algebra parameters first.
  PolyOperator op() const;
  /// Structure constants from the bracket list over the ring of op().
  Tensor3<Poly> symbolic_constants() const;
};

/// Table rows A_{2,1} .. A_{6,18}, then "sl3" and "g2".
std::vector<std::string> catalog_list();
CatalogEntry catalog_get(const std::string& name);

enum class CheckStatus { Pass, Flag, Fail };
const char* status_name(CheckStatus s);

struct CatalogCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct EntryReport {
  std::string name;
  std::vector<CatalogCheck> checks;
  double seconds = 0;

  /// Worst status over all checks.
  CheckStatus status() const;
  const CatalogCheck& at(const std::string& check) const;
  std::string str() const;
};

struct CatalogSummary {
  std::vector<EntryReport> entries;
  double seconds = 0;

  std::size_t count(CheckStatus s) const;
  std::string str() const;
};

EntryReport verify_entry(const std::string& name);
/// Verifies every entry, one task per entry.
CatalogSummary verify_all(bool parallel = true);

}  // namespace lieham
