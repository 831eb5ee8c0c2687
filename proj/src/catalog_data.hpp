#pragma once

#include <string>
#include <vector>

#include "lieham/catalog.hpp"

namespace lieham::detail {

struct CatalogSource {
  std::string name;
  std::string algebra;
  std::string structure;
  std::string source;
  StringMatrix eta;
  std::vector<StringMatrix> omega;
  std::vector<Erratum> errata;
  std::vector<AlgebraParam> algebra_params;
  std::vector<BracketLiteral> brackets;
};

const std::vector<CatalogSource>& catalog_sources();

}  // namespace lieham::detail
