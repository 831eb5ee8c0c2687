#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieham/lie_algebra.hpp"

namespace lieham {

/// Linear space of symmetric matrices given by a canonical basis.
struct SymmetricSpace {
  std::vector<ScalarMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

using QuadraticCasimirSpace = SymmetricSpace;
using MetricSpace = SymmetricSpace;

struct CocycleSpace {
  std::vector<ScalarMatrix> basis;
  std::vector<ScalarMatrix> coboundaries;
  std::size_t dim() const { return basis.size(); }
  std::size_t coboundary_dim() const { return coboundaries.size(); }
  std::size_t h2_dim() const { return basis.size() - coboundaries.size(); }
};

bool is_quadratic_casimir(const LieAlgebra& g, const ScalarMatrix& a);
bool is_compatible_metric(const LieAlgebra& g, const ScalarMatrix& eta);
bool is_two_cocycle(const LieAlgebra& g, const ScalarMatrix& f);

/// Symmetric a with a_{is} c^{sk}_j + a_{js} c^{sk}_i = 0.
QuadraticCasimirSpace quadratic_casimir_space(const LieAlgebra& g);
/// Symmetric eta with eta^{is} c^{jk}_s + eta^{js} c^{ik}_s = 0.
MetricSpace compatible_metric_space(const LieAlgebra& g);
/// Skew f with c^{ij}_s f^{sk} + cyclic = 0, plus coboundaries f^{ij} = c^{ij}_k t_k.
CocycleSpace two_cocycle_space(const LieAlgebra& g);

/// sum_i t_i basis_i over ring, where t_i are the given parameter names.
PolyMatrix generic_element(const std::vector<ScalarMatrix>& basis, std::size_t n, const RingPtr& ring,
                           const std::vector<std::string>& params);

struct Witness {
  std::vector<long> point;  // coefficients with respect to the space basis
  ScalarMatrix matrix;
};

/// First integer point (graded, then lexicographic order) at which the generic
/// element is nonsingular, or nullopt when det vanishes on the whole space.
std::optional<Witness> nondegenerate_witness(const std::vector<ScalarMatrix>& basis, std::size_t n);

struct DualityReport {
  std::size_t casimir_dim = 0;
  std::size_t metric_dim = 0;
  std::optional<Witness> casimir_witness;
  std::optional<Witness> metric_witness;
  bool casimir_inverse_is_metric = true;
  bool metric_inverse_is_casimir = true;
  bool ok() const { return casimir_dim == metric_dim && casimir_inverse_is_metric && metric_inverse_is_casimir; }
};

DualityReport casimir_metric_duality(const LieAlgebra& g);

struct MixedCocycleReport {
  std::size_t mixed_dim = 0;
  std::vector<ScalarMatrix> basis;  // n1 x n2 blocks beta^{ij'}
  std::size_t sum_dim = 0;
  std::size_t first_dim = 0;
  std::size_t second_dim = 0;
  bool formula_holds() const { return sum_dim == first_dim + second_dim + mixed_dim; }
};

/// Solves beta^{ij'} c^{hl}_i = 0 and beta^{ij'} gamma^{p'q'}_{j'} = 0 for the mixed block.
MixedCocycleReport mixed_cocycle_check(const LieAlgebra& g1, const LieAlgebra& g2);

/// Linear Casimir densities a_i u^i; the same space as center(g).
std::vector<Vector> linear_casimirs(const LieAlgebra& g);

}  // namespace lieham
