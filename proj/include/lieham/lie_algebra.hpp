#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieham/identities.hpp"
#include "lieham/matrix.hpp"

namespace lieham {

/// [e_i, e_j] = sum_k out[k] e_k, indices 1-based as in the JSON format.
struct BracketSpec {
  std::size_t i;
  std::size_t j;
  std::map<std::size_t, Scalar> out;
};

/// Finite-dimensional Lie algebra given by structure constants c^{ij}_k,
/// with [e^i, e^j] = c^{ij}_k e^k. Construction enforces skew-symmetry and Jacobi.
class LieAlgebra {
 public:
  static LieAlgebra from_tensor(Tensor3<Scalar> c, std::vector<std::string> labels = {});
  /// Lists brackets with i < j; skew completion is implied.
  static LieAlgebra from_brackets(std::size_t n, const std::vector<BracketSpec>& brackets,
                                  std::vector<std::string> labels = {});
  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return c_.dim(); }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Tensor3<Scalar>& tensor() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The square-free d of the coefficient field, 0 for Q.
  long field() const;

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(e_i) acting on coordinate vectors.
  ScalarMatrix ad(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  LieAlgebra(Tensor3<Scalar> c, std::vector<std::string> labels) : c_(std::move(c)), labels_(std::move(labels)) {}

  Tensor3<Scalar> c_;
  std::vector<std::string> labels_;
};

ScalarMatrix killing_form(const LieAlgebra& g);
std::vector<Vector> center(const LieAlgebra& g);
/// Canonical basis of [V, W].
std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& v, const std::vector<Vector>& w);
std::vector<Vector> derived_algebra(const LieAlgebra& g);
/// Dimensions g, [g,g], [g,[g,g]], ... until stabilization.
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
/// Dimensions g, [g,g], [[g,g],[g,g]], ... until stabilization.
std::vector<std::size_t> derived_series(const LieAlgebra& g);
/// Basis of {T : T[x,y] = [x,Ty]} as n x n matrices.
std::vector<ScalarMatrix> centroid(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);
/// g plus k copies of the one-dimensional algebra; k = 0 returns g.
LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k);
/// New basis e~^i = a^i_l e^l: c~^{ij}_k = a^i_l a^j_m c^{lm}_s b^s_k with B = A^{-1}.
LieAlgebra change_basis(const LieAlgebra& g, const ScalarMatrix& a);
Tensor3<Scalar> transform_structure_constants(const Tensor3<Scalar>& c, const ScalarMatrix& a);

struct TwoStepNilpotent {
  LieAlgebra algebra;
  ScalarMatrix casimir;
};

/// Algebra on {e^1..e^n, f^1..f^n} with [e^i, e^j] = c^{ij}_s f^s and the Casimir
/// matrix [[0, a/2], [a/2, b]], i.e. the quadratic form a_{ij} e^i f^j + b_{ij} f^i f^j.
TwoStepNilpotent build_two_step_nilpotent(const LieAlgebra& g, const ScalarMatrix& a, const ScalarMatrix& b);

struct StructureTags {
  bool abelian = false;
  bool nilpotent = false;
  std::size_t nilpotent_class = 0;  // meaningful when nilpotent
  bool solvable = false;
  bool semisimple = false;
  bool simple = false;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  std::size_t centroid_dim = 0;
  bool central_factor = false;  // the center is not contained in [g,g]
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> derived;

  /// Classification label: Abelian, Simple, Direct sum, k-Step Nilpotent, Solvable, Levi decomposable.
  std::string label() const;
};

StructureTags structure_tags(const LieAlgebra& g);

}  // namespace lieham
