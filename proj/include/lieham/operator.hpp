#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieham/lie_algebra.hpp"

namespace lieham {

/// Outcome of one identity check; index and residual describe the first violation.
struct ConditionResult {
  std::string name;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<std::size_t> index;  // 0-based
  Poly residual;
};

struct VerificationReport {
  std::vector<ConditionResult> conditions;

  bool pass() const;
  const ConditionResult& at(const std::string& name) const;
  /// Name of the first failing condition, empty when all pass.
  std::string first_failure() const;
  std::string str() const;
};

/// Operator eta d/dx + (c^{ij}_k u^k + f^{ij}) in Darboux form. Entries live in
/// ring (field variables u1..un followed by parameters); eta, f and c are
/// expected to be free of field variables.
struct DarbouxOperator {
  RingPtr ring;
  Tensor3<Poly> c;
  PolyMatrix eta;
  PolyMatrix f;

  std::size_t dim() const { return c.dim(); }
};

/// General 1+0 operator g d/dx + omega(u) in flat coordinates; the Christoffel part is zero.
struct PolyOperator {
  RingPtr ring;
  PolyMatrix g;
  PolyMatrix omega;

  std::size_t dim() const { return g.rows(); }
};

/// Unvalidated triple, for diagnostics. Ring must start with u1..un.
DarbouxOperator make_darboux(const RingPtr& ring, Tensor3<Poly> c, PolyMatrix eta, PolyMatrix f);
/// Validated operator: eta must satisfy the metric condition and f the cocycle
/// condition for g, identically in the parameters.
DarbouxOperator build_darboux(const LieAlgebra& g, const PolyMatrix& eta, const PolyMatrix& f);
DarbouxOperator build_darboux(const LieAlgebra& g, const ScalarMatrix& eta, const ScalarMatrix& f);

using StringMatrix = std::vector<std::vector<std::string>>;
/// Operator from entry strings. Identifiers other than u1..un become parameters,
/// appended after the listed ones in order of appearance.
PolyOperator parse_operator(const StringMatrix& g, const StringMatrix& omega, const std::vector<std::string>& params = {});

PolyOperator to_poly_operator(const DarbouxOperator& op);
/// Reads c = d omega/du and f = omega(0); omega must be affine in the field variables and g constant.
DarbouxOperator to_darboux(const PolyOperator& op);

/// Checks eta symmetric, f skew, c skew, Jacobi, cocycle and metric conditions.
VerificationReport verify_darboux(const DarbouxOperator& op);

/// Phi^{ijk} = g^{is} d omega^{jk} / du^s.
Tensor3<Poly> phi_tensor(const PolyOperator& op);
/// S^{ijk} = omega^{is} d_s omega^{jk} + omega^{js} d_s omega^{ki} + omega^{ks} d_s omega^{ij}.
Tensor3<Poly> schouten_tensor(const PolyOperator& op);
/// Hamiltonianity for constant g and zero Christoffel part: omega skew, Schouten
/// identity, Phi^{ijk} = Phi^{kij} and d Phi / du = 0.
VerificationReport verify_theorem1(const PolyOperator& op);

/// Linear densities a_i u^i with c^{ij}_k a_j = 0 and f^{ij} a_j = 0; needs numeric c and f.
std::vector<Vector> operator_casimir_functionals(const DarbouxOperator& op);

/// u^i_t = V^i_k(u) u^k_x + W^i(u).
struct QuasilinearSystem {
  PolyMatrix v;
  std::vector<Poly> w;

  friend bool operator==(const QuasilinearSystem& a, const QuasilinearSystem& b) {
    return a.v == b.v && a.w == b.w;
  }
  std::string str() const;
};

/// V^i_k = g^{ij} d^2 h / du^j du^k, W^i = omega^{ij} dh/du^j. h is lifted into the operator ring.
QuasilinearSystem apply_to_density(const PolyOperator& op, const Poly& h);
/// Parses h first; names of x-derivatives such as u1_x are rejected.
QuasilinearSystem apply_to_density(const PolyOperator& op, const std::string& h);

/// New coordinates u~ = A u: eta~ = A eta A^T, c~ by the tensor law, f~ = A f A^T.
DarbouxOperator transform_operator(const DarbouxOperator& op, const ScalarMatrix& a);
/// g~ = A g A^T and omega~(u~) = A omega(A^{-1} u~) A^T.
PolyOperator transform_operator(const PolyOperator& op, const ScalarMatrix& a);

/// Tensor law for structure constants with polynomial entries.
Tensor3<Poly> transform_constants(const Tensor3<Poly>& c, const ScalarMatrix& a);

}  // namespace lieham
