#pragma once

#include <string>

#include "lieham/operator.hpp"

namespace lieham {

struct PencilReport {
  std::string mode;  // "darboux" or "lambda"
  VerificationReport conditions;

  bool compatible() const { return conditions.pass(); }
};

/// Mixed identities of two Darboux operators over a common ring, indexed (i, j, k):
/// drv1 is the mixed Jacobi tensor contracted with u, drv2 the mixed cocycle
/// residual, condgc2 = g1^{is} c2^{jk}_s + g1^{js} c2^{ik}_s + g2^{is} c1^{jk}_s + g2^{js} c1^{ik}_s.
struct MixedTensors {
  RingPtr ring;
  Tensor3<Poly> drv1;
  Tensor3<Poly> drv2;
  Tensor3<Poly> condgc2;
};

MixedTensors mixed_tensors(const DarbouxOperator& a, const DarbouxOperator& b);

/// Both operands must pass verify_darboux (INVALID_OPERAND otherwise); checks drv1, drv2 and condgc2.
PencilReport pencil_compatible_darboux(const DarbouxOperator& a, const DarbouxOperator& b);

/// a + lambda b over the merged ring with a fresh parameter named lambda.
PolyOperator pencil_operator(const PolyOperator& a, const PolyOperator& b, const std::string& lambda = "lambda");
/// Runs verify_theorem1 on a + lambda b; pass means identically in lambda, u and parameters.
PencilReport pencil_compatible_general(const PolyOperator& a, const PolyOperator& b);

/// Coefficients of lambda^0, lambda^1, lambda^2 of the Schouten tensor and of
/// Phi^{ijk} - Phi^{kij} for the pencil a + lambda b.
struct LambdaExpansion {
  RingPtr ring;  // ring of the coefficients (lambda removed)
  Tensor3<Poly> schouten[3];
  Tensor3<Poly> phi_cyclic[3];
};

LambdaExpansion lambda_expansion(const PolyOperator& a, const PolyOperator& b);

}  // namespace lieham
