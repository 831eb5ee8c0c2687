#pragma once

#include "lieham/operator.hpp"

namespace lieham::examples {

/// KdV as a quasilinear system in Mokhov's coordinates: the first operator
/// (g = diag(1,-1,-1), so(2,1)-type Poisson part), over Q(sqrt 2) together with the second.
PolyOperator kdv_a();
/// The second KdV operator, with degenerate leading coefficient.
PolyOperator kdv_b();
/// h_A = -1/2 ((u1-u3)^2 - sqrt(2)(u1+u3)) over the ring of kdv_a().
Poly kdv_density_a();
/// h_B = u1^2 - u2^2 - u3^2 over the ring of kdv_b().
Poly kdv_density_b();
/// Right-hand side of the KdV system in these coordinates.
QuasilinearSystem kdv_system();
/// Linear change of variables over Q(sqrt 3) taking kdv_a() to the su(1,1) operator.
ScalarMatrix kdv_to_su11_matrix();
/// Expected image: eta = [[0,0,-1/2],[0,-1/4,0],[-1/2,0,0]], omega = su(1,1) constants, f = 0.
PolyOperator kdv_a_su11_form();

/// Operator of the generalized KdV equation u_t + 3(n+1) u^n u_x + u_xxx = 0.
PolyOperator generalized_kdv(unsigned n);

/// The 3-waves operator; the same matrices as kdv_a().
PolyOperator three_waves();

/// Pencil example: so(2,1)-type pair with eta = diag(-alpha, alpha, alpha) and the
/// n_{3,1} representative with -alpha/2 corner blocks; free cocycle parameters f1_ij, f2_ij.
PolyOperator pencil_example_first();
PolyOperator pencil_example_second();

}  // namespace lieham::examples
