#pragma once

#include "lieham/lie_algebra.hpp"

namespace lieham::algebras {

/// sl(2,R) in the basis {J+, J-, J3}: [J-,J+] = 4 J3, [J3,J+] = 2 J+, [J3,J-] = -2 J-.
LieAlgebra sl2();
/// so(3,R): [L1,L2] = L3 and cyclic.
LieAlgebra so3();
/// so(n,R) in the basis N_{ij} = E_{ij} - E_{ji}, i < j, ordered lexicographically.
LieAlgebra so(std::size_t n);
/// Heisenberg algebra n_{3,1}: [e2,e3] = e1.
LieAlgebra heisenberg();
/// Two-dimensional non-abelian algebra: [e1,e2] = e1.
LieAlgebra two_dim_nonabelian();
/// s_{4,6}: [e2,e3] = e1, [e4,e2] = e2, [e4,e3] = -e3.
LieAlgebra s46();
/// n_{5,2}: [e3,e4] = e2, [e3,e5] = e1, [e4,e5] = e3.
LieAlgebra n52();
/// n_{6,1}: [n4,n5] = n2, [n4,n6] = n3, [n5,n6] = n1.
LieAlgebra n61();
/// su(1,1)-type constants: [e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = -e1.
LieAlgebra su11();

}  // namespace lieham::algebras
