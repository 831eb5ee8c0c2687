#include <random>

#include "doctest.h"
#include "lieham/algebras.hpp"
#include "lieham/linalg.hpp"
#include "support.hpp"

using namespace lieham;

namespace {

ScalarMatrix diag(std::initializer_list<Scalar> d) {
  ScalarMatrix m(d.size(), d.size(), Scalar(0));
  std::size_t i = 0;
  for (const auto& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

std::vector<LieAlgebra> pool() {
  return {LieAlgebra::abelian(3), algebras::sl2(),      algebras::so3(), algebras::heisenberg(),
          algebras::s46(),        algebras::n52(),      algebras::su11(), algebras::two_dim_nonabelian(),
          algebras::n61(),        algebras::so(4)};
}

}  // namespace

TEST_CASE("Jacobi defect") {
  CHECK(jacobi_defect(Tensor3<Scalar>(3, Scalar(0))).empty());
  CHECK(jacobi_defect(algebras::so3().tensor()).empty());
  // [e1,e2] = e3, [e1,e3] = e2: e1 acts on the abelian ideal span{e2,e3}, so Jacobi holds.
  Tensor3<Scalar> ok(3, Scalar(0));
  ok(0, 1, 2) = Scalar(1);
  ok(1, 0, 2) = Scalar(-1);
  ok(0, 2, 1) = Scalar(1);
  ok(2, 0, 1) = Scalar(-1);
  CHECK(jacobi_defect(ok).empty());
  // [e1,e2] = e3, [e2,e3] = e2: [[e2,e3],e1] = [e2,e1] = -e3.
  Tensor3<Scalar> bad(3, Scalar(0));
  bad(0, 1, 2) = Scalar(1);
  bad(1, 0, 2) = Scalar(-1);
  bad(1, 2, 1) = Scalar(1);
  bad(2, 1, 1) = Scalar(-1);
  auto defect = jacobi_defect(bad);
  CHECK_FALSE(defect.empty());
  CHECK(defect.front().index == std::vector<std::size_t>{0, 1, 2, 2});
  CHECK_THROWS_AS(LieAlgebra::from_tensor(bad), Error);
}

TEST_CASE("constructor rejects non-skew tensors") {
  Tensor3<Scalar> c(2, Scalar(0));
  c(0, 1, 0) = Scalar(1);
  try {
    (void)LieAlgebra::from_tensor(c);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAlgebra);
  }
}

TEST_CASE("Killing forms") {
  CHECK(killing_form(algebras::so3()) == diag({-2, -2, -2}));
  ScalarMatrix k_sl2(3, 3, Scalar(0));
  k_sl2(0, 1) = k_sl2(1, 0) = Scalar(-16);
  k_sl2(2, 2) = Scalar(8);
  CHECK(killing_form(algebras::sl2()) == k_sl2);
  CHECK(is_zero_matrix(killing_form(LieAlgebra::abelian(4))));
  // K = -2(n-2) I in the N_ij basis.
  for (std::size_t n = 3; n <= 5; ++n) {
    std::size_t d = n * (n - 1) / 2;
    CHECK(killing_form(algebras::so(n)) == scalar_identity(d).scaled(Scalar(-2 * static_cast<long>(n - 2))));
  }
}

TEST_CASE("so(n) in the N basis matches the explicit so(3) up to relabeling") {
  // N12, N13, N23 correspond to L3, L2, L1.
  ScalarMatrix a(3, 3, Scalar(0));
  a(0, 2) = Scalar(1);
  a(1, 1) = Scalar(1);
  a(2, 0) = Scalar(1);
  CHECK(change_basis(algebras::so3(), a) == algebras::so(3));
}

TEST_CASE("center") {
  CHECK(center(LieAlgebra::abelian(4)).size() == 4);
  auto z = center(algebras::s46());
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(center(algebras::so3()).empty());
}

TEST_CASE("series and nilpotency") {
  auto h = structure_tags(algebras::heisenberg());
  CHECK(h.nilpotent);
  CHECK(h.nilpotent_class == 2);
  auto n52 = structure_tags(algebras::n52());
  CHECK(n52.nilpotent_class == 3);
  CHECK(n52.label() == "3-Step Nilpotent");
  CHECK(derived_series(algebras::so3()) == std::vector<std::size_t>{3});
  CHECK_FALSE(structure_tags(algebras::so3()).solvable);
  auto ab = structure_tags(LieAlgebra::abelian(2));
  CHECK(ab.abelian);
  CHECK(ab.nilpotent_class == 1);
}

TEST_CASE("structure labels") {
  CHECK(structure_tags(algebras::so3()).label() == "Simple");
  CHECK(structure_tags(algebras::sl2()).label() == "Simple");
  CHECK(structure_tags(algebras::so(4)).label() == "Direct sum");
  CHECK(structure_tags(algebras::s46()).label() == "Solvable");
  CHECK(structure_tags(direct_sum_abelian(algebras::s46(), 1)).label() == "Direct sum");
  CHECK(structure_tags(algebras::n61()).label() == "2-Step Nilpotent");
  CHECK(structure_tags(direct_sum(algebras::sl2(), algebras::sl2())).label() == "Direct sum");
}

TEST_CASE("semisimple iff Killing form nonsingular") {
  for (const auto& g : pool()) {
    auto t = structure_tags(g);
    CHECK(t.semisimple == !determinant(killing_form(g)).is_zero());
    if (t.abelian) CHECK(t.nilpotent_class == 1);
  }
}

TEST_CASE("direct sums") {
  LieAlgebra so4 = direct_sum(algebras::so3(), algebras::so3());
  CHECK(so4.dim() == 6);
  CHECK(center(so4).empty());
  CHECK(direct_sum_abelian(algebras::so3(), 0) == algebras::so3());
  LieAlgebra s = direct_sum_abelian(algebras::s46(), 1);
  CHECK(s.dim() == 5);
  CHECK(center(s).size() == 2);
  LieAlgebra r2 = LieAlgebra::from_brackets(1, {});
  (void)r2;
}

TEST_CASE("basis change") {
  LieAlgebra g = algebras::so3();
  CHECK(change_basis(g, scalar_identity(3)) == g);
  // The w-algebra [w1,w2] = -2 w3, [w1,w3] = 2 w2, [w2,w3] = 2 w1 maps to the su(1,1) constants.
  LieAlgebra w = LieAlgebra::from_brackets(3, {{1, 2, {{3, Scalar(-2)}}}, {1, 3, {{2, Scalar(2)}}}, {2, 3, {{1, Scalar(2)}}}});
  Scalar h = Scalar::sqrt(3) / Scalar(2);
  ScalarMatrix a(3, 3, Scalar(0));
  a(0, 0) = Scalar(-1);
  a(0, 1) = h;
  a(0, 2) = Scalar(-1, 2);
  a(1, 0) = h;
  a(1, 1) = Scalar(-1);
  a(2, 0) = Scalar(1);
  a(2, 1) = -h;
  a(2, 2) = Scalar(-1, 2);
  LieAlgebra mapped = change_basis(w, a);
  LieAlgebra expected =
      LieAlgebra::from_brackets(3, {{1, 2, {{1, Scalar(1)}}}, {1, 3, {{2, Scalar(-2)}}}, {2, 3, {{3, Scalar(1)}}}});
  CHECK(mapped == expected);
  // Swapping L1 and L2 flips every sign.
  ScalarMatrix p(3, 3, Scalar(0));
  p(0, 1) = p(1, 0) = p(2, 2) = Scalar(1);
  CHECK(change_basis(g, p).tensor() == transform_structure_constants(g.tensor(), p));
  LieAlgebra swapped = change_basis(g, p);
  CHECK(swapped.c(0, 1, 2) == Scalar(-1));
  CHECK(swapped.c(1, 2, 0) == Scalar(-1));
  CHECK_THROWS_AS(change_basis(g, ScalarMatrix(3, 3, Scalar(0))), Error);
}

TEST_CASE("random basis changes: Killing law and center dimension") {
  std::mt19937_64 rng(testing_support::seed());
  auto algs = pool();
  for (int t = 0; t < 200; ++t) {
    const LieAlgebra& g = algs[static_cast<std::size_t>(t) % algs.size()];
    ScalarMatrix a = testing_support::random_invertible(rng, g.dim());
    LieAlgebra h = change_basis(g, a);
    CHECK(killing_form(h) == a * killing_form(g) * a.transpose());
    CHECK(center(h).size() == center(g).size());
    CHECK(structure_tags(h).label() == structure_tags(g).label());
  }
}

TEST_CASE("two-step nilpotent builder") {
  ScalarMatrix m(3, 3, Scalar(0));
  m(0, 0) = Scalar(1);
  m(1, 2) = m(2, 1) = Scalar(-1);
  Scalar alpha(3);
  auto built = build_two_step_nilpotent(algebras::su11(), m.scaled(alpha.inverse()), ScalarMatrix(3, 3, Scalar(0)));
  CHECK(built.algebra.dim() == 6);
  CHECK(jacobi_defect(built.algebra.tensor()).empty());
  CHECK(casimir_residual(built.algebra.tensor(), built.casimir).empty());
  // x^T C x = (1/alpha)(2 e1 f1 - 2 e2 f3 - 2 e3 f2)/2 * 2: entries pair e_i with f_j.
  CHECK(built.casimir(0, 3) == Scalar(1, 6));
  CHECK(built.casimir(1, 5) == Scalar(-1, 6));
  CHECK(built.casimir(2, 4) == Scalar(-1, 6));
  CHECK(structure_tags(built.algebra).label() == "2-Step Nilpotent");

  auto ab = build_two_step_nilpotent(LieAlgebra::abelian(2), scalar_identity(2), ScalarMatrix(2, 2, Scalar(0)));
  CHECK(structure_tags(ab.algebra).abelian);
  CHECK(ab.casimir(0, 2) == Scalar(1, 2));

  ScalarMatrix kinv = inverse(killing_form(algebras::so3())).scaled(Scalar(-1, 2));
  auto so = build_two_step_nilpotent(algebras::so3(), kinv, scalar_identity(3));
  CHECK(jacobi_defect(so.algebra.tensor()).empty());

  try {
    (void)build_two_step_nilpotent(algebras::so3(), diag({1, 1, 2}), ScalarMatrix(3, 3, Scalar(0)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACasimir);
  }
}

TEST_CASE("direct sums over different radicals are rejected") {
  LieAlgebra a = LieAlgebra::from_brackets(2, {{1, 2, {{1, Scalar::sqrt(2)}}}});
  LieAlgebra b = LieAlgebra::from_brackets(2, {{1, 2, {{1, Scalar::sqrt(3)}}}});
  try {
    (void)direct_sum(a, b);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}
