#include <random>

#include "doctest.h"
#include "lieham/algebras.hpp"
#include "lieham/invariants.hpp"
#include "lieham/linalg.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lieham;

namespace {

ScalarMatrix sym(std::size_t n, std::initializer_list<std::tuple<int, int, Scalar>> entries) {
  ScalarMatrix m(n, n, Scalar(0));
  for (const auto& [i, j, v] : entries) {
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = v;
  }
  return m;
}

bool in_span(const std::vector<ScalarMatrix>& basis, const ScalarMatrix& m) {
  std::vector<Vector> rows;
  for (const auto& b : basis) rows.emplace_back(b.data().begin(), b.data().end());
  std::size_t before = span_basis(rows, m.data().size()).size();
  rows.emplace_back(m.data().begin(), m.data().end());
  return span_basis(rows, m.data().size()).size() == before;
}

}  // namespace

TEST_CASE("Casimir spaces") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(quadratic_casimir_space(LieAlgebra::abelian(n)).dim() == n * (n + 1) / 2);
  auto h = quadratic_casimir_space(algebras::heisenberg());
  REQUIRE(h.dim() == 1);
  CHECK(h.basis[0] == sym(3, {{1, 1, Scalar(1)}}));
  CHECK_FALSE(nondegenerate_witness(h.basis, 3).has_value());
  auto s = quadratic_casimir_space(algebras::s46());
  CHECK(s.dim() == 2);
  CHECK(in_span(s.basis, sym(4, {{1, 1, Scalar(1)}})));
  CHECK(in_span(s.basis, sym(4, {{1, 4, Scalar(1, 2)}, {2, 3, Scalar(1, 2)}})));
  CHECK(quadratic_casimir_space(algebras::sl2()).dim() == 1);
  CHECK(in_span(quadratic_casimir_space(algebras::sl2()).basis, sym(3, {{1, 2, Scalar(1)}, {3, 3, Scalar(-2)}})));
  CHECK(quadratic_casimir_space(algebras::so(4)).dim() == 2);
  CHECK(in_span(quadratic_casimir_space(algebras::n52()).basis,
                sym(5, {{3, 3, Scalar(1)}, {2, 5, Scalar(1)}, {1, 4, Scalar(-1)}})));
  CHECK(in_span(quadratic_casimir_space(algebras::n61()).basis,
                sym(6, {{1, 4, Scalar(1, 2)}, {2, 6, Scalar(1, 2)}, {3, 5, Scalar(-1, 2)}})));
}

TEST_CASE("metric spaces") {
  // su(1,1) in the basis with [e1,e2] = e1, [e1,e3] = -2e2, [e2,e3] = e3.
  auto a32 = LieAlgebra::from_brackets(3, {{1, 2, {{1, Scalar(1)}}}, {1, 3, {{2, Scalar(-2)}}}, {2, 3, {{3, Scalar(1)}}}});
  auto m = compatible_metric_space(a32);
  REQUIRE(m.dim() == 1);
  CHECK(in_span(m.basis, sym(3, {{1, 3, Scalar(1)}, {2, 2, Scalar(1, 2)}})));
  auto two = compatible_metric_space(algebras::two_dim_nonabelian());
  CHECK_FALSE(nondegenerate_witness(two.basis, 2).has_value());
  CHECK(compatible_metric_space(LieAlgebra::abelian(4)).dim() == 10);
  // eta^{1k} = 0, the remaining 2x2 block is free.
  CHECK(compatible_metric_space(algebras::heisenberg()).dim() == 3);
  CHECK_FALSE(nondegenerate_witness(compatible_metric_space(algebras::heisenberg()).basis, 3).has_value());
}

TEST_CASE("cocycle spaces") {
  auto sl2 = two_cocycle_space(algebras::sl2());
  CHECK(sl2.dim() == 3);
  CHECK(sl2.h2_dim() == 0);
  auto s = two_cocycle_space(algebras::s46());
  CHECK(s.dim() == 3);
  // theta2^theta3, theta2^theta4, theta3^theta4: first row and column vanish.
  for (const auto& f : s.basis) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(f(0, j).is_zero());
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    auto a = two_cocycle_space(LieAlgebra::abelian(n));
    CHECK(a.dim() == n * (n - 1) / 2);
    CHECK(a.h2_dim() == n * (n - 1) / 2);
  }
  auto so3 = two_cocycle_space(algebras::so3());
  CHECK(so3.dim() == 3);
  CHECK(so3.h2_dim() == 0);
  auto h = two_cocycle_space(algebras::heisenberg());
  CHECK(h.dim() == 3);
  CHECK(h.coboundary_dim() == 1);
  for (const auto& b : h.coboundaries) CHECK(is_two_cocycle(algebras::heisenberg(), b));
}

TEST_CASE("witness search") {
  auto so3 = quadratic_casimir_space(algebras::so3());
  auto w = nondegenerate_witness(so3.basis, 3);
  REQUIRE(w.has_value());
  CHECK(w->point == std::vector<long>{1});
  auto so4 = quadratic_casimir_space(direct_sum(algebras::so3(), algebras::so3()));
  auto w4 = nondegenerate_witness(so4.basis, 6);
  REQUIRE(w4.has_value());
  CHECK(w4->point == std::vector<long>{1, 1});
  CHECK_FALSE(nondegenerate_witness({}, 3).has_value());
}

TEST_CASE("Casimir-metric duality") {
  auto sl2 = casimir_metric_duality(algebras::sl2());
  CHECK(sl2.ok());
  CHECK(sl2.casimir_dim == 1);
  // The Casimir is a multiple of the inverse Killing form.
  ScalarMatrix kinv = inverse(killing_form(algebras::sl2()));
  CHECK(in_span(quadratic_casimir_space(algebras::sl2()).basis, kinv));
  auto ab = casimir_metric_duality(LieAlgebra::abelian(3));
  CHECK(ab.casimir_dim == 6);
  CHECK(ab.metric_dim == 6);
  CHECK(ab.ok());
  auto s = casimir_metric_duality(algebras::s46());
  CHECK(s.casimir_dim == 2);
  CHECK(s.metric_dim == 2);
  CHECK(s.ok());
}

TEST_CASE("mixed cocycle block") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto r = mixed_cocycle_check(algebras::sl2(), LieAlgebra::abelian(k));
    CHECK(r.mixed_dim == 0);
    CHECK(r.formula_holds());
    auto s = mixed_cocycle_check(algebras::s46(), LieAlgebra::abelian(k));
    CHECK(s.mixed_dim == k);
    CHECK(s.formula_holds());
    for (const auto& beta : s.basis) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < k; ++j) CHECK(beta(i, j).is_zero());
      }
    }
  }
  auto so = mixed_cocycle_check(algebras::so3(), algebras::so3());
  CHECK(so.mixed_dim == 0);
  CHECK(so.formula_holds());
}

TEST_CASE("linear Casimirs") {
  CHECK(linear_casimirs(LieAlgebra::abelian(3)).size() == 3);
  CHECK(linear_casimirs(algebras::sl2()).empty());
  auto n52 = linear_casimirs(algebras::n52());
  REQUIRE(n52.size() == 2);
  CHECK(n52[0] == Vector{1, 0, 0, 0, 0});
  CHECK(n52[1] == Vector{0, 1, 0, 0, 0});
}

TEST_CASE("returned bases satisfy their equations and match the oracle") {
  std::mt19937_64 rng(testing_support::seed());
  std::vector<LieAlgebra> algs{LieAlgebra::abelian(3), algebras::sl2(),       algebras::so3(),
                               algebras::heisenberg(), algebras::s46(),       algebras::n52(),
                               algebras::su11(),       algebras::n61(),       algebras::two_dim_nonabelian(),
                               algebras::so(4),        direct_sum_abelian(algebras::s46(), 2)};
  for (const auto& g : algs) {
    auto cas = quadratic_casimir_space(g);
    auto met = compatible_metric_space(g);
    auto coc = two_cocycle_space(g);
    for (const auto& a : cas.basis) CHECK(is_quadratic_casimir(g, a));
    for (const auto& e : met.basis) CHECK(is_compatible_metric(g, e));
    for (const auto& f : coc.basis) CHECK(is_two_cocycle(g, f));
    for (const auto& b : coc.coboundaries) CHECK(in_span(coc.basis, b));
    CHECK(cas.dim() == oracle::casimir_dim(g, rng));
    CHECK(met.dim() == oracle::metric_dim(g, rng));
    CHECK(coc.dim() == oracle::cocycle_dim(g, rng));
    // A nondegenerate Casimir inverts to a metric, so the dimensions agree then.
    if (nondegenerate_witness(cas.basis, g.dim())) CHECK(cas.dim() == met.dim());
    if (structure_tags(g).semisimple) {
      CHECK(coc.h2_dim() == 0);
    }
  }
}
