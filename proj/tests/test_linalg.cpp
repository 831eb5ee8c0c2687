#include <random>

#include "doctest.h"
#include "lieham/error.hpp"
#include "lieham/linalg.hpp"
#include "support.hpp"

using namespace lieham;

namespace {

ScalarMatrix M(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  ScalarMatrix m(r, c, Scalar(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = rref(scalar_identity(3));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(rref(ScalarMatrix(2, 4, Scalar(0))).rank == 0);
  CHECK(rref(M({{1, 2}, {2, 4}})).rank == 1);
  CHECK(rref(ScalarMatrix(0, 0)).rank == 0);
  auto r = rref(M({{0, 2, 4}, {1, 1, 1}}));
  CHECK(r.reduced == M({{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(scalar_identity(4)).empty());
  CHECK(nullspace(ScalarMatrix(1, 3, Scalar(0))).size() == 3);
  auto basis = nullspace(M({{1, 1, 0}}));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Vector{Scalar(-1), Scalar(1), Scalar(0)});
  CHECK(basis[1] == Vector{Scalar(0), Scalar(0), Scalar(1)});
}

TEST_CASE("inverse examples") {
  CHECK(inverse(M({{2, 0}, {0, Scalar(1, 3)}})) == M({{Scalar(1, 2), 0}, {0, 3}}));
  CHECK(inverse(M({{0, -16}, {-16, 0}})) == M({{0, Scalar(-1, 16)}, {Scalar(-1, 16), 0}}));
  try {
    (void)inverse(M({{1, 1}, {1, 1}}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
}

TEST_CASE("inverse over a quadratic field") {
  Scalar r3 = Scalar::sqrt(3);
  ScalarMatrix a = M({{-1, r3 / Scalar(2), Scalar(-1, 2)}, {r3 / Scalar(2), -1, 0}, {1, -r3 / Scalar(2), Scalar(-1, 2)}});
  CHECK(a * inverse(a) == scalar_identity(3));
}

TEST_CASE("random rational matrices: rref, nullspace and inverse properties") {
  std::mt19937_64 rng(testing_support::seed());
  for (int t = 0; t < 200; ++t) {
    std::size_t r = static_cast<std::size_t>(testing_support::uniform(rng, 1, 5));
    std::size_t c = static_cast<std::size_t>(testing_support::uniform(rng, 1, 6));
    ScalarMatrix m = testing_support::random_matrix(rng, r, c);
    RrefResult once = rref(m);
    RrefResult twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    auto ns = nullspace(m);
    CHECK(once.rank + ns.size() == c);
    for (const auto& v : ns) {
      for (const auto& x : mat_vec(m, v)) CHECK(x.is_zero());
    }
    ScalarMatrix sq = testing_support::random_matrix(rng, r, r, 1);
    if (determinant(sq).is_zero()) {
      CHECK(rank(sq) < r);
      CHECK_THROWS_AS(inverse(sq), Error);
    } else {
      ScalarMatrix inv = inverse(sq);
      CHECK(inv * sq == scalar_identity(r));
      CHECK(sq * inv == scalar_identity(r));
      CHECK(determinant(sq) * determinant(inv) == Scalar(1));
    }
  }
}

TEST_CASE("symbolic determinant matches numeric evaluation") {
  auto ring = Ring::make(0, {"a", "b"});
  PolyMatrix m(3, 3, Poly(ring));
  m(0, 0) = testing_support::P("a", ring);
  m(0, 1) = testing_support::P("b", ring);
  m(1, 0) = testing_support::P("b", ring);
  m(1, 1) = testing_support::P("a", ring);
  m(2, 2) = testing_support::P("a+b", ring);
  Poly d = determinant(m);
  CHECK(d == testing_support::P("(a^2-b^2)*(a+b)", ring));
  ScalarMatrix at = to_scalar(evaluate(m, {{"a", Scalar(3)}, {"b", Scalar(1)}}));
  CHECK(determinant(at) == Scalar(32));
}
