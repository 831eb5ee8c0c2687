#include <random>

#include "doctest.h"
#include "lieham/error.hpp"
#include "lieham/parse.hpp"
#include "support.hpp"

using namespace lieham;
using testing_support::P;

TEST_CASE("partial derivatives") {
  auto r = Ring::make(3, {"alpha"});
  CHECK(P("2*u1^2 - 3*u1*u2", r).partial("u1") == P("4*u1 - 3*u2", r));
  CHECK(P("7/3", r).partial("u1").is_zero());
  CHECK(P("alpha*u3", r).partial("u3") == P("alpha", r));
  try {
    (void)P("u1", r).partial("lambda");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownIndeterminate);
  }
}

TEST_CASE("identically zero") {
  auto r = Ring::make(2, {"lambda"});
  CHECK((P("u1", r) - P("u1", r)).is_zero());
  CHECK((P("(u1+u2)^2", r) - P("u1^2", r) - P("2*u1*u2", r) - P("u2^2", r)).is_zero());
  CHECK_FALSE(P("lambda*u1", r).is_zero());
}

TEST_CASE("graded lex printing order") {
  auto r = Ring::make(2, {"a"});
  CHECK(P("a + u2 + u1^2 + 1 + u1*u2 + u1", r).str() == "u1^2+u1*u2+u1+u2+a+1");
  CHECK(P("-u1 + (1+sqrt(2))*u2", r).str() == "-u1+(1+sqrt(2))*u2");
}

TEST_CASE("parameter division gives Laurent monomials") {
  auto r = Ring::make(1, {"g", "a"});
  Poly p = P("g/a", r);
  CHECK(p.str() == "g*a^-1");
  CHECK(P(p.str(), r) == p);
  CHECK((p * P("a", r)) == P("g", r));
  CHECK(p.evaluate(std::map<std::string, Scalar>{{"a", Scalar(2)}}) == P("g/2", r));
  CHECK_THROWS_AS(P("1/u1", r), Error);
  CHECK_THROWS_AS(P("1/(a+g)", r), Error);
}

TEST_CASE("lift and merge rings") {
  auto a = Ring::make(2, {"alpha"});
  auto b = Ring::make(2, {"beta"});
  auto m = Ring::merge(a, b);
  CHECK(m->size() == 4);
  CHECK(m->var(3).name == "beta");
  CHECK(P("alpha*u1", a).lift(m) == P("alpha*u1", m));
  CHECK_THROWS_AS(P("alpha", a).lift(b), Error);
}

TEST_CASE("substitution is a ring map") {
  auto r = Ring::make(2);
  std::map<std::size_t, Poly> sub{{0, P("u1+u2", r)}, {1, P("u1-u2", r)}};
  CHECK(P("u1*u2", r).substitute(sub, r) == P("u1^2-u2^2", r));
}

TEST_CASE("coefficients in an indeterminate") {
  auto r = Ring::make(1, {"lambda"});
  auto coeffs = P("u1 + lambda^2*u1 - 3*lambda", r).coefficients_in(r->require("lambda"));
  CHECK(coeffs.size() == 3);
  CHECK(coeffs[0] == P("u1", r));
  CHECK(coeffs[1] == P("-3", r));
  CHECK(coeffs[2] == P("u1", r));
}

namespace {

Poly random_poly(std::mt19937_64& rng, const RingPtr& r) {
  Poly p(r);
  int terms = testing_support::uniform(rng, 0, 4);
  for (int t = 0; t < terms; ++t) {
    Exponents e(r->size(), 0);
    for (auto& x : e) x = testing_support::uniform(rng, 0, 2);
    p.add_term(e, testing_support::small_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("product rule on random sparse polynomials") {
  std::mt19937_64 rng(testing_support::seed());
  auto r = Ring::make(3, {"alpha"});
  for (int t = 0; t < 200; ++t) {
    Poly p = random_poly(rng, r);
    Poly q = random_poly(rng, r);
    std::size_t v = static_cast<std::size_t>(testing_support::uniform(rng, 0, 3));
    CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    CHECK(parse_poly(p.str(), r) == p);
  }
}

TEST_CASE("identifier scanning and jet names") {
  CHECK(identifiers_in("alpha*u1 + f12 - sqrt(2)*alpha") == std::vector<std::string>{"alpha", "u1", "f12"});
  CHECK(is_field_var_name("u12"));
  CHECK_FALSE(is_field_var_name("u0"));
  CHECK(is_jet_name("u1_x"));
  CHECK(is_jet_name("u3_xx"));
  CHECK_FALSE(is_jet_name("f1_x"));
}
