#include "lieham/examples.hpp"

#include <string>

#include "lieham/parse.hpp"

namespace lieham::examples {

PolyOperator kdv_a() {
  return parse_operator({{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}},
                         {{"0", "-2*u3", "2*u2"}, {"2*u3", "0", "2*u1"}, {"-2*u2", "-2*u1", "0"}});
}

PolyOperator kdv_b() {
  return parse_operator({{"1/2", "0", "1/2"}, {"0", "0", "0"}, {"1/2", "0", "1/2"}},
                         {{"0", "u1-u3+1/sqrt(2)", "0"},
                          {"u3-u1-1/sqrt(2)", "0", "u3-u1+1/sqrt(2)"},
                          {"0", "u1-u3-1/sqrt(2)", "0"}});
}

Poly kdv_density_a() { return parse_poly("-1/2*((u1-u3)^2-sqrt(2)*(u1+u3))", kdv_a().ring); }

Poly kdv_density_b() { return parse_poly("u1^2-u2^2-u3^2", kdv_b().ring); }

QuasilinearSystem kdv_system() {
  RingPtr ring = Ring::make(3);
  auto p = [&](const char* s) { return parse_poly(s, ring); };
  QuasilinearSystem sys{PolyMatrix(3, 3, Poly(ring)), {}};
  sys.v(0, 0) = p("-1/2");
  sys.v(0, 2) = p("1/2");
  sys.v(2, 0) = p("-1/2");
  sys.v(2, 2) = p("1/2");
  sys.w = {p("u2*(u1-u3)+u2/sqrt(2)"), p("(u1-u3)^2+(u1+u3)/sqrt(2)"), p("u2*(u1-u3)-u2/sqrt(2)")};
  return sys;
}

ScalarMatrix kdv_to_su11_matrix() {
  const Scalar h = Scalar::sqrt(3) * Scalar(1, 2);
  ScalarMatrix a(3, 3, Scalar(0));
  a(0, 0) = Scalar(-1);
  a(0, 1) = h;
  a(0, 2) = Scalar(-1, 2);
  a(1, 0) = h;
  a(1, 1) = Scalar(-1);
  a(2, 0) = Scalar(1);
  a(2, 1) = -h;
  a(2, 2) = Scalar(-1, 2);
  return a;
}

PolyOperator kdv_a_su11_form() {
  return parse_operator({{"0", "0", "-1/2"}, {"0", "-1/4", "0"}, {"-1/2", "0", "0"}},
                        {{"0", "u1", "-2*u2"}, {"-u1", "0", "u3"}, {"2*u2", "-u3", "0"}});
}

PolyOperator generalized_kdv(unsigned n) {
  const std::string k = std::to_string(3 * (n + 1));
  const std::string e = std::to_string(static_cast<long>(n) - 1);
  const std::string term = k + "*u1^" + e;
  return parse_operator({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}},
                        {{"0", "1", "0"}, {"-1", "0", "-" + term}, {"0", term, "0"}});
}

PolyOperator three_waves() { return kdv_a(); }

PolyOperator pencil_example_first() {
  return parse_operator({{"-alpha", "0", "0"}, {"0", "alpha", "0"}, {"0", "0", "alpha"}},
                        {{"0", "-2*u3+f1_12", "2*u2+f1_13"},
                         {"2*u3-f1_12", "0", "2*u1+f1_23"},
                         {"-2*u2-f1_13", "-2*u1-f1_23", "0"}},
                        {"alpha", "f1_12", "f1_13", "f1_23"});
}

PolyOperator pencil_example_second() {
  return parse_operator({{"-alpha/2", "0", "-alpha/2"}, {"0", "0", "0"}, {"-alpha/2", "0", "-alpha/2"}},
                        {{"0", "u1-u3+f2_12", "f2_13"},
                         {"u3-u1-f2_12", "0", "u3-u1+f2_23"},
                         {"-f2_13", "u1-u3-f2_23", "0"}},
                        {"alpha", "f2_12", "f2_13", "f2_23"});
}

}  // namespace lieham::examples
