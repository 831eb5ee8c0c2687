// Acceptance report: one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion N] [--seed S]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lieham/algebras.hpp"
#include "lieham/catalog.hpp"
#include "lieham/error.hpp"
#include "lieham/examples.hpp"
#include "lieham/identities.hpp"
#include "lieham/invariants.hpp"
#include "lieham/linalg.hpp"
#include "lieham/operator.hpp"
#include "lieham/pencil.hpp"
#include "oracle.hpp"

using namespace lieham;

namespace {

std::uint64_t g_seed = 20240611;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

ScalarMatrix zeros(std::size_t n) { return ScalarMatrix(n, n, Scalar(0)); }

ScalarMatrix diag(std::initializer_list<Scalar> d) {
  ScalarMatrix m = zeros(d.size());
  std::size_t i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    ScalarMatrix m(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(uniform(rng, -2, 2));
    if (!determinant(m).is_zero()) return m;
  }
}

ScalarMatrix random_combination(const std::vector<ScalarMatrix>& basis, std::size_t n, std::mt19937_64& rng) {
  ScalarMatrix m = zeros(n);
  for (const auto& b : basis) m = m + b.scaled(Scalar(uniform(rng, -3, 3)));
  return m;
}

ScalarMatrix sym_unit(std::size_t n, std::size_t i, std::size_t j) {
  ScalarMatrix e = zeros(n);
  e(i, j) = Scalar(1);
  e(j, i) = Scalar(1);
  return e;
}

ScalarMatrix skew_unit(std::size_t n, std::size_t i, std::size_t j) {
  ScalarMatrix e = zeros(n);
  e(i, j) = Scalar(1);
  e(j, i) = Scalar(-1);
  return e;
}

std::string dims(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Pool of small algebras with their metric and cocycle spaces.
struct PoolEntry {
  LieAlgebra g;
  SymmetricSpace metrics;
  CocycleSpace cocycles;
};

std::vector<PoolEntry> pool() {
  std::vector<LieAlgebra> algs{algebras::so3(),        algebras::sl2(),   algebras::su11(),
                               algebras::heisenberg(), algebras::s46(),   algebras::two_dim_nonabelian(),
                               LieAlgebra::abelian(3), algebras::n52(),   direct_sum_abelian(algebras::so3(), 1)};
  std::vector<PoolEntry> out;
  for (auto& g : algs) out.push_back({g, compatible_metric_space(g), two_cocycle_space(g)});
  return out;
}

// A Darboux-form operator for g, valid or with one identity broken.
PolyOperator random_operator(const PoolEntry& p, std::mt19937_64& rng, int mutate) {
  const std::size_t n = p.g.dim();
  ScalarMatrix eta = random_combination(p.metrics.basis, n, rng);
  ScalarMatrix f = random_combination(p.cocycles.basis, n, rng);
  const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
  const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
  if (mutate == 1) eta = eta + sym_unit(n, i, j);
  if (mutate == 2 && i != j) f = f + skew_unit(n, i, j);
  RingPtr ring = Ring::make(n);
  return to_poly_operator(make_darboux(ring, to_poly(p.g.tensor(), ring), to_poly(eta, ring), to_poly(f, ring)));
}

Outcome criterion1() {
  Outcome o;
  auto s = verify_all();
  std::size_t darboux = 0;
  for (const auto& e : s.entries) {
    bool ok = e.at("darboux").status == CheckStatus::Pass;
    darboux += ok;
    o.require(ok, e.name + " darboux");
    o.require(e.status() != CheckStatus::Fail, e.name + " " + e.str());
    if (e.status() == CheckStatus::Flag)
      for (const auto& c : e.checks)
        if (c.status == CheckStatus::Flag) o.note("flag " + e.name + " " + c.name + ": " + c.detail);
  }
  o.require(s.entries.size() == 35, "35 entries");
  o.require(s.seconds < 60, "runtime under 60 s");
  std::ostringstream ss;
  ss << darboux << "/" << s.entries.size() << " entries pass verify_darboux";
  o.note(ss.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.require(killing_form(algebras::so3()) == diag({-2, -2, -2}), "so(3) Killing form diag(-2,-2,-2)");
  ScalarMatrix sl2(3, 3, Scalar(0));
  sl2(0, 1) = sl2(1, 0) = Scalar(-16);
  sl2(2, 2) = Scalar(8);
  o.require(killing_form(algebras::sl2()) == sl2, "sl(2) Killing form [[0,-16,0],[-16,0,0],[0,0,8]]");
  for (std::size_t n = 3; n <= 5; ++n) {
    ScalarMatrix k = killing_form(algebras::so(n));
    const std::size_t m = k.rows();
    Scalar s = k(0, 0);
    o.require(k == scalar_identity(m).scaled(s), "so(" + std::to_string(n) + ") Killing form is scalar");
    std::string line = "so(" + std::to_string(n) + ") scalar " + s.str();
    if (s != Scalar(-static_cast<long>(n) - 2)) line += ", printed -(n+2) = " + std::to_string(-static_cast<long>(n) - 2) + " (flag)";
    o.note(line);
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  auto triple = [&](const LieAlgebra& g) {
    return dims(quadratic_casimir_space(g).dim(), compatible_metric_space(g).dim(), two_cocycle_space(g).dim());
  };
  auto oracle_triple = [&](const LieAlgebra& g) {
    return dims(oracle::casimir_dim(g, rng), oracle::metric_dim(g, rng), oracle::cocycle_dim(g, rng));
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = LieAlgebra::abelian(n);
    o.require(triple(g) == dims(n * (n + 1) / 2, n * (n + 1) / 2, n * (n - 1) / 2), "abelian " + std::to_string(n));
  }
  const std::vector<std::pair<std::string, LieAlgebra>> named{
      {"sl(2)", algebras::sl2()}, {"so(3)", algebras::so3()}, {"s46", algebras::s46()}};
  const std::vector<std::string> expected{dims(1, 1, 3), dims(1, 1, 3), dims(2, 2, 3)};
  for (std::size_t k = 0; k < named.size(); ++k) {
    o.require(triple(named[k].second) == expected[k], named[k].first + " " + expected[k]);
    o.require(triple(named[k].second) == oracle_triple(named[k].second), named[k].first + " oracle");
  }
  o.require(quadratic_casimir_space(algebras::so(4)).dim() == 2, "so(4) Casimir dim 2");

  auto h = algebras::heisenberg();
  auto met = compatible_metric_space(h);
  auto coc = two_cocycle_space(h);
  o.require(quadratic_casimir_space(h).dim() == 1, "Heisenberg Casimir dim 1");
  o.require(!nondegenerate_witness(met.basis, 3).has_value(), "Heisenberg metrics have no nondegenerate element");
  o.require(met.dim() == oracle::metric_dim(h, rng), "Heisenberg metric dim matches oracle");
  o.require(met.dim() == 1, "Heisenberg metric dim 1 (computed " + std::to_string(met.dim()) + ")");
  o.note("Heisenberg " + triple(h) + ", cocycles computed " + std::to_string(coc.dim()));
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t with_witness = 0;
  for (const auto& name : catalog_list()) {
    auto e = catalog_get(name);
    auto d = casimir_metric_duality(e.algebra);
    if (!d.casimir_witness) continue;
    ++with_witness;
    o.require(d.ok(), name);
    o.require(is_compatible_metric(e.algebra, inverse(d.casimir_witness->matrix)),
              name + " inverse of witness");
  }
  o.note(std::to_string(with_witness) + " catalog algebras with a nondegenerate Casimir");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto a = examples::kdv_a();
  auto b = examples::kdv_b();
  o.require(verify_darboux(to_darboux(a)).pass(), "(a) A verifies");
  o.require(verify_darboux(to_darboux(b)).pass(), "(a) B verifies");
  o.require(pencil_compatible_darboux(to_darboux(a), to_darboux(b)).compatible(), "(b) Darboux pencil");
  o.require(pencil_compatible_general(a, b).compatible(), "(b) lambda pencil");

  auto target = examples::kdv_system();
  auto sa = apply_to_density(a, examples::kdv_density_a());
  auto sb = apply_to_density(b, examples::kdv_density_b());
  auto factor = [&](const QuasilinearSystem& s) -> std::string {
    for (long k : {1L, 2L, -1L, -2L}) {
      QuasilinearSystem t{target.v.scaled(Scalar(k)), {}};
      for (const auto& w : target.w) t.w.push_back(w * Poly::constant(w.ring(), Scalar(k)));
      if (s == t) return std::to_string(k);
    }
    return "none";
  };
  const std::string fa = factor(sa), fb = factor(sb);
  o.require(fa == "1", "(c) A applied to h_A equals the system (factor " + fa + ")");
  o.require(fb == "1", "(c) B applied to h_B equals the system (factor " + fb + ")");

  auto t = transform_operator(a, examples::kdv_to_su11_matrix());
  auto expect = examples::kdv_a_su11_form();
  o.require(t.g == expect.g && t.omega == expect.omega, "(d) image is the su(1,1) form");
  auto td = to_darboux(t);
  o.require(td.eta(0, 2).constant_value() == Scalar(-1, 2), "(d) alpha = -1/2");
  o.require(td.f == PolyMatrix(3, 3, Poly(td.ring)), "(d) f = 0");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 5, "under 5 s");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (unsigned n = 1; n <= 3; ++n)
    o.require(verify_theorem1(examples::generalized_kdv(n)).pass(), "n = " + std::to_string(n));
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  auto p = pool();
  const int cases = 200;
  auto pick = [&] { return &p[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.size()) - 1))]; };

  int basis_ok = 0;
  for (int t = 0; t < cases; ++t) {
    const auto* e = pick();
    const std::size_t n = e->g.dim();
    ScalarMatrix a = random_invertible(rng, n);
    auto h = change_basis(e->g, a);
    bool ok = quadratic_casimir_space(h).dim() == quadratic_casimir_space(e->g).dim() &&
              compatible_metric_space(h).dim() == e->metrics.dim() &&
              two_cocycle_space(h).dim() == e->cocycles.dim() &&
              two_cocycle_space(h).h2_dim() == e->cocycles.h2_dim() &&
              structure_tags(h).label() == structure_tags(e->g).label();
    auto op = random_operator(*e, rng, uniform(rng, 0, 2));
    auto top = transform_operator(op, a);
    ok = ok && verify_theorem1(op).pass() == verify_theorem1(top).pass() &&
         verify_darboux(to_darboux(op)).pass() == verify_darboux(to_darboux(top)).pass();
    basis_ok += ok;
  }
  o.require(basis_ok == cases, "basis-change invariance " + std::to_string(basis_ok) + "/" + std::to_string(cases));

  int equiv_ok = 0, negative = 0;
  for (int t = 0; t < cases; ++t) {
    const auto* e = pick();
    auto op = random_operator(*e, rng, uniform(rng, 0, 2));
    auto d = verify_darboux(to_darboux(op));
    auto th = verify_theorem1(op);
    equiv_ok += d.pass() == th.pass() && d.at("metric-compatibility").pass == th.at("phi-cyclic").pass &&
                (d.at("jacobi").pass && d.at("two-cocycle").pass) == th.at("schouten").pass;
    negative += !d.pass();
  }
  o.require(equiv_ok == cases, "Darboux/Hamiltonian equivalence " + std::to_string(equiv_ok) + "/" + std::to_string(cases));
  o.require(negative > 20, "enough negative cases");

  int lambda_ok = 0, compatible = 0;
  for (int t = 0; t < cases; ++t) {
    const auto* e = pick();
    const std::size_t n = e->g.dim();
    std::vector<const PoolEntry*> same;
    for (const auto& q : p)
      if (q.g.dim() == n) same.push_back(&q);
    const auto* f = same[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(same.size()) - 1))];
    auto a = random_operator(*e, rng, 0);
    auto b = uniform(rng, 0, 1) ? random_operator(*f, rng, 0) : transform_operator(a, random_invertible(rng, n));
    auto ex = lambda_expansion(a, b);
    auto m = mixed_tensors(to_darboux(a), to_darboux(b));
    auto sa = schouten_tensor(a), sb = schouten_tensor(b);
    auto pa = phi_tensor(a), pb = phi_tensor(b);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ok = ok && ex.schouten[0](i, j, k) == sa(i, j, k).lift(ex.ring) &&
               ex.schouten[2](i, j, k) == sb(i, j, k).lift(ex.ring) &&
               ex.schouten[1](i, j, k) == -(m.drv1(i, j, k) + m.drv2(i, j, k)).lift(ex.ring) &&
               ex.phi_cyclic[0](i, j, k) == (pa(i, j, k) - pa(k, i, j)).lift(ex.ring) &&
               ex.phi_cyclic[2](i, j, k) == (pb(i, j, k) - pb(k, i, j)).lift(ex.ring) &&
               ex.phi_cyclic[1](i, j, k) == -m.condgc2(i, k, j).lift(ex.ring);
        }
    bool dc = pencil_compatible_darboux(to_darboux(a), to_darboux(b)).compatible();
    ok = ok && dc == pencil_compatible_general(a, b).compatible();
    compatible += dc;
    lambda_ok += ok;
  }
  o.require(lambda_ok == cases, "lambda expansion by order " + std::to_string(lambda_ok) + "/" + std::to_string(cases));
  o.require(compatible > 10 && compatible < cases - 10, "both pencil outcomes occur");

  int sum_ok = 0;
  for (int t = 0; t < cases; ++t) {
    const auto* e1 = pick();
    const auto* e2 = pick();
    if (e1->g.dim() + e2->g.dim() > 6) e2 = &p[5];  // two-dimensional partner keeps the sum small
    auto g1 = change_basis(e1->g, random_invertible(rng, e1->g.dim()));
    auto g2 = change_basis(e2->g, random_invertible(rng, e2->g.dim()));
    auto r = mixed_cocycle_check(g1, g2);
    sum_ok += r.formula_holds() && r.sum_dim == two_cocycle_space(direct_sum(g1, g2)).dim() &&
              r.sum_dim == oracle::cocycle_dim(direct_sum(g1, g2), rng);
  }
  o.require(sum_ok == cases, "direct-sum cocycle formula " + std::to_string(sum_ok) + "/" + std::to_string(cases));
  for (std::size_t k = 1; k <= 3; ++k) {
    auto r = mixed_cocycle_check(algebras::s46(), LieAlgebra::abelian(k));
    o.require(r.formula_holds() && r.mixed_dim == k, "s46 + " + std::to_string(k) + " n11 mixed block free");
  }
  o.note("4 suites x " + std::to_string(cases) + " cases, seed " + std::to_string(g_seed));
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto passes = [](const TwoStepNilpotent& t) {
    return jacobi_defect(t.algebra.tensor()).empty() && casimir_residual(t.algebra.tensor(), t.casimir).empty() &&
           is_quadratic_casimir(t.algebra, t.casimir);
  };
  ScalarMatrix m(3, 3, Scalar(0));
  m(0, 0) = Scalar(1);
  m(1, 2) = m(2, 1) = Scalar(-1);
  for (Scalar alpha : {Scalar(3), Scalar(-2, 5), Scalar(1)}) {
    auto t = build_two_step_nilpotent(algebras::su11(), m.scaled(alpha.inverse()), zeros(3));
    o.require(passes(t), "su(1,1)-type, alpha = " + alpha.str());
    // Quadratic form (1/alpha)(e1 f1 - e2 f3 - e3 f2): coefficient of e_i f_j is C_ij + C_ji.
    ScalarMatrix form = zeros(6);
    form(0, 3) = form(3, 0) = (alpha.inverse() * Scalar(1, 2));
    form(1, 5) = form(5, 1) = -(alpha.inverse() * Scalar(1, 2));
    form(2, 4) = form(4, 2) = -(alpha.inverse() * Scalar(1, 2));
    o.require(t.casimir == form, "n~ Casimir (1/alpha)(e1f1 - e2f3 - e3f2), alpha = " + alpha.str());
  }
  ScalarMatrix kinv = inverse(killing_form(algebras::so3())).scaled(Scalar(-1, 2));
  o.require(passes(build_two_step_nilpotent(algebras::so3(), kinv, scalar_identity(3))), "so(3)");
  o.require(passes(build_two_step_nilpotent(LieAlgebra::abelian(2), scalar_identity(2), zeros(2))), "abelian 2");
  o.require(passes(build_two_step_nilpotent(LieAlgebra::abelian(3), diag({1, 2, -1}), scalar_identity(3))),
            "abelian 3");
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = verify_entry("g2");
  auto e = catalog_get("g2");
  o.require(e.dim() == 14, "dimension 14");
  o.require(jacobi_defect(e.algebra.tensor()).empty(), "Jacobi");
  o.require(r.at("eta-inverse-casimir").status == CheckStatus::Pass, "printed eta inverse is a Casimir");
  o.require(r.at("cocycle-membership").status == CheckStatus::Pass, "printed cocycle directions lie in Z2");
  o.require(e.f_params.size() == 10, "10 printed cocycle parameters");
  auto z = two_cocycle_space(e.algebra);
  o.note("dim Z2 = " + std::to_string(z.dim()) + ", H2 = " + std::to_string(z.h2_dim()));
  const auto& cd = r.at("cocycle-dimension");
  if (cd.status == CheckStatus::Flag) o.note("flag cocycle-dimension: " + cd.detail);
  o.require(cd.status != CheckStatus::Fail, "cocycle dimension reported");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 120, "under 120 s");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--seed" && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--seed S]\n";
      return 2;
    }
  }
  if (const char* s = std::getenv("LIEHAM_SEED")) g_seed = std::stoull(s);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalog regression", criterion1},      {"Killing forms", criterion2},
      {"invariant dimensions", criterion3},    {"Casimir-metric bijection", criterion4},
      {"KdV end to end", criterion5},          {"generalized KdV", criterion6},
      {"property suites", criterion7},         {"two-step nilpotent builder", criterion8},
      {"g2", criterion9}};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && static_cast<std::size_t>(only) != k + 1) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
