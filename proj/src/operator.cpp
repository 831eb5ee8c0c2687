#include "lieham/operator.hpp"

#include <algorithm>
#include <sstream>

#include "lieham/identities.hpp"
#include "lieham/linalg.hpp"
#include "lieham/parse.hpp"

namespace lieham {

namespace {

ConditionResult from_residuals(const std::string& name, const ResidualList<Poly>& res, const RingPtr& ring) {
  ConditionResult r{name, res.empty(), res.size(), {}, Poly(ring)};
  if (!res.empty()) {
    r.index = res.front().index;
    r.residual = res.front().value;
  }
  return r;
}

ResidualList<Poly> symmetric_defect(const PolyMatrix& m) {
  ResidualList<Poly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      Poly d = m(i, j) - m(j, i);
      if (!d.is_zero()) out.push_back({{i, j}, std::move(d)});
    }
  }
  return out;
}

ResidualList<Poly> skew_matrix_defect(const PolyMatrix& m) {
  ResidualList<Poly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      Poly d = m(i, j) + m(j, i);
      if (!d.is_zero()) out.push_back({{i, j}, std::move(d)});
    }
  }
  return out;
}

ResidualList<Poly> field_dependence(const PolyMatrix& m) {
  ResidualList<Poly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).depends_on_field_vars()) out.push_back({{i, j}, m(i, j)});
    }
  }
  return out;
}

ResidualList<Poly> field_dependence(const Tensor3<Poly>& t) {
  ResidualList<Poly> out;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k).depends_on_field_vars()) out.push_back({{i, j, k}, t(i, j, k)});
  return out;
}

void check_square(const PolyMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " must be n x n");
}

void check_field_vars(const RingPtr& ring, std::size_t n) {
  if (!ring || ring->field_count() != n) {
    throw Error(ErrorCode::ShapeMismatch, "operator ring must have exactly n field variables");
  }
}

/// A m A^T for a scalar A.
PolyMatrix congruence(const ScalarMatrix& a, const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = a.rows();
  PolyMatrix t(n, n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!m(l, j).is_zero()) t(i, j) += m(l, j) * a(i, l);
    }
  PolyMatrix out(n, n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m2 = 0; m2 < n; ++m2)
        if (!a(j, m2).is_zero() && !t(i, m2).is_zero()) out(i, j) += t(i, m2) * a(j, m2);
  return out;
}

/// d omega^{jk} / du^s indexed (s, j, k).
Tensor3<Poly> omega_partials(const PolyOperator& op) {
  const std::size_t n = op.dim();
  Tensor3<Poly> d(n, Poly(op.ring));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(s, j, k) = op.omega(j, k).partial(s);
  return d;
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

const ConditionResult& VerificationReport::at(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidOperand, "no condition named " + name);
}

std::string VerificationReport::first_failure() const {
  for (const auto& c : conditions)
    if (!c.pass) return c.name;
  return {};
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  for (const auto& c : conditions) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) {
      os << " at (";
      for (std::size_t i = 0; i < c.index.size(); ++i) os << (i ? "," : "") << c.index[i] + 1;
      os << ") residual " << c.residual.str() << " [" << c.violations << " entries]";
    }
    os << '\n';
  }
  return os.str();
}

DarbouxOperator make_darboux(const RingPtr& ring, Tensor3<Poly> c, PolyMatrix eta, PolyMatrix f) {
  const std::size_t n = c.dim();
  check_field_vars(ring, n);
  check_square(eta, n, "eta");
  check_square(f, n, "f");
  return {ring, lift(c, ring), lift(eta, ring), lift(f, ring)};
}

DarbouxOperator build_darboux(const LieAlgebra& g, const PolyMatrix& eta, const PolyMatrix& f) {
  const std::size_t n = g.dim();
  check_square(eta, n, "eta");
  check_square(f, n, "f");
  std::vector<std::string> params;
  auto collect = [&](const PolyMatrix& m) {
    for (const auto& p : m.data()) {
      if (!p.ring()) continue;
      for (const auto& v : p.ring()->vars()) {
        if (v.kind == VarKind::Field) continue;
        if (std::find(params.begin(), params.end(), v.name) == params.end()) params.push_back(v.name);
      }
    }
  };
  collect(eta);
  collect(f);
  RingPtr ring = Ring::make(n, params);
  DarbouxOperator op{ring, to_poly(g.tensor(), ring), lift(eta, ring), lift(f, ring)};
  if (!field_dependence(op.eta).empty() || !symmetric_defect(op.eta).empty() ||
      !metric_residual(op.c, op.eta).empty()) {
    throw Error(ErrorCode::MetricIncompatible, "eta is not a compatible metric for the algebra");
  }
  if (!field_dependence(op.f).empty() || !skew_matrix_defect(op.f).empty() ||
      !cocycle_residual(op.c, op.f).empty()) {
    throw Error(ErrorCode::NotACocycle, "f is not a 2-cocycle of the algebra");
  }
  return op;
}

DarbouxOperator build_darboux(const LieAlgebra& g, const ScalarMatrix& eta, const ScalarMatrix& f) {
  RingPtr ring = Ring::make(g.dim());
  return build_darboux(g, to_poly(eta, ring), to_poly(f, ring));
}

PolyOperator parse_operator(const StringMatrix& g, const StringMatrix& omega, const std::vector<std::string>& params) {
  const std::size_t n = g.size();
  auto check = [n](const StringMatrix& m, const char* what) {
    if (m.size() != n) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " row count");
    for (const auto& row : m)
      if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " must be square");
  };
  check(g, "g");
  check(omega, "omega");
  std::vector<std::string> names = params;
  for (const auto* m : {&g, &omega})
    for (const auto& row : *m)
      for (const auto& cell : row)
        for (const auto& id : identifiers_in(cell)) {
          if (is_jet_name(id)) throw Error(ErrorCode::ParseError, "derivative " + id + " in operator entry");
          if (is_field_var_name(id)) {
            if (std::stoul(id.substr(1)) > n) throw Error(ErrorCode::UnknownIndeterminate, id + " exceeds dimension");
            continue;
          }
          if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
        }
  RingPtr ring = Ring::make(n, names);
  PolyOperator op{ring, PolyMatrix(n, n, Poly(ring)), PolyMatrix(n, n, Poly(ring))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      op.g(i, j) = parse_poly(g[i][j], ring);
      op.omega(i, j) = parse_poly(omega[i][j], ring);
    }
  return op;
}

PolyOperator to_poly_operator(const DarbouxOperator& op) {
  const std::size_t n = op.dim();
  PolyMatrix omega = op.f;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!op.c(i, j, k).is_zero()) omega(i, j) += op.c(i, j, k) * Poly::var(op.ring, k);
  return {op.ring, op.eta, omega};
}

DarbouxOperator to_darboux(const PolyOperator& op) {
  const std::size_t n = op.dim();
  check_field_vars(op.ring, n);
  if (!field_dependence(op.g).empty()) throw Error(ErrorCode::InvalidOperand, "g depends on the field variables");
  Tensor3<Poly> c(n, Poly(op.ring));
  PolyMatrix f(n, n, Poly(op.ring));
  std::map<std::size_t, Scalar> origin;
  for (std::size_t k = 0; k < n; ++k) origin[k] = Scalar(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& w = op.omega(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        c(i, j, k) = w.partial(k);
        if (c(i, j, k).depends_on_field_vars()) {
          throw Error(ErrorCode::InvalidOperand, "omega is not affine in the field variables");
        }
      }
      f(i, j) = w.evaluate(origin);
    }
  }
  return {op.ring, std::move(c), op.g, std::move(f)};
}

VerificationReport verify_darboux(const DarbouxOperator& op) {
  const RingPtr& r = op.ring;
  VerificationReport rep;
  rep.conditions.push_back(from_residuals("eta-symmetric", symmetric_defect(op.eta), r));
  rep.conditions.push_back(from_residuals("eta-constant", field_dependence(op.eta), r));
  rep.conditions.push_back(from_residuals("f-skew", skew_matrix_defect(op.f), r));
  rep.conditions.push_back(from_residuals("f-constant", field_dependence(op.f), r));
  rep.conditions.push_back(from_residuals("c-constant", field_dependence(op.c), r));
  rep.conditions.push_back(from_residuals("c-skew", skew_defect(op.c), r));
  rep.conditions.push_back(from_residuals("jacobi", jacobi_defect(op.c), r));
  rep.conditions.push_back(from_residuals("two-cocycle", cocycle_residual(op.c, op.f), r));
  rep.conditions.push_back(from_residuals("metric-compatibility", metric_residual(op.c, op.eta), r));
  return rep;
}

Tensor3<Poly> phi_tensor(const PolyOperator& op) {
  const std::size_t n = op.dim();
  check_field_vars(op.ring, n);
  Tensor3<Poly> d = omega_partials(op);
  Tensor3<Poly> phi(n, Poly(op.ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      if (op.g(i, s).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!d(s, j, k).is_zero()) phi(i, j, k) += op.g(i, s) * d(s, j, k);
    }
  return phi;
}

Tensor3<Poly> schouten_tensor(const PolyOperator& op) {
  const std::size_t n = op.dim();
  check_field_vars(op.ring, n);
  Tensor3<Poly> d = omega_partials(op);
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    Poly acc(op.ring);
    for (std::size_t s = 0; s < n; ++s)
      if (!op.omega(a, s).is_zero() && !d(s, b, c).is_zero()) acc += op.omega(a, s) * d(s, b, c);
    return acc;
  };
  Tensor3<Poly> out(n, Poly(op.ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = term(i, j, k) + term(j, k, i) + term(k, i, j);
  return out;
}

VerificationReport verify_theorem1(const PolyOperator& op) {
  const std::size_t n = op.dim();
  check_field_vars(op.ring, n);
  check_square(op.omega, n, "omega");
  const RingPtr& r = op.ring;
  VerificationReport rep;
  rep.conditions.push_back(from_residuals("g-symmetric", symmetric_defect(op.g), r));
  rep.conditions.push_back(from_residuals("g-constant", field_dependence(op.g), r));
  rep.conditions.push_back(from_residuals("omega-skew", skew_matrix_defect(op.omega), r));

  // S is totally skew once omega is, so i < j < k covers it.
  Tensor3<Poly> s = schouten_tensor(op);
  ResidualList<Poly> sres;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!s(i, j, k).is_zero()) sres.push_back({{i, j, k}, s(i, j, k)});
  rep.conditions.push_back(from_residuals("schouten", sres, r));

  Tensor3<Poly> phi = phi_tensor(op);
  ResidualList<Poly> cyc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Poly d = phi(i, j, k) - phi(k, i, j);
        if (!d.is_zero()) cyc.push_back({{i, j, k}, std::move(d)});
      }
  rep.conditions.push_back(from_residuals("phi-cyclic", cyc, r));
  rep.conditions.push_back(from_residuals("phi-constant", field_dependence(phi), r));
  return rep;
}

std::vector<Vector> operator_casimir_functionals(const DarbouxOperator& op) {
  const std::size_t n = op.dim();
  Tensor3<Scalar> c = to_scalar(op.c);
  ScalarMatrix f = to_scalar(op.f);
  // Rows: (i,k) for c^{ij}_k a_j, then i for f^{ij} a_j.
  ScalarMatrix m(n * n + n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m(i * n + k, j) = c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(n * n + i, j) = f(i, j);
  return nullspace(m);
}

std::string QuasilinearSystem::str() const {
  std::ostringstream os;
  const std::size_t n = w.size();
  const RingPtr ring = n ? w.front().ring() : nullptr;
  auto name = [&](std::size_t i) { return ring ? ring->var(i).name : "u" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < n; ++i) {
    os << name(i) << "_t = ";
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (v(i, k).is_zero()) continue;
      os << (any ? " + " : "") << "(" << v(i, k).str() << ")*" << name(k) << "_x";
      any = true;
    }
    if (!w[i].is_zero() || !any) os << (any ? " + " : "") << "(" << w[i].str() << ")";
    os << '\n';
  }
  return os.str();
}

QuasilinearSystem apply_to_density(const PolyOperator& op, const Poly& h) {
  const std::size_t n = op.dim();
  check_field_vars(op.ring, n);
  RingPtr ring = h.ring() ? Ring::merge(op.ring, h.ring()) : op.ring;
  if (ring->field_count() != n) {
    throw Error(ErrorCode::NonHydrodynamicDensity, "density uses field variables the operator does not have");
  }
  Poly hh = h.ring() ? h.lift(ring) : Poly(ring);
  PolyMatrix g = lift(op.g, ring);
  PolyMatrix omega = lift(op.omega, ring);
  std::vector<Poly> grad;
  for (std::size_t j = 0; j < n; ++j) grad.push_back(hh.partial(j));
  QuasilinearSystem out{PolyMatrix(n, n, Poly(ring)), std::vector<Poly>(n, Poly(ring))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!omega(i, j).is_zero() && !grad[j].is_zero()) out.w[i] += omega(i, j) * grad[j];
      if (g(i, j).is_zero() || grad[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out.v(i, k) += g(i, j) * grad[j].partial(k);
    }
  }
  return out;
}

QuasilinearSystem apply_to_density(const PolyOperator& op, const std::string& h) {
  for (const auto& id : identifiers_in(h)) {
    if (is_jet_name(id)) {
      throw Error(ErrorCode::NonHydrodynamicDensity, "density depends on the derivative " + id);
    }
  }
  std::vector<std::string> extra;
  for (const auto& id : identifiers_in(h)) {
    if (!op.ring->index(id) && !is_field_var_name(id)) extra.push_back(id);
  }
  RingPtr ring = Ring::with_params(op.ring, extra);
  return apply_to_density(op, parse_poly(h, ring));
}

Tensor3<Poly> transform_constants(const Tensor3<Poly>& c, const ScalarMatrix& a) {
  const std::size_t n = c.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "basis change matrix shape");
  ScalarMatrix b = inverse(a);
  const RingPtr ring = n ? c(0, 0, 0).ring() : nullptr;
  Tensor3<Poly> t(n, Poly(ring));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t s = 0; s < n; ++s) {
        if (c(l, m, s).is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!b(s, k).is_zero()) t(l, m, k) += c(l, m, s) * b(s, k);
      }
  Tensor3<Poly> u(n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
          if (!t(l, m, k).is_zero()) u(i, m, k) += t(l, m, k) * a(i, l);
    }
  Tensor3<Poly> out(n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        if (a(j, m).is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!u(i, m, k).is_zero()) out(i, j, k) += u(i, m, k) * a(j, m);
      }
  return out;
}

DarbouxOperator transform_operator(const DarbouxOperator& op, const ScalarMatrix& a) {
  const std::size_t n = op.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "basis change matrix shape");
  return {op.ring, transform_constants(op.c, a), congruence(a, op.eta, op.ring), congruence(a, op.f, op.ring)};
}

PolyOperator transform_operator(const PolyOperator& op, const ScalarMatrix& a) {
  const std::size_t n = op.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "basis change matrix shape");
  check_field_vars(op.ring, n);
  ScalarMatrix b = inverse(a);
  // u^l = b^l_m u~^m.
  std::map<std::size_t, Poly> sub;
  for (std::size_t l = 0; l < n; ++l) {
    Poly p(op.ring);
    for (std::size_t m = 0; m < n; ++m)
      if (!b(l, m).is_zero()) p += Poly::var(op.ring, m) * b(l, m);
    sub.emplace(l, std::move(p));
  }
  PolyMatrix omega(n, n, Poly(op.ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega(i, j) = op.omega(i, j).substitute(sub, op.ring);
  return {op.ring, congruence(a, op.g, op.ring), congruence(a, omega, op.ring)};
}

}  // namespace lieham
