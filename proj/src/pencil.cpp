#include "lieham/pencil.hpp"

#include <functional>

namespace lieham {

namespace {

ConditionResult tensor_condition(const std::string& name, const Tensor3<Poly>& t, const RingPtr& ring) {
  ConditionResult r{name, true, 0, {}, Poly(ring)};
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (t(i, j, k).is_zero()) continue;
        if (r.pass) {
          r.index = {i, j, k};
          r.residual = t(i, j, k);
        }
        r.pass = false;
        ++r.violations;
      }
  return r;
}

DarbouxOperator lifted(const DarbouxOperator& op, const RingPtr& ring) {
  return {ring, lift(op.c, ring), lift(op.eta, ring), lift(op.f, ring)};
}

PolyOperator lifted(const PolyOperator& op, const RingPtr& ring) {
  return {ring, lift(op.g, ring), lift(op.omega, ring)};
}

// Sum over s of x(a, s) y(s, b) for the three cyclic index placements used by the identities.
Poly cyclic_pair(const Tensor3<Poly>& c, const std::function<const Poly&(std::size_t, std::size_t)>& y, std::size_t i,
                 std::size_t j, std::size_t k, std::size_t n, const RingPtr& ring) {
  Poly acc(ring);
  for (std::size_t p = 0; p < n; ++p) {
    if (!c(i, j, p).is_zero() && !y(p, k).is_zero()) acc += c(i, j, p) * y(p, k);
    if (!c(j, k, p).is_zero() && !y(p, i).is_zero()) acc += c(j, k, p) * y(p, i);
    if (!c(k, i, p).is_zero() && !y(p, j).is_zero()) acc += c(k, i, p) * y(p, j);
  }
  return acc;
}

}  // namespace

MixedTensors mixed_tensors(const DarbouxOperator& a0, const DarbouxOperator& b0) {
  if (a0.dim() != b0.dim()) throw Error(ErrorCode::ShapeMismatch, "pencil operands differ in dimension");
  const std::size_t n = a0.dim();
  RingPtr ring = Ring::merge(a0.ring, b0.ring);
  DarbouxOperator a = lifted(a0, ring), b = lifted(b0, ring);
  // omega2 = c2 u and omega1 = c1 u as matrices, so drv1 contracted with u is a cyclic pair sum.
  PolyMatrix w1(n, n, Poly(ring)), w2(n, n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s) {
        if (!a.c(i, j, s).is_zero()) w1(i, j) += a.c(i, j, s) * Poly::var(ring, s);
        if (!b.c(i, j, s).is_zero()) w2(i, j) += b.c(i, j, s) * Poly::var(ring, s);
      }
  auto at = [](const PolyMatrix& m) { return [&m](std::size_t p, std::size_t q) -> const Poly& { return m(p, q); }; };
  MixedTensors out{ring, Tensor3<Poly>(n, Poly(ring)), Tensor3<Poly>(n, Poly(ring)), Tensor3<Poly>(n, Poly(ring))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.drv1(i, j, k) = cyclic_pair(b.c, at(w1), i, j, k, n, ring) + cyclic_pair(a.c, at(w2), i, j, k, n, ring);
        out.drv2(i, j, k) = cyclic_pair(b.c, at(a.f), i, j, k, n, ring) + cyclic_pair(a.c, at(b.f), i, j, k, n, ring);
        Poly g(ring);
        for (std::size_t s = 0; s < n; ++s) {
          if (!a.eta(i, s).is_zero() && !b.c(j, k, s).is_zero()) g += a.eta(i, s) * b.c(j, k, s);
          if (!a.eta(j, s).is_zero() && !b.c(i, k, s).is_zero()) g += a.eta(j, s) * b.c(i, k, s);
          if (!b.eta(i, s).is_zero() && !a.c(j, k, s).is_zero()) g += b.eta(i, s) * a.c(j, k, s);
          if (!b.eta(j, s).is_zero() && !a.c(i, k, s).is_zero()) g += b.eta(j, s) * a.c(i, k, s);
        }
        out.condgc2(i, j, k) = std::move(g);
      }
  return out;
}

PencilReport pencil_compatible_darboux(const DarbouxOperator& a, const DarbouxOperator& b) {
  if (auto r = verify_darboux(a); !r.pass()) {
    throw Error(ErrorCode::InvalidOperand, "first operator fails " + r.first_failure());
  }
  if (auto r = verify_darboux(b); !r.pass()) {
    throw Error(ErrorCode::InvalidOperand, "second operator fails " + r.first_failure());
  }
  MixedTensors m = mixed_tensors(a, b);
  PencilReport rep{"darboux", {}};
  rep.conditions.conditions.push_back(tensor_condition("drv1", m.drv1, m.ring));
  rep.conditions.conditions.push_back(tensor_condition("drv2", m.drv2, m.ring));
  rep.conditions.conditions.push_back(tensor_condition("condgc2", m.condgc2, m.ring));
  return rep;
}

PolyOperator pencil_operator(const PolyOperator& a, const PolyOperator& b, const std::string& lambda) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "pencil operands differ in dimension");
  RingPtr merged = Ring::merge(a.ring, b.ring);
  if (merged->index(lambda)) throw Error(ErrorCode::InvalidOperand, "operands already use the name " + lambda);
  RingPtr ring = Ring::with_params(merged, {lambda});
  PolyOperator la = lifted(a, ring), lb = lifted(b, ring);
  Poly l = Poly::var(ring, lambda);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      la.g(i, j) += l * lb.g(i, j);
      la.omega(i, j) += l * lb.omega(i, j);
    }
  return la;
}

PencilReport pencil_compatible_general(const PolyOperator& a, const PolyOperator& b) {
  return {"lambda", verify_theorem1(pencil_operator(a, b))};
}

LambdaExpansion lambda_expansion(const PolyOperator& a, const PolyOperator& b) {
  PolyOperator p = pencil_operator(a, b);
  const std::size_t n = p.dim();
  const std::size_t l = p.ring->require("lambda");
  RingPtr base = Ring::merge(a.ring, b.ring);
  Tensor3<Poly> s = schouten_tensor(p);
  Tensor3<Poly> phi = phi_tensor(p);
  LambdaExpansion out{base, {}, {}};
  for (int k = 0; k < 3; ++k) {
    out.schouten[k] = Tensor3<Poly>(n, Poly(base));
    out.phi_cyclic[k] = Tensor3<Poly>(n, Poly(base));
  }
  auto split = [&](const Poly& x, Tensor3<Poly>* dst, std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& [e, coeff] : x.coefficients_in(l)) {
      if (e < 0 || e > 2) throw Error(ErrorCode::InvalidOperand, "pencil residual has lambda degree above 2");
      dst[e](i, j, k) = coeff.lift(base);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        split(s(i, j, k), out.schouten, i, j, k);
        split(phi(i, j, k) - phi(k, i, j), out.phi_cyclic, i, j, k);
      }
  return out;
}

}  // namespace lieham
