#include "lieham/invariants.hpp"

#include <algorithm>
#include <functional>

#include "lieham/linalg.hpp"

namespace lieham {

namespace {

using ResidualFn = std::function<ResidualList<Scalar>(const ScalarMatrix&)>;

// Solves a linear condition on matrices spanned by the given elementary matrices.
// Column u of the system is the residual of elementary matrix u, flattened over its index tuple.
std::vector<Vector> solve_linear_condition(const std::vector<ScalarMatrix>& elementary, const ResidualFn& residual,
                                           std::size_t arity_base) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
  std::vector<std::size_t> used_rows;
  for (const auto& e : elementary) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    for (auto& r : residual(e)) {
      std::size_t flat = 0;
      for (std::size_t ix : r.index) flat = flat * arity_base + ix;
      col.emplace_back(flat, r.value);
      used_rows.push_back(flat);
    }
    columns.push_back(std::move(col));
  }
  std::sort(used_rows.begin(), used_rows.end());
  used_rows.erase(std::unique(used_rows.begin(), used_rows.end()), used_rows.end());
  ScalarMatrix m(used_rows.size(), elementary.size(), Scalar(0));
  for (std::size_t u = 0; u < columns.size(); ++u) {
    for (const auto& [flat, v] : columns[u]) {
      auto row = static_cast<std::size_t>(std::lower_bound(used_rows.begin(), used_rows.end(), flat) - used_rows.begin());
      m(row, u) = v;
    }
  }
  return nullspace(m);
}

std::vector<ScalarMatrix> symmetric_units(std::size_t n) {
  std::vector<ScalarMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ScalarMatrix e(n, n, Scalar(0));
      e(i, j) = Scalar(1);
      e(j, i) = Scalar(1);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<ScalarMatrix> skew_units(std::size_t n) {
  std::vector<ScalarMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ScalarMatrix e(n, n, Scalar(0));
      e(i, j) = Scalar(1);
      e(j, i) = Scalar(-1);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<ScalarMatrix> combine(const std::vector<ScalarMatrix>& units, const std::vector<Vector>& coeffs,
                                  std::size_t n) {
  std::vector<ScalarMatrix> out;
  for (const auto& v : coeffs) {
    ScalarMatrix m(n, n, Scalar(0));
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (v[u].is_zero()) continue;
      m = m + units[u].scaled(v[u]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Vector upper_entries(const ScalarMatrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) v.push_back(m(i, j));
  }
  return v;
}

}  // namespace

bool is_quadratic_casimir(const LieAlgebra& g, const ScalarMatrix& a) {
  return a.is_symmetric() && casimir_residual(g.tensor(), a).empty();
}

bool is_compatible_metric(const LieAlgebra& g, const ScalarMatrix& eta) {
  return eta.is_symmetric() && metric_residual(g.tensor(), eta).empty();
}

bool is_two_cocycle(const LieAlgebra& g, const ScalarMatrix& f) {
  return f.is_skew() && cocycle_residual(g.tensor(), f).empty();
}

QuadraticCasimirSpace quadratic_casimir_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto units = symmetric_units(n);
  auto coeffs = solve_linear_condition(
      units, [&](const ScalarMatrix& a) { return casimir_residual(g.tensor(), a); }, n);
  return {combine(units, coeffs, n)};
}

MetricSpace compatible_metric_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto units = symmetric_units(n);
  auto coeffs = solve_linear_condition(
      units, [&](const ScalarMatrix& eta) { return metric_residual(g.tensor(), eta); }, n);
  return {combine(units, coeffs, n)};
}

CocycleSpace two_cocycle_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto units = skew_units(n);
  auto coeffs = solve_linear_condition(
      units, [&](const ScalarMatrix& f) { return cocycle_residual(g.tensor(), f); }, n);
  CocycleSpace space;
  space.basis = combine(units, coeffs, n);
  // Coboundaries: span of the matrices (C_k)^{ij} = c^{ij}_k.
  std::vector<Vector> images;
  for (std::size_t k = 0; k < n; ++k) {
    ScalarMatrix ck(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) ck(i, j) = g.c(i, j, k);
    }
    images.push_back(upper_entries(ck));
  }
  if (!units.empty()) {
    for (const auto& v : span_basis(images, units.size())) {
      space.coboundaries.push_back(combine(units, {v}, n).front());
    }
  }
  return space;
}

PolyMatrix generic_element(const std::vector<ScalarMatrix>& basis, std::size_t n, const RingPtr& ring,
                           const std::vector<std::string>& params) {
  if (params.size() != basis.size()) throw Error(ErrorCode::ShapeMismatch, "one parameter per basis element");
  PolyMatrix m(n, n, Poly(ring));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Poly t = Poly::var(ring, params[b]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!basis[b](i, j).is_zero()) m(i, j) += t * basis[b](i, j);
      }
    }
  }
  return m;
}

std::optional<Witness> nondegenerate_witness(const std::vector<ScalarMatrix>& basis, std::size_t n) {
  if (basis.empty() || n == 0) return std::nullopt;
  std::vector<std::string> params;
  for (std::size_t i = 1; i <= basis.size(); ++i) params.push_back("t" + std::to_string(i));
  RingPtr ring = Ring::make(0, params);
  Poly det = determinant(generic_element(basis, n, ring, params));
  if (det.is_zero()) return std::nullopt;
  // Restrict the search to the variables of a det term with smallest support; the restriction
  // of det (other parameters at 0) keeps that term, so a grid with side deg+1 contains a nonzero.
  std::vector<std::size_t> support;
  bool first = true;
  for (const auto& [e, c] : det.terms()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) s.push_back(i);
    }
    if (first || s.size() < support.size()) {
      support = s;
      first = false;
    }
  }
  const long bound = det.total_degree();
  const std::size_t k = support.size();
  std::vector<long> values(k, 0);
  // Enumerate tuples in [0, bound]^k by total, then lexicographically.
  std::function<bool(std::size_t, long)> search = [&](std::size_t pos, long remaining) -> bool {
    if (pos == k) {
      if (remaining != 0) return false;
      std::map<std::size_t, Scalar> at;
      for (std::size_t i = 0; i < ring->size(); ++i) at.emplace(i, Scalar(0));
      for (std::size_t i = 0; i < k; ++i) at[support[i]] = Scalar(values[i]);
      return !det.evaluate(at).is_zero();
    }
    for (long v = 0; v <= std::min(bound, remaining); ++v) {
      values[pos] = v;
      if (search(pos + 1, remaining - v)) return true;
    }
    return false;
  };
  for (long total = 0; total <= bound * static_cast<long>(k); ++total) {
    if (!search(0, total)) continue;
    Witness w;
    w.point.assign(basis.size(), 0);
    for (std::size_t i = 0; i < k; ++i) w.point[support[i]] = values[i];
    w.matrix = ScalarMatrix(n, n, Scalar(0));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (w.point[b] != 0) w.matrix = w.matrix + basis[b].scaled(Scalar(w.point[b]));
    }
    if (determinant(w.matrix).is_zero()) throw Error(ErrorCode::Singular, "witness verification failed");
    return w;
  }
  throw Error(ErrorCode::Singular, "grid search exhausted although det is nonzero");
}

DualityReport casimir_metric_duality(const LieAlgebra& g) {
  DualityReport r;
  auto cas = quadratic_casimir_space(g);
  auto met = compatible_metric_space(g);
  r.casimir_dim = cas.dim();
  r.metric_dim = met.dim();
  r.casimir_witness = nondegenerate_witness(cas.basis, g.dim());
  r.metric_witness = nondegenerate_witness(met.basis, g.dim());
  auto check_cas = [&](const ScalarMatrix& a) {
    if (determinant(a).is_zero()) return true;
    return is_compatible_metric(g, inverse(a));
  };
  auto check_met = [&](const ScalarMatrix& eta) {
    if (determinant(eta).is_zero()) return true;
    return is_quadratic_casimir(g, inverse(eta));
  };
  if (r.casimir_witness) r.casimir_inverse_is_metric = check_cas(r.casimir_witness->matrix);
  if (r.metric_witness) r.metric_inverse_is_casimir = check_met(r.metric_witness->matrix);
  for (const auto& a : cas.basis) r.casimir_inverse_is_metric = r.casimir_inverse_is_metric && check_cas(a);
  for (const auto& eta : met.basis) r.metric_inverse_is_casimir = r.metric_inverse_is_casimir && check_met(eta);
  return r;
}

MixedCocycleReport mixed_cocycle_check(const LieAlgebra& g1, const LieAlgebra& g2) {
  const std::size_t n1 = g1.dim();
  const std::size_t n2 = g2.dim();
  const std::size_t base = std::max(n1, n2);
  std::vector<ScalarMatrix> units;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      ScalarMatrix e(n1, n2, Scalar(0));
      e(i, j) = Scalar(1);
      units.push_back(std::move(e));
    }
  }
  // Rows tagged 0: sum_i beta^{ij'} c^{hl}_i for (h, l, j'); rows tagged 1: sum_j' beta^{ij'} gamma^{p'q'}_{j'}.
  auto residual = [&](const ScalarMatrix& beta) {
    ResidualList<Scalar> out;
    for (std::size_t h = 0; h < n1; ++h) {
      for (std::size_t l = 0; l < n1; ++l) {
        for (std::size_t jp = 0; jp < n2; ++jp) {
          Scalar acc(0);
          for (std::size_t i = 0; i < n1; ++i) {
            if (!beta(i, jp).is_zero() && !g1.c(h, l, i).is_zero()) acc += beta(i, jp) * g1.c(h, l, i);
          }
          if (!acc.is_zero()) out.push_back({{0, h, l, jp}, acc});
        }
      }
    }
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t p = 0; p < n2; ++p) {
        for (std::size_t q = 0; q < n2; ++q) {
          Scalar acc(0);
          for (std::size_t jp = 0; jp < n2; ++jp) {
            if (!beta(i, jp).is_zero() && !g2.c(p, q, jp).is_zero()) acc += beta(i, jp) * g2.c(p, q, jp);
          }
          if (!acc.is_zero()) out.push_back({{1, i, p, q}, acc});
        }
      }
    }
    return out;
  };
  MixedCocycleReport r;
  auto coeffs = solve_linear_condition(units, residual, base);
  for (const auto& v : coeffs) {
    ScalarMatrix m(n1, n2, Scalar(0));
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (!v[u].is_zero()) m = m + units[u].scaled(v[u]);
    }
    r.basis.push_back(std::move(m));
  }
  r.mixed_dim = r.basis.size();
  r.first_dim = two_cocycle_space(g1).dim();
  r.second_dim = two_cocycle_space(g2).dim();
  r.sum_dim = two_cocycle_space(direct_sum(g1, g2)).dim();
  return r;
}

std::vector<Vector> linear_casimirs(const LieAlgebra& g) { return center(g); }

}  // namespace lieham
