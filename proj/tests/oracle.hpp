#pragma once

// Independent dimension oracle: random trilinear evaluations and a plain
// Gauss-Jordan rank over mpq_class, sharing no code with the library solvers.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <vector>

#include "lieham/lie_algebra.hpp"

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline std::size_t naive_rank(QMat rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline Q q(const lieham::Scalar& s) {
  if (!s.is_rational()) throw std::runtime_error("oracle handles rational algebras only");
  return s.rational_part();
}

inline QVec bracket(const lieham::LieAlgebra& g, const QVec& x, const QVec& y) {
  const std::size_t n = g.dim();
  QVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * q(g.c(i, j, k));
  return out;
}

inline Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec mul(const QMat& m, const QVec& v) {
  QVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

// Trilinear functional T_M(x, y, z) that vanishes for all x, y, z iff M satisfies the condition.
using Trilinear = std::function<Q(const QMat&, const QVec&, const QVec&, const QVec&)>;

inline std::size_t solution_dim(const lieham::LieAlgebra& g, bool symmetric, const Trilinear& t, std::mt19937_64& rng) {
  const std::size_t n = g.dim();
  std::vector<QMat> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) {
      QMat e(n, QVec(n, 0));
      e[i][j] = 1;
      e[j][i] = symmetric ? 1 : -1;
      units.push_back(e);
    }
  }
  std::uniform_int_distribution<int> d(-4, 4);
  auto rnd = [&] {
    QVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
  };
  QMat rows;
  const std::size_t samples = 2 * units.size() + 8;
  for (std::size_t s = 0; s < samples; ++s) {
    QVec x = rnd(), y = rnd(), z = rnd();
    QVec row;
    for (const auto& u : units) row.push_back(t(u, x, y, z));
    rows.push_back(row);
  }
  return units.size() - naive_rank(rows, units.size());
}

// Symmetric a with y.[a x, z] + x.[a y, z] = 0.
inline std::size_t casimir_dim(const lieham::LieAlgebra& g, std::mt19937_64& rng) {
  return solution_dim(g, true, [&](const QMat& a, const QVec& x, const QVec& y, const QVec& z) -> Q {
    return dot(y, bracket(g, mul(a, x), z)) + dot(x, bracket(g, mul(a, y), z));
  }, rng);
}

// Symmetric eta with B(x, [y, z]) + B(y, [x, z]) = 0, B(u, v) = u.eta v.
inline std::size_t metric_dim(const lieham::LieAlgebra& g, std::mt19937_64& rng) {
  return solution_dim(g, true, [&](const QMat& eta, const QVec& x, const QVec& y, const QVec& z) -> Q {
    return dot(x, mul(eta, bracket(g, y, z))) + dot(y, mul(eta, bracket(g, x, z)));
  }, rng);
}

// Skew f with f([x,y],z) + f([y,z],x) + f([z,x],y) = 0.
inline std::size_t cocycle_dim(const lieham::LieAlgebra& g, std::mt19937_64& rng) {
  return solution_dim(g, false, [&](const QMat& f, const QVec& x, const QVec& y, const QVec& z) -> Q {
    return dot(bracket(g, x, y), mul(f, z)) + dot(bracket(g, y, z), mul(f, x)) + dot(bracket(g, z, x), mul(f, y));
  }, rng);
}

}  // namespace oracle
