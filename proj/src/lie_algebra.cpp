#include "lieham/lie_algebra.hpp"

#include "lieham/linalg.hpp"

namespace lieham {

LieAlgebra LieAlgebra::from_tensor(Tensor3<Scalar> c, std::vector<std::string> labels) {
  const std::size_t n = c.dim();
  if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "dimension must be positive");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorCode::ShapeMismatch, "label count differs from dimension");
  auto skew = skew_defect(c);
  if (!skew.empty()) {
    const auto& ix = skew.front().index;
    throw Error(ErrorCode::InvalidAlgebra, "structure constants not skew at (" + std::to_string(ix[0] + 1) + "," +
                                               std::to_string(ix[1] + 1) + "," + std::to_string(ix[2] + 1) + ")");
  }
  auto jac = jacobi_defect(c);
  if (!jac.empty()) {
    const auto& ix = jac.front().index;
    throw Error(ErrorCode::InvalidAlgebra, "Jacobi identity fails at (" + std::to_string(ix[0] + 1) + "," +
                                               std::to_string(ix[1] + 1) + "," + std::to_string(ix[2] + 1) + "," +
                                               std::to_string(ix[3] + 1) + ")");
  }
  // Mixed radicals would already have thrown during the Jacobi sums.
  return LieAlgebra(std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::from_brackets(std::size_t n, const std::vector<BracketSpec>& brackets,
                                     std::vector<std::string> labels) {
  Tensor3<Scalar> c(n, Scalar(0));
  for (const auto& b : brackets) {
    if (b.i < 1 || b.j < 1 || b.i > n || b.j > n) throw Error(ErrorCode::ShapeMismatch, "bracket index out of range");
    if (b.i == b.j) throw Error(ErrorCode::InvalidAlgebra, "bracket of a basis element with itself");
    for (const auto& [k, v] : b.out) {
      if (k < 1 || k > n) throw Error(ErrorCode::ShapeMismatch, "bracket output index out of range");
      c(b.i - 1, b.j - 1, k - 1) = v;
      c(b.j - 1, b.i - 1, k - 1) = -v;
    }
  }
  return from_tensor(std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return from_tensor(Tensor3<Scalar>(n, Scalar(0))); }

long LieAlgebra::field() const {
  for (const auto& x : c_.data()) {
    if (x.field() != 0) return x.field();
  }
  return 0;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::ShapeMismatch, "bracket operand length");
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c_(i, j, k).is_zero()) out[k] += xy * c_(i, j, k);
      }
    }
  }
  return out;
}

ScalarMatrix LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  ScalarMatrix m(n, n, Scalar(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c_(i, j, k);
  }
  return m;
}

ScalarMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ScalarMatrix k(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar acc(0);
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
          if (!g.c(i, l, m).is_zero() && !g.c(j, m, l).is_zero()) acc += g.c(i, l, m) * g.c(j, m, l);
        }
      }
      k(i, j) = acc;
      k(j, i) = acc;
    }
  }
  return k;
}

std::vector<Vector> center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Rows indexed by (i, k): sum_j c^{ij}_k a_j = 0.
  ScalarMatrix m(n * n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) m(i * n + k, j) = g.c(i, j, k);
    }
  }
  return nullspace(m);
}

std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& v, const std::vector<Vector>& w) {
  std::vector<Vector> products;
  for (const auto& x : v) {
    for (const auto& y : w) products.push_back(g.bracket(x, y));
  }
  if (products.empty()) return {};
  return span_basis(products, g.dim());
}

namespace {

std::vector<Vector> full_basis(std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, Scalar(0));
    e[i] = Scalar(1);
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

std::vector<Vector> derived_algebra(const LieAlgebra& g) {
  auto all = full_basis(g.dim());
  return bracket_span(g, all, all);
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
  auto all = full_basis(g.dim());
  std::vector<std::size_t> dims{g.dim()};
  std::vector<Vector> current = all;
  for (;;) {
    std::vector<Vector> next = bracket_span(g, all, current);
    if (next.size() == current.size()) break;
    dims.push_back(next.size());
    current = std::move(next);
    if (current.empty()) break;
  }
  return dims;
}

std::vector<std::size_t> derived_series(const LieAlgebra& g) {
  std::vector<Vector> current = full_basis(g.dim());
  std::vector<std::size_t> dims{g.dim()};
  for (;;) {
    std::vector<Vector> next = bracket_span(g, current, current);
    if (next.size() == current.size()) break;
    dims.push_back(next.size());
    current = std::move(next);
    if (current.empty()) break;
  }
  return dims;
}

std::vector<ScalarMatrix> centroid(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknown T_{pq} at column p*n+q. Equation for (i, j, k):
  // sum_s c^{ij}_s T_{ks} - sum_s c^{is}_k T_{sj} = 0.
  ScalarMatrix m(n * n * n, n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (i * n + j) * n + k;
        for (std::size_t s = 0; s < n; ++s) {
          m(row, k * n + s) += g.c(i, j, s);
          m(row, s * n + j) -= g.c(i, s, k);
        }
      }
    }
  }
  std::vector<ScalarMatrix> out;
  for (const auto& v : nullspace(m)) {
    ScalarMatrix t(n, n, Scalar(0));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) t(p, q) = v[p * n + q];
    }
    out.push_back(std::move(t));
  }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  long d1 = g1.field();
  long d2 = g2.field();
  if (d1 != 0 && d2 != 0 && d1 != d2) throw Error(ErrorCode::FieldMismatch, "summands over different quadratic fields");
  const std::size_t n1 = g1.dim();
  const std::size_t n = n1 + g2.dim();
  Tensor3<Scalar> c(n, Scalar(0));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n1; ++k) c(i, j, k) = g1.c(i, j, k);
    }
  }
  for (std::size_t i = 0; i < g2.dim(); ++i) {
    for (std::size_t j = 0; j < g2.dim(); ++j) {
      for (std::size_t k = 0; k < g2.dim(); ++k) c(n1 + i, n1 + j, n1 + k) = g2.c(i, j, k);
    }
  }
  std::vector<std::string> labels;
  if (!g1.labels().empty() && !g2.labels().empty()) {
    labels = g1.labels();
    labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
  }
  return LieAlgebra::from_tensor(std::move(c), std::move(labels));
}

LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k) {
  return k == 0 ? g : direct_sum(g, LieAlgebra::abelian(k));
}

Tensor3<Scalar> transform_structure_constants(const Tensor3<Scalar>& c, const ScalarMatrix& a) {
  const std::size_t n = c.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "basis change matrix shape");
  ScalarMatrix b = inverse(a);
  // t(l, m, k) = c^{lm}_s b^s_k, then contract the upper pair with a.
  Tensor3<Scalar> t(n, Scalar(0));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t s = 0; s < n; ++s) {
        if (c(l, m, s).is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!b(s, k).is_zero()) t(l, m, k) += c(l, m, s) * b(s, k);
        }
      }
    }
  }
  Tensor3<Scalar> u(n, Scalar(0));  // u(i, m, k) = a^i_l t(l, m, k)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!t(l, m, k).is_zero()) u(i, m, k) += a(i, l) * t(l, m, k);
        }
      }
    }
  }
  Tensor3<Scalar> out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        if (a(j, m).is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!u(i, m, k).is_zero()) out(i, j, k) += a(j, m) * u(i, m, k);
        }
      }
    }
  }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const ScalarMatrix& a) {
  return LieAlgebra::from_tensor(transform_structure_constants(g.tensor(), a));
}

TwoStepNilpotent build_two_step_nilpotent(const LieAlgebra& g, const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = g.dim();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "Casimir blocks must be n x n");
  }
  if (!a.is_symmetric() || !casimir_residual(g.tensor(), a).empty()) {
    throw Error(ErrorCode::NotACasimir, "a is not a quadratic Casimir of the input algebra");
  }
  if (!b.is_symmetric()) throw Error(ErrorCode::ShapeMismatch, "b must be symmetric");
  Tensor3<Scalar> c(2 * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < n; ++s) c(i, j, n + s) = g.c(i, j, s);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
  LieAlgebra out = LieAlgebra::from_tensor(std::move(c), std::move(labels));
  ScalarMatrix cas(2 * n, 2 * n, Scalar(0));
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cas(i, n + j) = a(i, j) * half;
      cas(n + j, i) = a(i, j) * half;
      cas(n + i, n + j) = b(i, j);
    }
  }
  if (!casimir_residual(out.tensor(), cas).empty()) {
    throw Error(ErrorCode::NotACasimir, "constructed matrix fails the Casimir equations");
  }
  return {std::move(out), std::move(cas)};
}

namespace {

// Semisimple case: the centroid is a product of fields, one per simple ideal.
bool semisimple_is_simple(const std::vector<ScalarMatrix>& gamma) {
  if (gamma.size() == 1) return true;
  if (gamma.size() != 2) return false;
  const std::size_t n = gamma[0].rows();
  ScalarMatrix id = scalar_identity(n);
  // Pick a centroid element not proportional to the identity.
  ScalarMatrix t = gamma[0];
  auto flat = [&](const ScalarMatrix& m) {
    Vector v;
    for (const auto& x : m.data()) v.push_back(x);
    return v;
  };
  if (span_basis({flat(id), flat(t)}, n * n).size() < 2) t = gamma[1];
  // Solve t^2 = p I + q t.
  ScalarMatrix t2 = t * t;
  Vector lhs = flat(t2);
  ScalarMatrix sys(n * n, 3, Scalar(0));
  for (std::size_t r = 0; r < n * n; ++r) {
    sys(r, 0) = id.data()[r];
    sys(r, 1) = t.data()[r];
    sys(r, 2) = -lhs[r];
  }
  auto ns = nullspace(sys);
  if (ns.size() != 1 || ns[0][2].is_zero()) return false;
  Scalar p = ns[0][0] / ns[0][2];
  Scalar q = ns[0][1] / ns[0][2];
  // x^2 - q x - p irreducible over the reals: the centroid is a copy of C.
  return (q * q + Scalar(4) * p).sign() < 0;
}

}  // namespace

StructureTags structure_tags(const LieAlgebra& g) {
  StructureTags t;
  const std::size_t n = g.dim();
  auto derived = derived_algebra(g);
  auto z = center(g);
  t.center_dim = z.size();
  t.derived_dim = derived.size();
  t.abelian = derived.empty();
  t.lower_central = lower_central_series(g);
  t.derived = derived_series(g);
  t.nilpotent = t.lower_central.back() == 0;
  t.nilpotent_class = t.nilpotent ? t.lower_central.size() - 1 : 0;
  if (t.abelian) t.nilpotent_class = 1;
  t.solvable = t.derived.back() == 0;
  t.semisimple = !determinant(killing_form(g)).is_zero();
  auto gamma = centroid(g);
  t.centroid_dim = gamma.size();
  t.simple = t.semisimple && semisimple_is_simple(gamma);
  if (!z.empty()) {
    std::vector<Vector> both = derived;
    both.insert(both.end(), z.begin(), z.end());
    t.central_factor = span_basis(both, n).size() > derived.size();
  }
  return t;
}

std::string StructureTags::label() const {
  if (abelian) return "Abelian";
  if (semisimple) return simple ? "Simple" : "Direct sum";
  if (central_factor) return "Direct sum";
  if (nilpotent) return std::to_string(nilpotent_class) + "-Step Nilpotent";
  if (solvable) return "Solvable";
  return "Levi decomposable";
}

}  // namespace lieham
