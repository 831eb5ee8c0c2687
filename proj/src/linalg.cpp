#include "lieham/linalg.hpp"

#include <unordered_map>

namespace lieham {

RrefResult rref(const ScalarMatrix& input) {
  RrefResult out;
  ScalarMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar factor = m(i, c);
      // Rows already clear in this column keep their scale; over a field that is harmless.
      if (factor.is_zero()) continue;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m(r, j).is_zero()) {
          if (!m(i, j).is_zero()) m(i, j) = pivot * m(i, j) / prev;
        } else {
          m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / prev;
        }
      }
      m(i, c) = Scalar(0);
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  // Back-substitution: scale pivot rows to 1 and clear entries above pivots.
  for (std::size_t k = out.rank; k-- > 0;) {
    const std::size_t c = out.pivots[k];
    const Scalar inv = m(k, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(k, j).is_zero()) m(k, j) *= inv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar factor = m(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= factor * m(k, j);
      }
    }
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> nullspace(const ScalarMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).rank; }

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw Error(ErrorCode::Singular, "matrix is not invertible");
  ScalarMatrix inv(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

Scalar determinant(const ScalarMatrix& input) {
  if (!input.square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  ScalarMatrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

namespace {

struct LaplaceDet {
  const PolyMatrix& m;
  std::unordered_map<unsigned long long, Poly> memo;

  // Determinant of the minor formed by the last popcount(cols) rows and the column set cols.
  Poly minor(unsigned long long cols) {
    if (cols == 0) return Poly(m(0, 0).ring(), Scalar(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(cols));
    const std::size_t row = m.rows() - k;
    Poly acc(m(0, 0).ring());
    int sign = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(cols >> j & 1ULL)) continue;
      if (!m(row, j).is_zero()) {
        Poly term = m(row, j) * minor(cols & ~(1ULL << j));
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  }
};

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return Poly();
  if (m.rows() > 60) throw Error(ErrorCode::ShapeMismatch, "symbolic determinant limited to 60x60");
  LaplaceDet d{m, {}};
  return d.minor((m.cols() == 64 ? ~0ULL : (1ULL << m.cols()) - 1));
}

ScalarMatrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols) {
  ScalarMatrix m(rows.size(), cols, Scalar(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "vector length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t length) {
  RrefResult r = rref(rows_to_matrix(vectors, length));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    Vector v(length);
    for (std::size_t j = 0; j < length; ++j) v[j] = r.reduced(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

Vector mat_vec(const ScalarMatrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  Vector out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace lieham
