#pragma once

#include <cstddef>
#include <vector>

#include "lieham/matrix.hpp"

namespace lieham {

/// One nonzero entry of an identity that should vanish.
template <class T>
struct Residual {
  std::vector<std::size_t> index;
  T value;
};

template <class T>
using ResidualList = std::vector<Residual<T>>;

inline Scalar zero_like(const Scalar&) { return Scalar(0); }
inline Poly zero_like(const Poly& p) { return Poly(p.ring()); }

/// J^{ijk}_m = c^{ij}_s c^{sk}_m + c^{jk}_s c^{si}_m + c^{ki}_s c^{sj}_m over all i, j, k, m.
template <class T>
ResidualList<T> jacobi_defect(const Tensor3<T>& c) {
  const std::size_t n = c.dim();
  ResidualList<T> out;
  if (n == 0) return out;
  const T zero = zero_like(c(0, 0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          T acc = zero;
          for (std::size_t s = 0; s < n; ++s) {
            if (!c(i, j, s).is_zero() && !c(s, k, m).is_zero()) acc += c(i, j, s) * c(s, k, m);
            if (!c(j, k, s).is_zero() && !c(s, i, m).is_zero()) acc += c(j, k, s) * c(s, i, m);
            if (!c(k, i, s).is_zero() && !c(s, j, m).is_zero()) acc += c(k, i, s) * c(s, j, m);
          }
          if (!acc.is_zero()) out.push_back({{i, j, k, m}, std::move(acc)});
        }
      }
    }
  }
  return out;
}

/// Entries with c^{ij}_k + c^{ji}_k != 0.
template <class T>
ResidualList<T> skew_defect(const Tensor3<T>& c) {
  ResidualList<T> out;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        T v = c(i, j, k) + c(j, i, k);
        if (!v.is_zero()) out.push_back({{i, j, k}, std::move(v)});
      }
    }
  }
  return out;
}

/// c^{ij}_s f^{sk} + c^{jk}_s f^{si} + c^{ki}_s f^{sj} over all i, j, k.
template <class T>
ResidualList<T> cocycle_residual(const Tensor3<T>& c, const Matrix<T>& f) {
  const std::size_t n = c.dim();
  if (f.rows() != n || f.cols() != n) throw Error(ErrorCode::ShapeMismatch, "cocycle matrix shape");
  ResidualList<T> out;
  if (n == 0) return out;
  const T zero = zero_like(f(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        T acc = zero;
        for (std::size_t s = 0; s < n; ++s) {
          if (!c(i, j, s).is_zero() && !f(s, k).is_zero()) acc += c(i, j, s) * f(s, k);
          if (!c(j, k, s).is_zero() && !f(s, i).is_zero()) acc += c(j, k, s) * f(s, i);
          if (!c(k, i, s).is_zero() && !f(s, j).is_zero()) acc += c(k, i, s) * f(s, j);
        }
        if (!acc.is_zero()) out.push_back({{i, j, k}, std::move(acc)});
      }
    }
  }
  return out;
}

/// eta^{is} c^{jk}_s + eta^{js} c^{ik}_s over all i, j, k.
template <class T>
ResidualList<T> metric_residual(const Tensor3<T>& c, const Matrix<T>& eta) {
  const std::size_t n = c.dim();
  if (eta.rows() != n || eta.cols() != n) throw Error(ErrorCode::ShapeMismatch, "metric matrix shape");
  ResidualList<T> out;
  if (n == 0) return out;
  const T zero = zero_like(eta(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        T acc = zero;
        for (std::size_t s = 0; s < n; ++s) {
          if (!eta(i, s).is_zero() && !c(j, k, s).is_zero()) acc += eta(i, s) * c(j, k, s);
          if (!eta(j, s).is_zero() && !c(i, k, s).is_zero()) acc += eta(j, s) * c(i, k, s);
        }
        if (!acc.is_zero()) out.push_back({{i, j, k}, std::move(acc)});
      }
    }
  }
  return out;
}

/// a_{is} c^{sk}_j + a_{js} c^{sk}_i over all i, j, k.
template <class T>
ResidualList<T> casimir_residual(const Tensor3<T>& c, const Matrix<T>& a) {
  const std::size_t n = c.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "Casimir matrix shape");
  ResidualList<T> out;
  if (n == 0) return out;
  const T zero = zero_like(a(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        T acc = zero;
        for (std::size_t s = 0; s < n; ++s) {
          if (!a(i, s).is_zero() && !c(s, k, j).is_zero()) acc += a(i, s) * c(s, k, j);
          if (!a(j, s).is_zero() && !c(s, k, i).is_zero()) acc += a(j, s) * c(s, k, i);
        }
        if (!acc.is_zero()) out.push_back({{i, j, k}, std::move(acc)});
      }
    }
  }
  return out;
}

}  // namespace lieham
