#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieham/error.hpp"
#include "lieham/poly.hpp"
#include "lieham/scalar.hpp"

namespace lieham {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  bool is_skew() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i; j < cols_; ++j) {
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
    Matrix r(a.rows_, b.cols_, a.rows_ && a.cols_ ? a(0, 0) * Scalar(0) : T());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero_value(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    }
    return r;
  }

  template <class S>
  Matrix scaled(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  static bool is_zero_value(const T& x) { return x.is_zero(); }
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Dense n x n x n array indexed (i, j, k).
template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t n, const T& fill = T()) : n_(n), data_(n * n * n, fill) {}  // NOLINT

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly>;
using Vector = std::vector<Scalar>;

inline ScalarMatrix scalar_identity(std::size_t n) { return ScalarMatrix::identity(n, Scalar(0), Scalar(1)); }

/// Lifts a Scalar matrix into constant polynomials over ring.
PolyMatrix to_poly(const ScalarMatrix& m, const RingPtr& ring);
/// Lifts every entry into another ring by indeterminate name.
PolyMatrix lift(const PolyMatrix& m, const RingPtr& ring);
/// Evaluates a polynomial matrix that must be constant.
ScalarMatrix to_scalar(const PolyMatrix& m);
PolyMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Scalar>& values);

Tensor3<Poly> to_poly(const Tensor3<Scalar>& t, const RingPtr& ring);
Tensor3<Scalar> to_scalar(const Tensor3<Poly>& t);
Tensor3<Poly> lift(const Tensor3<Poly>& t, const RingPtr& ring);
Tensor3<Poly> evaluate(const Tensor3<Poly>& t, const std::map<std::string, Scalar>& values);

bool is_zero_matrix(const ScalarMatrix& m);
bool is_zero_matrix(const PolyMatrix& m);

std::string to_string(const ScalarMatrix& m);
std::string to_string(const PolyMatrix& m);

}  // namespace lieham
