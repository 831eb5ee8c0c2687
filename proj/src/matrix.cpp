#include "lieham/matrix.hpp"

namespace lieham {

PolyMatrix to_poly(const ScalarMatrix& m, const RingPtr& ring) {
  PolyMatrix r(m.rows(), m.cols(), Poly(ring));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Poly(ring, m(i, j));
  }
  return r;
}

PolyMatrix lift(const PolyMatrix& m, const RingPtr& ring) {
  PolyMatrix r(m.rows(), m.cols(), Poly(ring));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).lift(ring);
  }
  return r;
}

ScalarMatrix to_scalar(const PolyMatrix& m) {
  ScalarMatrix r(m.rows(), m.cols(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).constant_value();
  }
  return r;
}

PolyMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Scalar>& values) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(values);
  }
  return r;
}

Tensor3<Poly> to_poly(const Tensor3<Scalar>& t, const RingPtr& ring) {
  const std::size_t n = t.dim();
  Tensor3<Poly> r(n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = Poly(ring, t(i, j, k));
    }
  }
  return r;
}

Tensor3<Scalar> to_scalar(const Tensor3<Poly>& t) {
  const std::size_t n = t.dim();
  Tensor3<Scalar> r(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = t(i, j, k).constant_value();
    }
  }
  return r;
}

Tensor3<Poly> lift(const Tensor3<Poly>& t, const RingPtr& ring) {
  const std::size_t n = t.dim();
  Tensor3<Poly> r(n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = t(i, j, k).lift(ring);
    }
  }
  return r;
}

Tensor3<Poly> evaluate(const Tensor3<Poly>& t, const std::map<std::string, Scalar>& values) {
  const std::size_t n = t.dim();
  Tensor3<Poly> r = t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = t(i, j, k).evaluate(values);
    }
  }
  return r;
}

bool is_zero_matrix(const ScalarMatrix& m) {
  for (const auto& x : m.data()) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool is_zero_matrix(const PolyMatrix& m) {
  for (const auto& x : m.data()) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {

template <class T>
std::string render(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const ScalarMatrix& m) { return render(m); }
std::string to_string(const PolyMatrix& m) { return render(m); }

}  // namespace lieham
