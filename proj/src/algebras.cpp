#include "lieham/algebras.hpp"

namespace lieham::algebras {

LieAlgebra sl2() {
  return LieAlgebra::from_brackets(3,
                                   {{1, 2, {{3, Scalar(-4)}}}, {1, 3, {{1, Scalar(-2)}}}, {2, 3, {{2, Scalar(2)}}}},
                                   {"J+", "J-", "J3"});
}

LieAlgebra so3() {
  return LieAlgebra::from_brackets(3, {{1, 2, {{3, Scalar(1)}}}, {2, 3, {{1, Scalar(1)}}}, {1, 3, {{2, Scalar(-1)}}}},
                                   {"L1", "L2", "L3"});
}

LieAlgebra so(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t dim = pairs.size();
  auto index_of = [&](std::size_t a, std::size_t b) -> std::pair<std::size_t, int> {
    int sign = 1;
    if (a > b) {
      std::swap(a, b);
      sign = -1;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (pairs[k] == std::make_pair(a, b)) return {k, sign};
    }
    return {dim, 0};
  };
  Tensor3<Scalar> c(dim, Scalar(0));
  // [N_ij, N_kl] = d_jk N_il - d_jl N_ik - d_ik N_jl + d_il N_jk, with N_ab = -N_ba and N_aa = 0.
  auto add = [&](std::size_t p, std::size_t q, std::size_t a, std::size_t b, int coeff) {
    if (a == b) return;
    auto [k, sign] = index_of(a, b);
    c(p, q, k) += Scalar(coeff * sign);
  };
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) {
      auto [i, j] = pairs[p];
      auto [k, l] = pairs[q];
      if (j == k) add(p, q, i, l, 1);
      if (j == l) add(p, q, i, k, -1);
      if (i == k) add(p, q, j, l, -1);
      if (i == l) add(p, q, j, k, 1);
    }
  }
  std::vector<std::string> labels;
  for (auto [i, j] : pairs) labels.push_back("N" + std::to_string(i + 1) + std::to_string(j + 1));
  return LieAlgebra::from_tensor(std::move(c), std::move(labels));
}

LieAlgebra heisenberg() { return LieAlgebra::from_brackets(3, {{2, 3, {{1, Scalar(1)}}}}); }

LieAlgebra two_dim_nonabelian() { return LieAlgebra::from_brackets(2, {{1, 2, {{1, Scalar(1)}}}}); }

LieAlgebra s46() {
  return LieAlgebra::from_brackets(4, {{2, 3, {{1, Scalar(1)}}}, {2, 4, {{2, Scalar(-1)}}}, {3, 4, {{3, Scalar(1)}}}});
}

LieAlgebra n52() {
  return LieAlgebra::from_brackets(5, {{3, 4, {{2, Scalar(1)}}}, {3, 5, {{1, Scalar(1)}}}, {4, 5, {{3, Scalar(1)}}}});
}

LieAlgebra n61() {
  return LieAlgebra::from_brackets(6, {{4, 5, {{2, Scalar(1)}}}, {4, 6, {{3, Scalar(1)}}}, {5, 6, {{1, Scalar(1)}}}});
}

LieAlgebra su11() {
  return LieAlgebra::from_brackets(3, {{1, 2, {{2, Scalar(1)}}}, {1, 3, {{3, Scalar(-1)}}}, {2, 3, {{1, Scalar(-1)}}}});
}

}  // namespace lieham::algebras
