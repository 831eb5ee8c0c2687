#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "lieham/linalg.hpp"
#include "lieham/parse.hpp"

namespace testing_support {

// Property tests read LIEHAM_SEED so failures can be replayed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("LIEHAM_SEED")) return std::stoull(s);
  return 20240611;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline lieham::Scalar small_rational(std::mt19937_64& rng, int span = 3) {
  int num = uniform(rng, -span, span);
  int den = uniform(rng, 1, 3);
  return lieham::Scalar(num, den);
}

inline lieham::ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias = 2) {
  lieham::ScalarMatrix m(r, c, lieham::Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (uniform(rng, 0, zero_bias) == 0) continue;
      m(i, j) = small_rational(rng);
    }
  }
  return m;
}

inline lieham::ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    lieham::ScalarMatrix m(n, n, lieham::Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = lieham::Scalar(uniform(rng, -2, 2));
    }
    if (!lieham::determinant(m).is_zero()) return m;
  }
}

inline lieham::Poly P(const std::string& s, const lieham::RingPtr& r) { return lieham::parse_poly(s, r); }
inline lieham::Scalar S(const std::string& s) { return lieham::parse_scalar(s); }

}  // namespace testing_support
