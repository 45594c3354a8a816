#pragma once

#include "burau/braid.hpp"
#include "burau/free_word.hpp"

#include <random>
#include <vector>

namespace burau::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline FreeWord random_word(int rank, int max_len) {
  FreeWord w(rank);
  const int len = uniform(0, max_len);
  for (int k = 0; k < len; ++k) w.push({uniform(1, rank), uniform(0, 1) ? 1 : -1});
  return w;
}

inline BraidWord random_braid(int n, int max_len) {
  std::vector<int> letters;
  if (n >= 2) {
    const int len = uniform(0, max_len);
    for (int k = 0; k < len; ++k) letters.push_back(uniform(1, n - 1) * (uniform(0, 1) ? 1 : -1));
  }
  return BraidWord(n, letters);
}

/// Rejection-samples random_braid until the closure is a knot.
inline BraidWord random_knot_braid(int n, int max_len) {
  for (;;) {
    BraidWord b = random_braid(n, max_len);
    if (closure_components(b) == 1) return b;
  }
}

}  // namespace burau::testing
