#pragma once

// Test-only oracles, each independent of the library path it checks:
// determinants by cofactor expansion (not permutation sums, not
// condensation), n-potency straight from the "eventually reaches n"
// definition, permutation signs by inversion counting.

#include <vector>

#include "ck/funcmap.hpp"
#include "ck/matrix.hpp"
#include "ck/random.hpp"

namespace ck::test {

inline Matrix drop_row_col(const Matrix& a, int row, int col) {
  return Matrix::build(a.ring(), a.rows() - 1, a.cols() - 1, [&](int i, int j) {
    return a.at(i < row ? i : i + 1, j < col ? j : j + 1);
  });
}

inline RingValue cofactor_det(const Matrix& a) {
  const int n = a.rows();
  if (n == 0) return a.ring()->one();
  RingValue sum = a.ring()->zero();
  for (int j = 1; j <= n; ++j) {
    const RingValue term = a.at(1, j) * cofactor_det(drop_row_col(a, 1, j));
    sum = j % 2 == 1 ? sum + term : sum - term;
  }
  return sum;
}

// The existential definition: i reaches n within 2n applications of f.
// (Any reachable vertex is reached in < n steps, so 2n is generous.)
inline bool n_potent_by_definition(const EndoMap& f) {
  const int n = f.n();
  if (f(n) != n) return false;
  for (int i = 1; i <= n; ++i) {
    int v = i;
    bool reached = v == n;
    for (int k = 0; k < 2 * n && !reached; ++k) {
      v = f(v);
      reached = v == n;
    }
    if (!reached) return false;
  }
  return true;
}

inline int sign_by_inversion_count(const std::vector<int>& images) {
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] > images[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? +1 : -1;
}

inline Matrix random_matrix(RandomSource& rng, const RingPtr& ring, int rows,
                            int cols, long long lo, long long hi) {
  return Matrix::build(ring, rows, cols, [&](int, int) {
    return ring->from_int(rng.int_in(lo, hi));
  });
}

// All maps {1..n} -> {1..n} (not just the n-fixing ones), in lex order.
template <typename Fn>
void for_each_map(int n, Fn&& fn) {
  std::vector<int> images(n, 1);
  for (;;) {
    fn(EndoMap(images));
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) {
      images[pos] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++images[pos];
  }
}

}  // namespace ck::test
