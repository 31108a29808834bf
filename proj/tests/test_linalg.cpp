#include <doctest.h>

#include <random>

#include "hessberg/linalg.hpp"

using namespace hessberg;

namespace {

// plain rational Gaussian elimination, the reference for the Bareiss path
long rank_oracle(RatMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  long rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

RatMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
  RatMatrix m(rows, std::vector<Rat>(cols));
  for (auto& row : m)
    for (Rat& q : row) {
      long num = static_cast<long>(rng() % 11) - 5;
      long den = 1 + static_cast<long>(rng() % 4);
      q = Rat(num, den);
      q.canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("known ranks") {
  CHECK(rank_exact({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(rank_exact({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank_exact({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
  CHECK(rank_exact({{Rat(1, 2), Rat(1, 3), Rat(1)}}) == 1);
  CHECK(rank_exact({}) == 0);
  // zero column in the middle
  CHECK(rank_exact({{Rat(1), Rat(0), Rat(2)},
                    {Rat(3), Rat(0), Rat(4)},
                    {Rat(5), Rat(0), Rat(6)}}) == 2);
}

TEST_CASE("bareiss agrees with rational elimination on random matrices") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 300; ++round) {
    size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    RatMatrix m = random_matrix(rng, rows, cols);
    CHECK(rank_exact(m) == rank_oracle(m));
  }
}

TEST_CASE("rank-deficient products") {
  std::mt19937_64 rng(778);
  for (int round = 0; round < 100; ++round) {
    size_t n = 4 + rng() % 4, k = 1 + rng() % 3;
    RatMatrix a = random_matrix(rng, n, k), b = random_matrix(rng, k, n);
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t t = 0; t < k; ++t) m[i][j] += a[i][t] * b[t][j];
    long r = rank_exact(m);
    CHECK(r <= static_cast<long>(k));
    CHECK(r == rank_oracle(m));
  }
}
