#include "hessberg/linalg.hpp"

#include <stdexcept>

namespace hessberg {

long rank_exact(const RatMatrix& m) {
  IntMatrix z;
  z.reserve(m.size());
  for (const auto& row : m) {
    Int d = 1;
    for (const Rat& q : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(),
                                     q.get_den().get_mpz_t());
    std::vector<Int> zrow;
    zrow.reserve(row.size());
    for (const Rat& q : row) zrow.push_back(q.get_num() * (d / q.get_den()));
    z.push_back(std::move(zrow));
  }
  return rank_exact_int(std::move(z));
}

long rank_exact_int(IntMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  long rank = 0;
  size_t r = 0;
  Int prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // smallest nonzero pivot keeps the minors from ballooning
    size_t sel = rows;
    size_t sel_bits = 0;
    for (size_t i = r; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
      if (sel == rows || bits < sel_bits) {
        sel = i;
        sel_bits = bits;
      }
    }
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace hessberg
