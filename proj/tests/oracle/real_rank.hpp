#pragma once

// Test-only oracle: rank of a Gaussian-rational matrix computed through its real
// 2n x 2n embedding [[Re, -Im], [Im, Re]] with plain fraction elimination. Shares
// no code with the library's complex elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symcheck/exact.hpp"

namespace oracle {

inline std::size_t real_rank(std::vector<std::vector<mpq_class>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t complex_rank(const symcheck::ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpq_class>> e(2 * rows, std::vector<mpq_class>(2 * cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& z = m(i, j);
      e[i][j] = z.re();
      e[i][cols + j] = -z.im();
      e[rows + i][j] = z.im();
      e[rows + i][cols + j] = z.re();
    }
  }
  return real_rank(std::move(e)) / 2;
}

}  // namespace oracle
