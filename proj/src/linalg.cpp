#include "musurf/linalg.hpp"

#include <algorithm>

namespace musurf {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVec> nullspace_basis(const RatMat& m, std::size_t cols) {
  RatMat a = m;
  for (auto& row : a) row.resize(cols, Rat(0));
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rat(0));
    v[free_c] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

}  // namespace musurf
