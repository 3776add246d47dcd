// Copyright 2026 the qmf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmf/linalg.hpp"

namespace qmf {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> echelon(Matrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, m.front().size()).size());
}

std::vector<Rational> kernel_vector(const Matrix& m, size_t cols) {
  Matrix e = m;
  for (auto& row : e)
    if (row.size() != cols) fail(ErrorCode::InvalidArgument, "ragged constraint matrix");
  std::vector<size_t> pivots = echelon(e, cols);
  if (pivots.size() >= cols) return {};
  // First free column (deterministic choice), back-substitute pivots.
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (size_t i = 0; i < pivots.size(); ++i) {
    // Row i is the pivot row for column pivots[i]; entry at free_col gives
    // the dependence.
    v[pivots[i]] = -e[i][free_col];
  }
  // Normalize so the first nonzero coordinate is 1.
  for (auto& c : v) {
    if (c != 0) {
      const Rational inv = 1 / c;
      for (auto& d : v) d *= inv;
      break;
    }
  }
  return v;
}

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& target) {
  const size_t ncols = columns.size();
  const size_t nrows = target.size();
  for (const auto& c : columns)
    if (c.size() != nrows) fail(ErrorCode::InvalidArgument, "ragged system");
  Matrix aug(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (size_t i = 0; i < nrows; ++i) {
    for (size_t j = 0; j < ncols; ++j) aug[i][j] = columns[j][i];
    aug[i][ncols] = target[i];
  }
  std::vector<size_t> pivots = echelon(aug, ncols + 1);
  for (size_t c : pivots)
    if (c == ncols) return std::nullopt;  // pivot in the augmented column
  std::vector<Rational> sol(ncols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = aug[i][ncols];
  return sol;
}

}  // namespace qmf
