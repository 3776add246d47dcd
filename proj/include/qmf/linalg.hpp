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

#ifndef QMF_LINALG_HPP
#define QMF_LINALG_HPP

#include <optional>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination with first-nonzero-pivot selection.
int matrix_rank(Matrix m);

/// First basis vector of the nullspace of m (rows are constraints over
/// `cols` unknowns), normalized so its first nonzero coordinate is 1.
/// Empty when the nullspace is trivial.
std::vector<Rational> kernel_vector(const Matrix& m, size_t cols);

/// Solves sum_i c_i columns[i] = target exactly; nullopt when inconsistent.
/// When the solution is underdetermined, free coordinates are set to 0.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& target);

}  // namespace qmf

#endif
