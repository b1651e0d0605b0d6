// Copyright 2026 The scq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCQ_EXACT_LINALG_HPP
#define SCQ_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "scq/combinat.hpp"

namespace scq {

/// Incremental exact rank over the integers. Rows are eliminated against
/// the stored pivots with cross-multiplication and gcd reduction, so entries
/// stay small and no floating point is involved.
class IntRowEchelon {
  public:
    explicit IntRowEchelon(std::size_t cols) : cols_(cols) {}

    /// Reduces the row against the current pivots and absorbs it.
    /// Returns true when the row was independent (rank grew).
    bool add_row(std::vector<BigInt> row);

    int rank() const { return static_cast<int>(rows_.size()); }
    std::size_t cols() const { return cols_; }

  private:
    std::size_t cols_;
    std::vector<std::vector<BigInt>> rows_;  // one pivot per row, ascending pivot column
    std::vector<std::size_t> pivot_;
};

/// Exact rank of a dense integer matrix.
int integer_rank(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

/// Solves A y = b exactly over the rationals by Gaussian elimination.
/// Returns std::nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace scq

#endif
