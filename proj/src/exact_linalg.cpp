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

#include "scq/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace scq {

namespace {

void gcd_reduce(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const BigInt& v : row) {
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (BigInt& v : row) v /= g;
}

std::size_t first_nonzero(const std::vector<BigInt>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

}  // namespace

bool IntRowEchelon::add_row(std::vector<BigInt> row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivot_[r];
        if (row[p] == 0) continue;
        BigInt a = rows_[r][p];
        BigInt b = row[p];
        for (std::size_t j = 0; j < cols_; ++j) {
            row[j] = a * row[j] - b * rows_[r][j];
        }
        gcd_reduce(row);
    }
    std::size_t p = first_nonzero(row);
    if (p == cols_) return false;
    // Insert keeping pivots ascending so later eliminations stay triangular.
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivot_.insert(pivot_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

int integer_rank(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
    IntRowEchelon ech(cols);
    for (const auto& r : rows) ech.add_row(r);
    return ech.rank();
}

std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
    for (const auto& row : a) {
        if (row.size() != m) throw std::invalid_argument("matrix must be square");
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < m; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = b[i] / a[i][i];
    return y;
}

}  // namespace scq
