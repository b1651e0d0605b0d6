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

#include "scq/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace scq {

RainsBound rains_bound(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("bound stated for odd n >= 3");
    BigUInt pow2 = BigUInt(1) << (n - 2);
    Rational exact = Rational(pow2) * (Rational(1) - Rational(1, n - 1));
    BigUInt floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), exact.get_num().get_mpz_t(),
               exact.get_den().get_mpz_t());
    return {exact, floor_value};
}

BigUInt additive_best(int n) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    return BigUInt(1) << (n % 2 == 0 ? n - 2 : n - 3);
}

BigUInt rains_family_size(int n) {
    if (n < 5) throw std::invalid_argument("family defined for n >= 5");
    return BigUInt(3) << (n - 4);
}

std::vector<BoundsRow> crossover_table(int n_max) {
    if (n_max < 5) throw std::invalid_argument("n_max must be >= 5");
    std::vector<BoundsRow> rows;
    for (int n = 5; n <= n_max; n += 2) {
        auto params = CodeParams::from_n(n);
        if (!params) throw std::logic_error("odd n must parse");
        BoundsRow row;
        row.n = n;
        row.m = codespace_size(*params);
        RainsBound rb = rains_bound(n);
        row.rains_exact = rb.exact;
        row.rains_floor = rb.floor_value;
        row.additive = additive_best(n);
        row.rains_family = rains_family_size(n);
        if (row.m > row.rains_family) {
            row.winner = "family";
        } else if (row.m < row.rains_family) {
            row.winner = "prior";
        } else {
            row.winner = "tie";
        }
        rows.push_back(row);
    }
    return rows;
}

EncodedQubits encoded_qubits(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("stated for odd n >= 3");
    auto params = CodeParams::from_n(n);
    if (!params) throw std::invalid_argument("n must parse to (k, l)");
    BigUInt m = codespace_size(*params);
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
    EncodedQubits out;
    out.log2_m = std::log2(mant) + static_cast<double>(exp);
    out.approx = n - 2 -
                 std::sqrt(2.0 / (3.14159265358979323846 * (n - 1))) / std::log(2.0);
    return out;
}

}  // namespace scq
