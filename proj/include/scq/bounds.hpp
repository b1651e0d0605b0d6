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

#ifndef SCQ_BOUNDS_HPP
#define SCQ_BOUNDS_HPP

#include <string>
#include <vector>

#include "scq/combinat.hpp"

namespace scq {

struct RainsBound {
    Rational exact;       // 2^(n-2) (1 - 1/(n-1))
    BigUInt floor_value;  // integer consequence for a code dimension
};

/// Upper bound on distance-2 codespace dimension, odd n >= 3.
RainsBound rains_bound(int n);

/// Best additive (stabilizer) distance-2 dimension: 2^(n-2) even, 2^(n-3) odd.
BigUInt additive_best(int n);

/// Dimension 3 * 2^(n-4) of the previously known nonadditive family, n >= 5.
BigUInt rains_family_size(int n);

struct BoundsRow {
    int n = 0;
    BigUInt m;             // this family's dimension
    Rational rains_exact;
    BigUInt rains_floor;
    BigUInt additive;
    BigUInt rains_family;
    std::string winner;    // "family", "prior", or "tie"
};

/// Rows for every odd n in [5, n_max], formula-only.
std::vector<BoundsRow> crossover_table(int n_max);

struct EncodedQubits {
    double log2_m = 0.0;  // exact M rendered through bignum log2
    double approx = 0.0;  // n - 2 - (1/ln 2) sqrt(2 / (pi (n-1)))
};

EncodedQubits encoded_qubits(int n);

}  // namespace scq

#endif
