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

#ifndef SCQ_PARAMS_HPP
#define SCQ_PARAMS_HPP

#include <optional>
#include <stdexcept>

namespace scq {

/// Parameters of one member of the code family: the pair (k, l) with
/// l in {0,1} fixes the block length n = 4k + 2l + 3 (always odd, >= 3),
/// and dim is the local dimension D (qubits for D = 2).
struct CodeParams {
    int k = 0;
    int l = 1;
    int dim = 2;

    int n() const { return 4 * k + 2 * l + 3; }

    static CodeParams from_kl(int k, int l, int dim = 2) {
        if (k < 0) throw std::invalid_argument("k must be non-negative");
        if (l != 0 && l != 1) throw std::invalid_argument("l must be 0 or 1");
        if (dim < 2) throw std::invalid_argument("dim must be >= 2");
        return CodeParams{k, l, dim};
    }

    /// Inverse of n = 4k + 2l + 3: l = ((n-3)/2) mod 2, k = (n-3-2l)/4.
    /// Returns nullopt for even n or n < 3.
    static std::optional<CodeParams> from_n(int n, int dim = 2) {
        if (n < 3 || n % 2 == 0 || dim < 2) return std::nullopt;
        int l = ((n - 3) / 2) % 2;
        int k = (n - 3 - 2 * l) / 4;
        return CodeParams{k, l, dim};
    }
};

}  // namespace scq

#endif
