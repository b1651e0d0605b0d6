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

#ifndef SCQ_VERIFIER_HPP
#define SCQ_VERIFIER_HPP

#include <string>
#include <vector>

#include "scq/lift.hpp"
#include "scq/weyl.hpp"

namespace scq {

/// All single-site non-identity Weyl operators on n sites: 3n for D = 2,
/// (D^2 - 1) n in general. Site-major order, (x, z) exponents lexicographic.
std::vector<WeylOp> weight_one_ops(int n, int dim);

/// Exact matrix of elements <psi_a| E |psi_b>. Guarded to M <= 2048.
std::vector<std::vector<CycInt>> kl_matrix(const QuantumCodeBasis& basis,
                                           const WeylOp& op);

struct KLViolation {
    std::string op;
    int row = 0;
    int col = 0;
    std::string value;
};

struct KLReport {
    int n = 0;
    int dim = 0;
    int size = 0;        // number of basis kets
    int num_errors = 0;  // weight-1 operators checked (identity extra)
    bool pass = false;
    bool gram_ok = false;           // <psi_a|psi_b> = c delta_ab, c nonzero
    bool gram_is_dim = false;       // the Gram scalar c equals D exactly
    bool all_scalars_zero = false;  // every error scalar c_E = 0
    std::vector<KLViolation> violations;  // capped at 16
    std::string erasure_note;
};

/// Checks <psi_a| E |psi_b> = c_E delta_ab exactly for the identity and
/// every weight-1 Weyl operator, pruning by support intersection.
KLReport verify_distance2(const QuantumCodeBasis& basis);

/// Rank over the rationals of {psi_a} together with every weight-1 error
/// image {E psi_a}, by fraction-free integer elimination. Requires D = 2
/// and n <= 13; elimination stops early once the rank saturates 2^n.
int error_span_rank(const QuantumCodeBasis& basis);

}  // namespace scq

#endif
