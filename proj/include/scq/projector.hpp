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

#ifndef SCQ_PROJECTOR_HPP
#define SCQ_PROJECTOR_HPP

#include <string>
#include <vector>

#include "scq/lift.hpp"
#include "scq/pauli_sum.hpp"

namespace scq {

/// sum_t (-1)^t C(2s,t) C(n-2s, m-t): the value of sum_{|w|=m} (-1)^(x.w)
/// for any x of weight 2s. Requires 0 <= 2s <= n-1 and 0 <= m <= n.
BigInt derived_coeff(int s, int m, int n);

/// Literal evaluation of the circulated closed form
/// 2 sum_t C(2s,t) C(n-2s, 2i+l-t) (s-t), s > 0. Kept only for the audit;
/// it disagrees with derived_coeff (see audit_coefficients).
BigInt printed_coeff(int s, int i, int l, int n);

/// The codespace projector as an exact Pauli sum,
/// (1/2^n) (I + X^(all)) sum_s K(2s) sum_{|x|=2s} Z^x,
/// with K(2s) = sum_i derived_coeff(s, 2i+l, n). D = 2, n <= 15.
PauliSum build_projector(const CodeParams& params);

struct ProjectorCheck {
    int n = 0;
    bool idempotent = false;   // P P = P
    bool hermitian = false;    // adjoint(P) = P
    bool trace_ok = false;     // trace(P) = M
    bool fixes_code = false;   // P psi = psi for every basis ket
    bool kills_images = false; // P (E psi) = 0 for every weight-1 E
    bool support_ok = false;   // only (I + X^(all)) Z^(even x) words appear
    bool pass = false;
    std::string trace_value;
    std::string witness;  // first failing term or ket, empty when pass
};

/// The six exact checks against an explicit sum (so controls can mutate it).
ProjectorCheck check_projector(const PauliSum& sum, const QuantumCodeBasis& basis);

/// build_projector + lift_family + check_projector.
ProjectorCheck projector_selfcheck(const CodeParams& params);

struct AuditRow {
    int s = 0;
    int i = 0;
    BigInt derived;
    BigInt printed;
    bool equal = false;
};

struct AuditSumRow {
    int s = 0;
    BigInt derived_sum;
    BigInt printed_sum;
    bool equal = false;
};

struct AuditTable {
    int n = 0;
    int k = 0;
    int l = 0;
    std::vector<AuditRow> rows;      // all (s, i), s = 0 .. (n-1)/2, i = 0 .. k
    std::vector<AuditSumRow> sums;   // per-s totals
    int mismatches = 0;
};

/// Compares the derivation values against the circulated closed form for
/// every (s, i). Mismatches are recorded, never fatal: the sums built from
/// the derivation pass all projector checks, the closed form does not.
AuditTable audit_coefficients(const CodeParams& params);

}  // namespace scq

#endif
