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

#ifndef SCQ_LIFT_HPP
#define SCQ_LIFT_HPP

#include <utility>
#include <vector>

#include "scq/classical.hpp"
#include "scq/sparse_ket.hpp"

namespace scq {

/// Basis of a lifted quantum code: one unnormalized ket per classical
/// generator, each with D support points of amplitude 1 (squared norm D).
struct QuantumCodeBasis {
    int n = 1;
    int dim = 2;
    std::vector<SparseKet> kets;          // ordered by generator order
    std::vector<Bits> generators;         // the classical representative per ket
    std::vector<std::pair<int, int>> ij;  // (i, j) family indices; empty for ad-hoc codes

    int size() const { return static_cast<int>(kets.size()); }
};

/// Qubit lift of a self-complementary distance->1 code: one ket
/// |v> + |~v> per complement pair, in generator order.
/// Throws std::invalid_argument when the code is not admissible.
QuantumCodeBasis lift_qubit(const ClassicalCode& code);

/// D-dimensional lift: one ket sum_{c=0}^{D-1} |v + c*(1..1) mod D> per
/// generator. Identical to lift_qubit for D = 2. Throws std::runtime_error
/// if two generator orbits collide (never happens for the family codes;
/// treated as fatal validation failure).
QuantumCodeBasis lift_qudit(const std::vector<Bits>& generators, int n, int dim);

/// Family code basis for (k, l, D), with the (i, j) index map filled in.
QuantumCodeBasis lift_family(const CodeParams& params);

}  // namespace scq

#endif
