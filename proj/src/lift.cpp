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

#include "scq/lift.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "scq/combinat.hpp"

namespace scq {

QuantumCodeBasis lift_qubit(const ClassicalCode& code) {
    AdmissibilityReport rep = lift_admissible(code);
    if (!rep.admissible) {
        throw std::invalid_argument("code not liftable: " + rep.detail);
    }
    QuantumCodeBasis basis;
    basis.n = code.n;
    basis.dim = 2;
    Bits mask = bits_mask(code.n);
    for (Bits g : code.generators) {
        SparseKet ket = SparseKet::zero(code.n, 2);
        ket.add_term(g, CycInt::integer(2, 1));
        ket.add_term(g ^ mask, CycInt::integer(2, 1));
        ket.canonicalize();
        basis.kets.push_back(std::move(ket));
        basis.generators.push_back(g);
    }
    return basis;
}

QuantumCodeBasis lift_qudit(const std::vector<Bits>& generators, int n, int dim) {
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
    check_label_size(n, dim);
    QuantumCodeBasis basis;
    basis.n = n;
    basis.dim = dim;
    std::set<Label> seen;
    for (Bits g : generators) {
        Label base = label_from_bits(g, n, dim);
        SparseKet ket = SparseKet::zero(n, dim);
        for (int c = 0; c < dim; ++c) {
            Label v = label_shift_all(base, c, n, dim);
            if (!seen.insert(v).second) {
                throw std::runtime_error("generator orbits collide at label " +
                                         label_to_string(v, n, dim));
            }
            ket.add_term(v, CycInt::integer(dim, 1));
        }
        ket.canonicalize();
        basis.kets.push_back(std::move(ket));
        basis.generators.push_back(g);
    }
    return basis;
}

QuantumCodeBasis lift_family(const CodeParams& params) {
    int n = params.n();
    std::vector<Bits> gens = build_generators(params);
    QuantumCodeBasis basis = lift_qudit(gens, n, params.dim);
    for (int i = 0; i <= params.k; ++i) {
        int w = 2 * i + params.l;
        auto cnt = binom(n, w);
        unsigned long count = cnt.get_ui();
        for (unsigned long j = 0; j < count; ++j) {
            basis.ij.emplace_back(i, static_cast<int>(j));
        }
    }
    if (basis.ij.size() != basis.kets.size()) {
        throw std::logic_error("index map size mismatch");
    }
    return basis;
}

}  // namespace scq
