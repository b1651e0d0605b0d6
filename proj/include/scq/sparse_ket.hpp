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

#ifndef SCQ_SPARSE_KET_HPP
#define SCQ_SPARSE_KET_HPP

#include <string>
#include <utility>
#include <vector>

#include "scq/cyclotomic.hpp"
#include "scq/weyl.hpp"

namespace scq {

/// Finitely-supported unnormalized state: basis labels with exact
/// cyclotomic-integer amplitudes, kept sorted by label with zero
/// amplitudes dropped.
struct SparseKet {
    int n = 1;
    int dim = 2;
    std::vector<std::pair<Label, CycInt>> terms;

    static SparseKet zero(int n, int dim) { return SparseKet{n, dim, {}}; }

    void add_term(Label v, const CycInt& amp);
    void canonicalize();  // sort by label, merge, drop zeros

    const CycInt* amplitude(Label v) const;  // nullptr when unsupported

    SparseKet operator+(const SparseKet& o) const;
    SparseKet operator-(const SparseKet& o) const;
    SparseKet scaled(const CycInt& c) const;

    bool operator==(const SparseKet& o) const;

    std::string to_string() const;  // e.g. "|10000> + |01111>", "-|100> + |011>"
};

/// <a|b> with conjugation on a's amplitudes.
CycInt inner(const SparseKet& a, const SparseKet& b);

/// Exact image of a ket under a Weyl operator; support size is preserved.
SparseKet apply_weyl(const WeylOp& op, const SparseKet& ket);

}  // namespace scq

#endif
