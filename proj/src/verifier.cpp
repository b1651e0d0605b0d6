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

#include "scq/verifier.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "scq/exact_linalg.hpp"

namespace scq {

namespace {

using SupportMap = std::unordered_map<Label, std::vector<std::pair<int, CycInt>>>;

SupportMap build_support_map(const QuantumCodeBasis& basis) {
    SupportMap map;
    for (int a = 0; a < basis.size(); ++a) {
        for (const auto& [label, amp] : basis.kets[a].terms) {
            map[label].emplace_back(a, amp);
        }
    }
    return map;
}

// Sparse accumulation of <psi_a| E |psi_b> over all (a, b), touching only
// pairs whose supports intersect. Missing entries are exactly zero.
std::map<std::pair<int, int>, CycInt> accumulate_elements(
    const QuantumCodeBasis& basis, const SupportMap& map, const WeylOp& op) {
    std::map<std::pair<int, int>, CycInt> entries;
    for (int b = 0; b < basis.size(); ++b) {
        SparseKet image = apply_weyl(op, basis.kets[b]);
        for (const auto& [label, amp] : image.terms) {
            auto it = map.find(label);
            if (it == map.end()) continue;
            for (const auto& [a, amp_a] : it->second) {
                auto key = std::make_pair(a, b);
                auto ins = entries.try_emplace(key, CycInt::integer(basis.dim, 0));
                ins.first->second += amp_a.conj() * amp;
            }
        }
    }
    return entries;
}

struct ScalarCheck {
    bool diagonal = true;    // off-diagonal entries all zero
    bool uniform = true;     // diagonal entries all equal
    CycInt scalar;           // the common diagonal value when uniform
};

ScalarCheck check_scalar_identity(const QuantumCodeBasis& basis,
                                  const std::map<std::pair<int, int>, CycInt>& entries,
                                  const WeylOp& op, std::vector<KLViolation>& out) {
    ScalarCheck res;
    res.scalar = CycInt::integer(basis.dim, 0);
    std::vector<CycInt> diag(static_cast<std::size_t>(basis.size()),
                             CycInt::integer(basis.dim, 0));
    for (const auto& [key, value] : entries) {
        if (key.first == key.second) {
            diag[static_cast<std::size_t>(key.first)] = value;
            continue;
        }
        if (value.is_zero()) continue;
        res.diagonal = false;
        if (out.size() < 16) {
            out.push_back({op.name(), key.first, key.second, value.to_string()});
        }
    }
    for (int a = 1; a < basis.size(); ++a) {
        if (diag[static_cast<std::size_t>(a)] == diag[0]) continue;
        res.uniform = false;
        if (out.size() < 16) {
            out.push_back({op.name(), a, a,
                           diag[static_cast<std::size_t>(a)].to_string() +
                               " != " + diag[0].to_string()});
        }
    }
    if (basis.size() > 0) res.scalar = diag[0];
    return res;
}

}  // namespace

std::vector<WeylOp> weight_one_ops(int n, int dim) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
    std::vector<WeylOp> ops;
    ops.reserve(static_cast<std::size_t>(n) *
                static_cast<std::size_t>(dim * dim - 1));
    for (int site = 0; site < n; ++site) {
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                if (a == 0 && b == 0) continue;
                ops.push_back(WeylOp::single_site(n, dim, site, a, b));
            }
        }
    }
    return ops;
}

std::vector<std::vector<CycInt>> kl_matrix(const QuantumCodeBasis& basis,
                                           const WeylOp& op) {
    if (op.n != basis.n || op.dim != basis.dim) {
        throw std::invalid_argument("operator and basis dimensions differ");
    }
    if (basis.size() > 2048) throw std::length_error("basis too large to materialize");
    std::size_t m = static_cast<std::size_t>(basis.size());
    std::vector<std::vector<CycInt>> out(
        m, std::vector<CycInt>(m, CycInt::integer(basis.dim, 0)));
    SupportMap map = build_support_map(basis);
    for (const auto& [key, value] : accumulate_elements(basis, map, op)) {
        out[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] =
            value;
    }
    return out;
}

KLReport verify_distance2(const QuantumCodeBasis& basis) {
    KLReport report;
    report.n = basis.n;
    report.dim = basis.dim;
    report.size = basis.size();
    SupportMap map = build_support_map(basis);

    WeylOp id = WeylOp::identity(basis.n, basis.dim);
    auto gram = accumulate_elements(basis, map, id);
    ScalarCheck gram_check = check_scalar_identity(basis, gram, id, report.violations);
    report.gram_ok = gram_check.diagonal && gram_check.uniform &&
                     !gram_check.scalar.is_zero();
    report.gram_is_dim =
        report.gram_ok && gram_check.scalar == CycInt::integer(basis.dim, basis.dim);

    bool all_pass = report.gram_ok;
    bool all_zero = true;
    std::vector<WeylOp> ops = weight_one_ops(basis.n, basis.dim);
    report.num_errors = static_cast<int>(ops.size());
    for (const WeylOp& op : ops) {
        auto entries = accumulate_elements(basis, map, op);
        ScalarCheck check = check_scalar_identity(basis, entries, op, report.violations);
        if (!(check.diagonal && check.uniform)) all_pass = false;
        if (!check.scalar.is_zero()) all_zero = false;
    }
    report.pass = all_pass;
    report.all_scalars_zero = all_zero;
    report.erasure_note =
        "single-erasure corollary: any two operators supported on one known site "
        "compose to an operator of weight <= 1, so the verified scalar conditions "
        "imply <psi_a|E'F|psi_b> = c delta_ab for every such pair";
    return report;
}

int error_span_rank(const QuantumCodeBasis& basis) {
    if (basis.dim != 2) throw std::invalid_argument("rank check requires D = 2");
    if (basis.n > 13) throw std::length_error("n too large for dense rank");
    std::size_t cols = std::size_t{1} << basis.n;
    IntRowEchelon ech(cols);

    auto absorb = [&](const SparseKet& ket) {
        std::vector<BigInt> row(cols, 0);
        for (const auto& [label, amp] : ket.terms) {
            row[static_cast<std::size_t>(label)] = amp.as_int_d2();
        }
        ech.add_row(std::move(row));
    };

    std::vector<WeylOp> ops = weight_one_ops(basis.n, 2);
    for (const SparseKet& ket : basis.kets) {
        absorb(ket);
        if (ech.rank() == static_cast<int>(cols)) return ech.rank();
    }
    for (const WeylOp& op : ops) {
        for (const SparseKet& ket : basis.kets) {
            absorb(apply_weyl(op, ket));
            if (ech.rank() == static_cast<int>(cols)) return ech.rank();
        }
    }
    return ech.rank();
}

}  // namespace scq
