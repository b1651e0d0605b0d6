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

#include "scq/projector.hpp"

#include <stdexcept>

#include "scq/verifier.hpp"

namespace scq {

BigInt derived_coeff(int s, int m, int n) {
    if (s < 0 || 2 * s > n - 1) throw std::invalid_argument("need 0 <= 2s <= n-1");
    if (m < 0 || m > n) throw std::invalid_argument("need 0 <= m <= n");
    BigInt total = 0;
    for (int t = 0; t <= 2 * s; ++t) {
        BigInt part = binom(static_cast<unsigned long>(2 * s), t) *
                      binom(static_cast<unsigned long>(n - 2 * s), m - t);
        if (t % 2 == 0) {
            total += part;
        } else {
            total -= part;
        }
    }
    return total;
}

BigInt printed_coeff(int s, int i, int l, int n) {
    if (s <= 0) throw std::invalid_argument("closed form stated for s > 0");
    int m = 2 * i + l;
    BigInt total = 0;
    for (int t = 0; t <= m; ++t) {
        total += binom(static_cast<unsigned long>(2 * s), t) *
                 binom(static_cast<unsigned long>(n - 2 * s), m - t) * (s - t);
    }
    return 2 * total;
}

PauliSum build_projector(const CodeParams& params) {
    if (params.dim != 2) throw std::invalid_argument("projector form requires D = 2");
    int n = params.n();
    if (n > 15) throw std::length_error("n too large for the full Pauli expansion");
    PauliSum sum(n);
    Rational denom(mpz_class(1) << n);
    Bits ones = bits_mask(n);
    for (int s = 0; 2 * s <= n - 1; ++s) {
        BigInt weight = 0;
        for (int i = 0; i <= params.k; ++i) {
            weight += derived_coeff(s, 2 * i + params.l, n);
        }
        if (weight == 0) continue;
        Rational coeff = Rational(weight) / denom;
        for (Bits x : weight_strings(n, 2 * s)) {
            sum.add_term(0, x, coeff);
            sum.add_term(ones, x, coeff);
        }
    }
    return sum;
}

namespace {

bool image_is_zero(const PauliSum& sum, const SparseKet& ket) {
    return apply_pauli_sum(sum, ket).empty();
}

bool image_equals_ket(const PauliSum& sum, const SparseKet& ket) {
    auto image = apply_pauli_sum(sum, ket);
    if (image.size() != ket.terms.size()) return false;
    for (const auto& [label, amp] : ket.terms) {
        auto it = image.find(static_cast<Bits>(label));
        if (it == image.end()) return false;
        if (it->second != amp.as_int_d2()) return false;
    }
    return true;
}

std::string term_name(int n, Bits x, Bits z) {
    return "X^" + bits_to_string(x, n) + " Z^" + bits_to_string(z, n);
}

}  // namespace

ProjectorCheck check_projector(const PauliSum& sum, const QuantumCodeBasis& basis) {
    ProjectorCheck rep;
    rep.n = basis.n;
    if (basis.dim != 2 || sum.sites() != basis.n) {
        throw std::invalid_argument("sum and basis incompatible");
    }
    int n = basis.n;
    Bits ones = bits_mask(n);

    PauliSum square = sum * sum;
    rep.idempotent = (square == sum);
    if (!rep.idempotent && rep.witness.empty()) {
        for (const auto& [k, c] : square.terms()) {
            if (sum.coefficient(k.first, k.second) != c) {
                rep.witness = "idempotence fails at " + term_name(n, k.first, k.second);
                break;
            }
        }
        if (rep.witness.empty()) rep.witness = "idempotence fails: term lost";
    }

    rep.hermitian = (sum.adjoint() == sum);
    if (!rep.hermitian && rep.witness.empty()) rep.witness = "not self-adjoint";

    Rational tr = sum.trace();
    BigUInt m_expected(static_cast<unsigned long>(basis.size()));
    rep.trace_value = tr.get_str();
    rep.trace_ok = (tr == Rational(m_expected));
    if (!rep.trace_ok && rep.witness.empty()) {
        rep.witness = "trace " + rep.trace_value + " != " + m_expected.get_str();
    }

    rep.fixes_code = true;
    for (int a = 0; a < basis.size() && rep.fixes_code; ++a) {
        if (!image_equals_ket(sum, basis.kets[static_cast<std::size_t>(a)])) {
            rep.fixes_code = false;
            if (rep.witness.empty()) {
                rep.witness = "basis ket " + std::to_string(a) + " not fixed";
            }
        }
    }

    rep.kills_images = true;
    std::vector<WeylOp> ops = weight_one_ops(n, 2);
    for (const WeylOp& op : ops) {
        for (int a = 0; a < basis.size(); ++a) {
            SparseKet image = apply_weyl(op, basis.kets[static_cast<std::size_t>(a)]);
            if (image_is_zero(sum, image)) continue;
            rep.kills_images = false;
            if (rep.witness.empty()) {
                rep.witness = "error image survives: " + op.name() + " on ket " +
                              std::to_string(a);
            }
            break;
        }
        if (!rep.kills_images) break;
    }

    rep.support_ok = true;
    for (const auto& [k, c] : sum.terms()) {
        (void)c;
        bool x_ok = (k.first == 0 || k.first == ones);
        bool z_ok = (weight(k.second) % 2 == 0);
        if (x_ok && z_ok) continue;
        rep.support_ok = false;
        if (rep.witness.empty()) {
            rep.witness = "unexpected term " + term_name(n, k.first, k.second);
        }
        break;
    }

    rep.pass = rep.idempotent && rep.hermitian && rep.trace_ok && rep.fixes_code &&
               rep.kills_images && rep.support_ok;
    return rep;
}

ProjectorCheck projector_selfcheck(const CodeParams& params) {
    PauliSum sum = build_projector(params);
    QuantumCodeBasis basis = lift_family(params);
    return check_projector(sum, basis);
}

AuditTable audit_coefficients(const CodeParams& params) {
    AuditTable table;
    int n = params.n();
    table.n = n;
    table.k = params.k;
    table.l = params.l;
    for (int s = 0; 2 * s <= n - 1; ++s) {
        BigInt dsum = 0;
        BigInt psum = 0;
        for (int i = 0; i <= params.k; ++i) {
            AuditRow row;
            row.s = s;
            row.i = i;
            row.derived = derived_coeff(s, 2 * i + params.l, n);
            // s = 0 case is the plain binomial in both sources.
            row.printed = (s == 0) ? BigInt(binom(static_cast<unsigned long>(n),
                                                  2 * i + params.l))
                                   : printed_coeff(s, i, params.l, n);
            row.equal = (row.derived == row.printed);
            if (!row.equal) ++table.mismatches;
            dsum += row.derived;
            psum += row.printed;
            table.rows.push_back(row);
        }
        AuditSumRow srow;
        srow.s = s;
        srow.derived_sum = dsum;
        srow.printed_sum = psum;
        srow.equal = (dsum == psum);
        table.sums.push_back(srow);
    }
    return table;
}

}  // namespace scq
