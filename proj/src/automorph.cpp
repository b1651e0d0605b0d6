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

#include "scq/automorph.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

#include "scq/exact_linalg.hpp"
#include "scq/rng.hpp"

namespace scq {

namespace {

void check_perm(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Bits permute_bits(Bits v, const std::vector<int>& perm, int n) {
    Bits out = 0;
    for (int i = 0; i < n; ++i) {
        if (bit_at(v, i, n)) out |= Bits{1} << (n - 1 - perm[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace

std::string AutomorphismCandidate::name(int n) const {
    std::string out = "b=" + std::to_string(b) + " f=" + bits_to_string(f, n) + " perm=";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(perm[i]);
    }
    return out;
}

AutomorphismCandidate identity_candidate(int n) {
    AutomorphismCandidate c;
    c.perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.perm[static_cast<std::size_t>(i)] = i;
    return c;
}

SparseKet apply_candidate(const AutomorphismCandidate& c, const SparseKet& ket) {
    if (ket.dim != 2) throw std::invalid_argument("candidates act on qubit kets");
    int n = ket.n;
    check_perm(c.perm, n);
    Bits ones = bits_mask(n);
    SparseKet out = SparseKet::zero(n, 2);
    for (const auto& [label, amp] : ket.terms) {
        Bits v = permute_bits(static_cast<Bits>(label), c.perm, n);
        CycInt a = amp;
        if (weight(c.f & v) % 2 == 1) a = -a;
        if (c.b) v ^= ones;
        out.add_term(v, a);
    }
    out.canonicalize();
    return out;
}

CodespaceTester::CodespaceTester(const QuantumCodeBasis& basis) : basis_(basis) {
    if (basis.dim != 2) throw std::invalid_argument("membership test requires D = 2");
    int m = basis.size();
    gram_.assign(static_cast<std::size_t>(m),
                 std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            long v = inner(basis.kets[static_cast<std::size_t>(a)],
                           basis.kets[static_cast<std::size_t>(b)])
                         .as_int_d2();
            gram_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
            if (a != b && v != 0) diagonal_ = false;
        }
    }
    for (int a = 0; a < m; ++a) {
        for (const auto& [label, amp] : basis.kets[static_cast<std::size_t>(a)].terms) {
            auto [it, fresh] = label_slot_.try_emplace(label, by_label_.size());
            if (fresh) by_label_.emplace_back();
            by_label_[it->second].emplace_back(a, amp);
        }
    }
}

bool CodespaceTester::contains(const SparseKet& ket) const {
    int m = basis_.size();
    if (m == 0) return ket.terms.empty();
    Rational norm2(inner(ket, ket).as_int_d2());
    std::vector<Rational> w(static_cast<std::size_t>(m), Rational(0));
    for (const auto& [label, amp] : ket.terms) {
        auto it = label_slot_.find(label);
        if (it == label_slot_.end()) continue;
        for (const auto& [b, amp_b] : by_label_[it->second]) {
            w[static_cast<std::size_t>(b)] += (amp_b.conj() * amp).as_int_d2();
        }
    }
    Rational proj2(0);
    if (diagonal_) {
        for (int b = 0; b < m; ++b) {
            const Rational& wb = w[static_cast<std::size_t>(b)];
            if (wb != 0) {
                proj2 += wb * wb /
                         gram_[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
            }
        }
    } else {
        auto y = solve_linear(gram_, w);
        if (!y) throw std::invalid_argument("basis Gram matrix is singular");
        for (int b = 0; b < m; ++b) {
            proj2 += (*y)[static_cast<std::size_t>(b)] * w[static_cast<std::size_t>(b)];
        }
    }
    return proj2 == norm2;
}

bool CodespaceTester::test(const AutomorphismCandidate& c) const {
    for (const SparseKet& ket : basis_.kets) {
        if (!contains(apply_candidate(c, ket))) return false;
    }
    return true;
}

bool preserves_codespace(const AutomorphismCandidate& c, const QuantumCodeBasis& basis) {
    return CodespaceTester(basis).test(c);
}

std::pair<AutomorphismCandidate, int> compose_candidates(
    const AutomorphismCandidate& first, const AutomorphismCandidate& second) {
    int n = static_cast<int>(first.perm.size());
    check_perm(first.perm, n);
    check_perm(second.perm, n);
    AutomorphismCandidate out;
    out.b = first.b ^ second.b;
    out.f = first.f ^ permute_bits(second.f, first.perm, n);
    out.perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.perm[static_cast<std::size_t>(i)] =
            first.perm[static_cast<std::size_t>(second.perm[static_cast<std::size_t>(i)])];
    }
    // X^(all) of the inner factor walks past Z^f of the outer one.
    int sign = (second.b == 1 && weight(first.f) % 2 == 1) ? -1 : 1;
    return {out, sign};
}

PauliSum conjugate_sum(const AutomorphismCandidate& c, const PauliSum& sum) {
    int n = sum.sites();
    check_perm(c.perm, n);
    PauliSum out(n);
    for (const auto& [key, coeff] : sum.terms()) {
        Bits x = permute_bits(key.first, c.perm, n);
        Bits z = permute_bits(key.second, c.perm, n);
        int sign = 1;
        if (weight(c.f & x) % 2 == 1) sign = -sign;
        if (c.b == 1 && weight(key.second) % 2 == 1) sign = -sign;
        out.add_term(x, z, sign < 0 ? Rational(-coeff) : coeff);
    }
    return out;
}

ParityLawReport verify_parity_law(const CodeParams& params, int perm_samples,
                                  std::uint64_t seed) {
    if (params.dim != 2) throw std::invalid_argument("parity law stated for D = 2");
    int n = params.n();
    if (n > 11) throw std::length_error("exhaustive f sweep limited to n <= 11");
    QuantumCodeBasis basis = lift_family(params);

    ParityLawReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.scope_note =
        "scope: exhaustive over the (X^(all))^b Z^f permutation family; "
        "unitaries outside it are probed only by the counterexample suite";

    std::vector<std::vector<int>> perms;
    perms.push_back(identity_candidate(n).perm);
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    perms.push_back(cycle);
    DetRng rng(seed);
    for (int s = 0; s < perm_samples; ++s) perms.push_back(rng.permutation(n));
    rep.permutations = static_cast<int>(perms.size());

    CodespaceTester tester(basis);
    bool holds = true;
    for (std::size_t p = 0; p < perms.size(); ++p) {
        for (int b = 0; b <= 1; ++b) {
            for (Bits f = 0; f <= bits_mask(n); ++f) {
                AutomorphismCandidate cand{b, f, perms[p]};
                bool preserved = tester.test(cand);
                bool expected = (weight(f) % 2 == 0);
                ++rep.candidates;
                if (preserved) ++rep.preserved;
                if (preserved != expected) {
                    holds = false;
                    if (rep.violations.size() < 16) {
                        rep.violations.push_back(
                            cand.name(n) + (preserved ? " unexpectedly preserves"
                                                      : " unexpectedly breaks"));
                    }
                }
            }
        }
    }
    rep.law_holds = holds;
    return rep;
}

CounterexampleReport counterexample_suite(const CodeParams& params) {
    if (params.dim != 2) throw std::invalid_argument("suite stated for D = 2");
    int n = params.n();
    if (n > 7) throw std::length_error("dense float suite limited to n <= 7");
    QuantumCodeBasis basis = lift_family(params);
    int m = basis.size();
    std::size_t dimension = std::size_t{1} << n;

    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    Mat b_mat(dimension, m);
    b_mat.setZero();
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < m; ++a) {
        for (const auto& [label, amp] : basis.kets[static_cast<std::size_t>(a)].terms) {
            b_mat(static_cast<Eigen::Index>(label), a) =
                inv_sqrt2 * static_cast<double>(amp.as_int_d2());
        }
    }

    struct Gate {
        std::string name;
        std::complex<double> g00, g01, g10, g11;
    };
    const std::complex<double> i_unit(0.0, 1.0);
    std::vector<Gate> gates = {
        {"hadamard@0", inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2},
        {"phase@0", 1.0, 0.0, 0.0, i_unit},
        {"x@0", 0.0, 1.0, 1.0, 0.0},
    };

    CounterexampleReport rep;
    rep.n = n;
    int site = 0;
    Bits site_bit = Bits{1} << (n - 1 - site);
    for (const Gate& gate : gates) {
        double defect = 0.0;
        for (int a = 0; a < m; ++a) {
            Vec u = Vec::Zero(static_cast<Eigen::Index>(dimension));
            for (std::size_t v = 0; v < dimension; ++v) {
                std::complex<double> amp = b_mat(static_cast<Eigen::Index>(v), a);
                if (amp == std::complex<double>(0.0)) continue;
                Bits v0 = static_cast<Bits>(v) & ~site_bit;
                Bits v1 = static_cast<Bits>(v) | site_bit;
                if ((static_cast<Bits>(v) & site_bit) == 0) {
                    u(static_cast<Eigen::Index>(v0)) += gate.g00 * amp;
                    u(static_cast<Eigen::Index>(v1)) += gate.g10 * amp;
                } else {
                    u(static_cast<Eigen::Index>(v0)) += gate.g01 * amp;
                    u(static_cast<Eigen::Index>(v1)) += gate.g11 * amp;
                }
            }
            Vec residual = u - b_mat * (b_mat.adjoint() * u);
            defect = std::max(defect, residual.norm());
        }
        rep.rows.push_back({gate.name, defect, defect > 1e-6});
    }
    rep.all_fail = true;
    for (const auto& row : rep.rows) rep.all_fail = rep.all_fail && row.fails;
    return rep;
}

}  // namespace scq
