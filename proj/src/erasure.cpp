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

#include "scq/erasure.hpp"

#include <stdexcept>

#include "scq/rng.hpp"
#include "scq/verifier.hpp"

namespace scq {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Eigen::Index dense_dim(int n) { return Eigen::Index{1} << n; }

// The four single-site operators of the erasure average, X^a Z^b (Y taken
// as XZ; the phase convention cancels inside E rho E').
Mat site_operator(int n, int site, int a, int b) {
    Eigen::Index dim = dense_dim(n);
    Mat out = Mat::Zero(dim, dim);
    Bits bit = Bits{1} << (n - 1 - site);
    for (Eigen::Index v = 0; v < dim; ++v) {
        Bits src = static_cast<Bits>(v);
        Bits dst = (a == 1) ? (src ^ bit) : src;
        double sign = (b == 1 && (src & bit) != 0) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(dst), v) = sign;
    }
    return out;
}

Mat codespace_projector(const QuantumCodeBasis& basis) {
    Eigen::Index dim = dense_dim(basis.n);
    Mat b_mat = Mat::Zero(dim, basis.size());
    double inv_norm = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < basis.size(); ++a) {
        for (const auto& [label, amp] : basis.kets[static_cast<std::size_t>(a)].terms) {
            b_mat(static_cast<Eigen::Index>(label), a) =
                inv_norm * static_cast<double>(amp.as_int_d2());
        }
    }
    return b_mat * b_mat.adjoint();
}

}  // namespace

DenseState encode_basis(const QuantumCodeBasis& basis,
                        const std::vector<std::complex<double>>& logical) {
    if (basis.dim != 2) throw std::invalid_argument("dense encoding requires D = 2");
    if (basis.n > 11) throw std::length_error("dense state limited to n <= 11");
    if (static_cast<int>(logical.size()) != basis.size()) {
        throw std::invalid_argument("logical vector length must equal basis size");
    }
    DenseState state;
    state.n = basis.n;
    state.amps = Vec::Zero(dense_dim(basis.n));
    double inv_norm = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < basis.size(); ++a) {
        for (const auto& [label, amp] : basis.kets[static_cast<std::size_t>(a)].terms) {
            state.amps(static_cast<Eigen::Index>(label)) +=
                logical[static_cast<std::size_t>(a)] * inv_norm *
                static_cast<double>(amp.as_int_d2());
        }
    }
    return state;
}

DenseState encode(const CodeParams& params,
                  const std::vector<std::complex<double>>& logical) {
    return encode_basis(lift_family(params), logical);
}

Eigen::MatrixXcd erase_density(const Eigen::MatrixXcd& rho, int site) {
    Eigen::Index dim = rho.rows();
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim || rho.cols() != dim) {
        throw std::invalid_argument("density matrix must be square power-of-two");
    }
    if (site < 0 || site >= n) throw std::invalid_argument("site out of range");
    Mat out = Mat::Zero(dim, dim);
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            Mat e = site_operator(n, site, a, b);
            out += e * rho * e.adjoint();
        }
    }
    return 0.25 * out;
}

Eigen::MatrixXcd erase(const DenseState& state, int site) {
    Mat rho = state.amps * state.amps.adjoint();
    return erase_density(rho, site);
}

RecoveryChannel build_recovery_basis(const QuantumCodeBasis& basis, int site,
                                     bool enforce_kl) {
    if (basis.dim != 2) throw std::invalid_argument("recovery requires D = 2");
    if (site < 0 || site >= basis.n) throw std::invalid_argument("site out of range");
    if (enforce_kl) {
        KLReport kl = verify_distance2(basis);
        if (!kl.pass || !kl.all_scalars_zero) {
            throw std::runtime_error("basis fails the exact correctability conditions");
        }
    }
    Mat p = codespace_projector(basis);
    RecoveryChannel channel;
    channel.site = site;
    Mat total = Mat::Zero(p.rows(), p.cols());
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            Mat e = site_operator(basis.n, site, a, b);
            Mat kraus = p * e.adjoint();
            total += kraus.adjoint() * kraus;
            channel.kraus.push_back(std::move(kraus));
        }
    }
    // Completeness on the union of the image subspaces: every image vector
    // E |psi_a> must be fixed by sum K'K.
    double defect = 0.0;
    double inv_norm = 1.0 / std::sqrt(2.0);
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            Mat e = site_operator(basis.n, site, a, b);
            for (const SparseKet& ket : basis.kets) {
                Vec v = Vec::Zero(p.rows());
                for (const auto& [label, amp] : ket.terms) {
                    v(static_cast<Eigen::Index>(label)) =
                        inv_norm * static_cast<double>(amp.as_int_d2());
                }
                Vec image = e * v;
                defect = std::max(defect, (total * image - image).norm());
            }
        }
    }
    channel.completeness_defect = defect;
    return channel;
}

RecoveryChannel build_recovery(const CodeParams& params, int site) {
    return build_recovery_basis(lift_family(params), site, true);
}

Eigen::MatrixXcd apply_channel(const RecoveryChannel& channel,
                               const Eigen::MatrixXcd& rho) {
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (const Mat& k : channel.kraus) out += k * rho * k.adjoint();
    return out;
}

FidelityReport fidelity_experiment_basis(const QuantumCodeBasis& basis, int trials,
                                         std::uint64_t seed, bool enforce_kl,
                                         int site_filter) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (site_filter >= basis.n) throw std::invalid_argument("site out of range");
    FidelityReport report;
    report.n = basis.n;
    report.size = basis.size();
    report.trials = trials;
    report.seed = seed;
    DetRng rng(seed);

    std::vector<int> sites;
    if (site_filter >= 0) {
        sites.push_back(site_filter);
    } else {
        for (int site = 0; site < basis.n; ++site) sites.push_back(site);
    }
    std::vector<RecoveryChannel> channels;
    std::vector<std::vector<Mat>> erase_ops;
    channels.reserve(sites.size());
    erase_ops.reserve(sites.size());
    for (int site : sites) {
        channels.push_back(build_recovery_basis(basis, site, enforce_kl));
        std::vector<Mat> ops;
        for (int a = 0; a <= 1; ++a) {
            for (int b = 0; b <= 1; ++b) ops.push_back(site_operator(basis.n, site, a, b));
        }
        erase_ops.push_back(std::move(ops));
    }

    double min_f = 2.0;
    double sum_f = 0.0;
    for (std::size_t si = 0; si < sites.size(); ++si) {
        int site = sites[si];
        for (int t = 0; t < trials; ++t) {
            std::vector<std::complex<double>> logical(
                static_cast<std::size_t>(basis.size()));
            double norm2 = 0.0;
            for (auto& c : logical) {
                c = {rng.normal(), rng.normal()};
                norm2 += std::norm(c);
            }
            double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : logical) c *= inv;

            DenseState state = encode_basis(basis, logical);
            // rho_out = (1/4) sum_{E,K} (K E psi)(K E psi)', so the overlap
            // and trace are matvec sums; no dense density matrix is needed.
            double overlap = 0.0;
            double trace = 0.0;
            for (const Mat& e : erase_ops[si]) {
                Vec w = e * state.amps;
                for (const Mat& k : channels[si].kraus) {
                    Vec kw = k * w;
                    overlap += 0.25 * std::norm(state.amps.dot(kw));
                    trace += 0.25 * kw.squaredNorm();
                }
            }
            double fidelity = overlap / trace;
            report.results.push_back({site, t, fidelity});
            min_f = std::min(min_f, fidelity);
            sum_f += fidelity;
        }
    }
    report.min_fidelity = min_f;
    report.mean_fidelity = sum_f / static_cast<double>(sites.size() * static_cast<std::size_t>(trials));
    report.pass = (min_f >= 1.0 - 1e-9);
    return report;
}

FidelityReport fidelity_experiment(const CodeParams& params, int trials,
                                   std::uint64_t seed, int site) {
    return fidelity_experiment_basis(lift_family(params), trials, seed, true, site);
}

}  // namespace scq
