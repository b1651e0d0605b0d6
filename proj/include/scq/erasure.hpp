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

#ifndef SCQ_ERASURE_HPP
#define SCQ_ERASURE_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "scq/lift.hpp"

namespace scq {

/// Double-precision state on n qubits, length 2^n, unit norm after encode.
struct DenseState {
    int n = 1;
    Eigen::VectorXcd amps;
};

/// sum_a logical_a |psi_a> / sqrt(2), for a normalized logical vector of
/// length M. D = 2, n <= 11.
DenseState encode(const CodeParams& params,
                  const std::vector<std::complex<double>>& logical);
DenseState encode_basis(const QuantumCodeBasis& basis,
                        const std::vector<std::complex<double>>& logical);

/// Known-location erasure: the site is replaced by the maximally mixed
/// state, rho -> (1/4) sum_{E in {I,X,XZ,Z}@site} E rho E'.
Eigen::MatrixXcd erase(const DenseState& state, int site);
Eigen::MatrixXcd erase_density(const Eigen::MatrixXcd& rho, int site);

/// Recovery for an erasure at a known site: one Kraus operator P E' per
/// single-site Pauli E, projecting onto the image subspace and undoing E.
struct RecoveryChannel {
    int site = 0;
    std::vector<Eigen::MatrixXcd> kraus;
    double completeness_defect = 0.0;  // max |(sum K'K) u - u| over image vectors
};

RecoveryChannel build_recovery(const CodeParams& params, int site);

/// enforce_kl = false skips the correctability gate so deliberately broken
/// bases can be pushed through the same pipeline as controls.
RecoveryChannel build_recovery_basis(const QuantumCodeBasis& basis, int site,
                                     bool enforce_kl);

Eigen::MatrixXcd apply_channel(const RecoveryChannel& channel,
                               const Eigen::MatrixXcd& rho);

struct FidelityTrial {
    int site = 0;
    int trial = 0;
    double fidelity = 0.0;
};

struct FidelityReport {
    int n = 0;
    int size = 0;  // logical dimension M
    int trials = 0;
    std::uint64_t seed = 0;
    double min_fidelity = 0.0;
    double mean_fidelity = 0.0;
    bool pass = false;  // min >= 1 - 1e-9
    std::vector<FidelityTrial> results;  // ordered by (site, trial)
};

/// For every site (or just `site` when >= 0) and `trials` seeded random
/// logical states: encode, erase, recover, and report
/// <psi| rho_out |psi> / tr(rho_out).
FidelityReport fidelity_experiment(const CodeParams& params, int trials,
                                   std::uint64_t seed, int site = -1);
FidelityReport fidelity_experiment_basis(const QuantumCodeBasis& basis, int trials,
                                         std::uint64_t seed, bool enforce_kl,
                                         int site = -1);

}  // namespace scq

#endif
