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

#ifndef SCQ_AUTOMORPH_HPP
#define SCQ_AUTOMORPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scq/lift.hpp"
#include "scq/pauli_sum.hpp"

namespace scq {

/// (X^(all))^b Z^f composed after a site permutation. perm[i] is the
/// destination site of source site i.
struct AutomorphismCandidate {
    int b = 0;
    Bits f = 0;
    std::vector<int> perm;

    std::string name(int n) const;
};

AutomorphismCandidate identity_candidate(int n);

/// Permute sites, then Z^f, then (X^(all))^b. Exact signs, D = 2.
SparseKet apply_candidate(const AutomorphismCandidate& c, const SparseKet& ket);

/// Exact codespace-membership tester. The Gram matrix is computed once;
/// each candidate check then solves for the projection coefficients and
/// compares squared projection norm with squared norm, all over rationals.
class CodespaceTester {
  public:
    explicit CodespaceTester(const QuantumCodeBasis& basis);

    bool test(const AutomorphismCandidate& c) const;

    /// True iff the ket's projection onto the span has the ket's norm.
    bool contains(const SparseKet& ket) const;

  private:
    const QuantumCodeBasis& basis_;
    std::vector<std::vector<Rational>> gram_;
    bool diagonal_ = true;
    std::vector<std::vector<std::pair<int, CycInt>>> by_label_;  // keyed via map below
    std::unordered_map<Label, std::size_t> label_slot_;
};

/// One-off convenience wrapper around CodespaceTester.
bool preserves_codespace(const AutomorphismCandidate& c, const QuantumCodeBasis& basis);

/// Symbolic composition, apply `second` first. The returned sign is the
/// global factor picked up while normal-ordering; +1 whenever |f| of the
/// outer candidate is even.
std::pair<AutomorphismCandidate, int> compose_candidates(
    const AutomorphismCandidate& first, const AutomorphismCandidate& second);

/// Conjugates a Pauli sum term by term: X^x Z^z picks up the sign
/// (-1)^(f.perm(x) + b|z|) and both words get site-permuted.
PauliSum conjugate_sum(const AutomorphismCandidate& c, const PauliSum& sum);

struct ParityLawReport {
    int n = 0;
    std::uint64_t seed = 0;
    int permutations = 0;      // identity + full cycle + samples
    long candidates = 0;       // permutations * 2^(n+1)
    long preserved = 0;        // those that fix the codespace
    bool law_holds = false;    // preserved <=> |f| even, every candidate
    std::vector<std::string> violations;  // capped at 16
    std::string scope_note;
};

/// Exhaustive (b, f) sweep against identity, the full cycle, and
/// perm_samples seeded random permutations.
ParityLawReport verify_parity_law(const CodeParams& params, int perm_samples,
                                  std::uint64_t seed);

struct CounterexampleRow {
    std::string name;
    double defect = 0.0;  // max projection residual over basis images
    bool fails = false;   // defect > 1e-6
};

struct CounterexampleReport {
    int n = 0;
    std::vector<CounterexampleRow> rows;
    bool all_fail = false;
};

/// Single-site Hadamard, phase diag(1, i), and a lone X, all on site 0:
/// each must break codespace preservation (dense float check).
CounterexampleReport counterexample_suite(const CodeParams& params);

}  // namespace scq

#endif
