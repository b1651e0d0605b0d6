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

#ifndef SCQ_PAULI_SUM_HPP
#define SCQ_PAULI_SUM_HPP

#include <map>
#include <utility>

#include "scq/combinat.hpp"
#include "scq/sparse_ket.hpp"

namespace scq {

/// Exact real-rational combination of qubit Pauli words X^x Z^z, keyed in
/// canonical (x, z) order. Signs from reordering are folded into the
/// coefficients, so the representation is unique.
class PauliSum {
  public:
    using Key = std::pair<Bits, Bits>;  // (x part, z part)

    explicit PauliSum(int n);

    int sites() const { return n_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    /// Accumulates coeff * X^x Z^z; erases the term when it cancels.
    void add_term(Bits x, Bits z, const Rational& coeff);

    Rational coefficient(Bits x, Bits z) const;

    PauliSum operator*(const PauliSum& other) const;
    PauliSum operator+(const PauliSum& other) const;
    PauliSum operator-(const PauliSum& other) const;

    /// Conjugate transpose; real coefficients, so only reordering signs act.
    PauliSum adjoint() const;

    /// trace = 2^n * coefficient of the identity word.
    Rational trace() const;

    bool operator==(const PauliSum& other) const;
    bool operator!=(const PauliSum& other) const { return !(*this == other); }

  private:
    int n_;
    std::map<Key, Rational> terms_;
};

/// Exact image of a D=2 sparse ket under the sum, as label -> amplitude.
std::map<Bits, Rational> apply_pauli_sum(const PauliSum& sum, const SparseKet& ket);

}  // namespace scq

#endif
