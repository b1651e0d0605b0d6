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

#include "scq/pauli_sum.hpp"

#include <stdexcept>

namespace scq {

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1 || n > 63) throw std::invalid_argument("n out of range");
}

void PauliSum::add_term(Bits x, Bits z, const Rational& coeff) {
    Bits mask = bits_mask(n_);
    if ((x & ~mask) != 0 || (z & ~mask) != 0) {
        throw std::invalid_argument("term exceeds site count");
    }
    if (coeff == 0) return;
    Key key{x, z};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Rational PauliSum::coefficient(Bits x, Bits z) const {
    auto it = terms_.find(Key{x, z});
    return it == terms_.end() ? Rational(0) : it->second;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
    if (n_ != other.n_) throw std::invalid_argument("site count mismatch");
    PauliSum out(n_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            // X^x1 Z^z1 X^x2 Z^z2 = (-1)^(z1.x2) X^(x1^x2) Z^(z1^z2)
            int sign = dot2(ka.second, kb.first) ? -1 : 1;
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(ka.first ^ kb.first, ka.second ^ kb.second, c);
        }
    }
    return out;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
    if (n_ != other.n_) throw std::invalid_argument("site count mismatch");
    PauliSum out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
    return out;
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
    if (n_ != other.n_) throw std::invalid_argument("site count mismatch");
    PauliSum out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_);
    for (const auto& [k, c] : terms_) {
        // (X^x Z^z)' = Z^z X^x = (-1)^(x.z) X^x Z^z
        Rational v = dot2(k.first, k.second) ? Rational(-c) : c;
        out.add_term(k.first, k.second, v);
    }
    return out;
}

Rational PauliSum::trace() const {
    Rational c = coefficient(0, 0);
    mpz_class scale = mpz_class(1) << n_;
    return c * Rational(scale);
}

bool PauliSum::operator==(const PauliSum& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
}

std::map<Bits, Rational> apply_pauli_sum(const PauliSum& sum, const SparseKet& ket) {
    if (ket.dim != 2 || ket.n != sum.sites()) {
        throw std::invalid_argument("ket incompatible with sum");
    }
    std::map<Bits, Rational> out;
    for (const auto& [key, coeff] : sum.terms()) {
        for (const auto& [label, amp] : ket.terms) {
            Bits v = static_cast<Bits>(label);
            int a = amp.as_int_d2();
            Rational c = coeff * a;
            if (dot2(key.second, v)) c = -c;
            Bits target = v ^ key.first;
            auto it = out.find(target);
            if (it == out.end()) {
                if (c != 0) out.emplace(target, c);
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace scq
