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

#include "scq/sparse_ket.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scq {

void SparseKet::add_term(Label v, const CycInt& amp) {
    terms.emplace_back(v, amp);
}

void SparseKet::canonicalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Label, CycInt>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    terms.clear();
    for (auto& t : merged)
        if (!t.second.is_zero()) terms.push_back(t);
}

const CycInt* SparseKet::amplitude(Label v) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), v,
                               [](const auto& t, Label key) { return t.first < key; });
    if (it != terms.end() && it->first == v) return &it->second;
    return nullptr;
}

SparseKet SparseKet::operator+(const SparseKet& o) const {
    if (n != o.n || dim != o.dim) throw std::invalid_argument("SparseKet dimension mismatch");
    SparseKet r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    r.canonicalize();
    return r;
}

SparseKet SparseKet::operator-(const SparseKet& o) const {
    return *this + o.scaled(CycInt::integer(dim, -1));
}

SparseKet SparseKet::scaled(const CycInt& c) const {
    SparseKet r{n, dim, {}};
    for (auto& t : terms) {
        CycInt a = t.second * c;
        if (!a.is_zero()) r.terms.emplace_back(t.first, a);
    }
    return r;
}

bool SparseKet::operator==(const SparseKet& o) const {
    if (n != o.n || dim != o.dim) return false;
    return (*this - o).terms.empty();
}

std::string SparseKet::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, a] : terms) {
        std::string ket = "|" + label_to_string(v, n, dim) + ">";
        bool plain_one = false, plain_minus_one = false;
        if (dim == 2) {
            plain_one = a.as_int_d2() == 1;
            plain_minus_one = a.as_int_d2() == -1;
        } else {
            plain_one = a == CycInt::integer(dim, 1);
            plain_minus_one = a == CycInt::integer(dim, -1);
        }
        if (first) {
            if (plain_minus_one)
                os << "-";
            else if (!plain_one)
                os << a.to_string() << "*";
            first = false;
        } else {
            if (plain_minus_one)
                os << " - ";
            else if (plain_one)
                os << " + ";
            else
                os << " + " << a.to_string() << "*";
        }
        os << ket;
    }
    return os.str();
}

CycInt inner(const SparseKet& a, const SparseKet& b) {
    if (a.n != b.n || a.dim != b.dim) throw std::invalid_argument("SparseKet dimension mismatch");
    CycInt acc(a.dim);
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() && ib != b.terms.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            acc += ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

SparseKet apply_weyl(const WeylOp& op, const SparseKet& ket) {
    if (op.n != ket.n || op.dim != ket.dim)
        throw std::invalid_argument("WeylOp/SparseKet dimension mismatch");
    const int global = op.omega_exponent();
    SparseKet out{ket.n, ket.dim, {}};
    out.terms.reserve(ket.terms.size());
    for (auto& [v, a] : ket.terms) {
        int e = (global + label_dot(op.z, v, op.n, op.dim)) % op.dim;
        out.terms.emplace_back(label_add(v, op.x, op.n, op.dim), a.times_omega(e));
    }
    out.canonicalize();
    return out;
}

}  // namespace scq
