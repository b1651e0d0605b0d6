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

#include "scq/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scq {

namespace {
void check_dims(const CycInt& a, const CycInt& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CycInt dimension mismatch");
}
}  // namespace

CycInt& CycInt::operator+=(const CycInt& o) {
    check_dims(*this, o);
    for (int j = 0; j < dim_; ++j) c_[static_cast<size_t>(j)] += o.c_[static_cast<size_t>(j)];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_dims(*this, o);
    for (int j = 0; j < dim_; ++j) c_[static_cast<size_t>(j)] -= o.c_[static_cast<size_t>(j)];
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r(dim_);
    for (int j = 0; j < dim_; ++j) r.c_[static_cast<size_t>(j)] = -c_[static_cast<size_t>(j)];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_dims(*this, o);
    CycInt r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0) continue;
            r.c_[static_cast<size_t>((i + j) % dim_)] +=
                c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

CycInt CycInt::times_omega(int e) const {
    int s = ((e % dim_) + dim_) % dim_;
    CycInt r(dim_);
    for (int j = 0; j < dim_; ++j)
        r.c_[static_cast<size_t>((j + s) % dim_)] = c_[static_cast<size_t>(j)];
    return r;
}

CycInt CycInt::conj() const {
    CycInt r(dim_);
    for (int j = 0; j < dim_; ++j)
        r.c_[static_cast<size_t>((dim_ - j) % dim_)] = c_[static_cast<size_t>(j)];
    return r;
}

bool CycInt::is_prime(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

bool CycInt::is_zero() const {
    if (dim_ == 2) return c_[0] == c_[1];
    if (is_prime(dim_)) {
        // sum a_j omega^j = 0  <=>  all a_j equal, since the minimal
        // polynomial of omega is 1 + x + ... + x^{D-1}.
        for (int j = 1; j < dim_; ++j)
            if (c_[static_cast<size_t>(j)] != c_[0]) return false;
        return true;
    }
    return std::abs(to_complex()) < 1e-12;
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < dim_; ++j) {
        double ang = 2.0 * M_PI * j / dim_;
        acc += static_cast<double>(c_[static_cast<size_t>(j)]) *
               std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    return acc;
}

std::int64_t CycInt::as_int_d2() const {
    if (dim_ != 2) throw std::logic_error("as_int_d2 requires D = 2");
    return c_[0] - c_[1];
}

std::string CycInt::to_string() const {
    if (dim_ == 2) return std::to_string(as_int_d2());
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < dim_; ++j) os << (j ? "," : "") << c_[static_cast<size_t>(j)];
    os << ")";
    return os.str();
}

}  // namespace scq
