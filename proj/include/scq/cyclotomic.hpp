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

#ifndef SCQ_CYCLOTOMIC_HPP
#define SCQ_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace scq {

/// Element of Z[omega], omega = exp(2*pi*i/D), stored as the coefficient
/// vector (a_0, ..., a_{D-1}) of sum_j a_j omega^j.
///
/// Zero testing is exact for prime D (reduce modulo the cyclotomic
/// polynomial 1 + x + ... + x^{D-1}: the value is zero iff all
/// coefficients are equal). For composite D the test falls back to
/// numeric evaluation at 1e-12 tolerance; is_zero_exact() reports which
/// route applies so callers can mark their reports.
class CycInt {
  public:
    CycInt() : dim_(2), c_(2, 0) {}
    explicit CycInt(int dim) : dim_(dim), c_(static_cast<size_t>(dim), 0) {}
    static CycInt integer(int dim, std::int64_t v) {
        CycInt r(dim);
        r.c_[0] = v;
        return r;
    }
    static CycInt omega_pow(int dim, int e, std::int64_t v = 1) {
        CycInt r(dim);
        r.c_[static_cast<size_t>(((e % dim) + dim) % dim)] = v;
        return r;
    }

    int dim() const { return dim_; }
    std::int64_t coeff(int j) const { return c_[static_cast<size_t>(j)]; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;  // cyclic convolution mod x^D - 1

    /// Multiply by omega^e (cyclic index shift).
    CycInt times_omega(int e) const;

    /// Complex conjugate: omega -> omega^{-1} (index reversal).
    CycInt conj() const;

    bool is_zero() const;
    /// True when the zero test for this dim is exact (prime D).
    bool is_zero_exact() const { return dim_ == 2 || is_prime(dim_); }

    bool operator==(const CycInt& o) const { return (*this - o).is_zero(); }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

    /// For D = 2 the value is the ordinary integer a_0 - a_1.
    std::int64_t as_int_d2() const;

    std::string to_string() const;

    static bool is_prime(int d);

  private:
    int dim_;
    std::vector<std::int64_t> c_;
};

}  // namespace scq

#endif
