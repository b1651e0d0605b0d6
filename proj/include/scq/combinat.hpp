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

#ifndef SCQ_COMBINAT_HPP
#define SCQ_COMBINAT_HPP

#include <gmpxx.h>

#include <vector>

#include "scq/bitstring.hpp"
#include "scq/params.hpp"

namespace scq {

using BigUInt = mpz_class;
using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient C(n, m); 0 for m < 0 or m > n.
/// Arbitrary precision, so formula-only callers may use any n.
BigUInt binom(unsigned long n, long m);

/// All C(n, w) binary strings of length n and Hamming weight w, in the
/// canonical order: decreasing big-endian integer value. Requires
/// 0 <= w <= n <= 63 and C(n, w) <= 2^26 (enumeration guard).
std::vector<Bits> weight_strings(int n, int w);

/// Codespace dimension M(k, l) = 2^(4k+2l+1) - C(4k+2l+2, 2k+l+1)/2.
/// The closed form is cross-checked against the defining sum
/// sum_{i=0..k} C(4k+2l+3, 2i+l) on every call.
BigUInt codespace_size(const CodeParams& params);

struct AsymptoticRatio {
    Rational exact;      // 1 - C(n-1, (n-1)/2) / 2^(n-1), as an exact rational
    double exact_value;  // the same, rendered to double
    double approx;       // 1 - sqrt(2 / (pi (n-1)))
};

/// Fraction of the additive-record envelope reached asymptotically:
/// M(n) / 2^(n-2), exact and in the square-root approximation.
AsymptoticRatio asymptotic_fraction(int n);

}  // namespace scq

#endif
