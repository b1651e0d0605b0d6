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

#include "scq/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scq {

BigUInt binom(unsigned long n, long m) {
    if (m < 0 || static_cast<unsigned long>(m) > n) return 0;
    BigUInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(m));
    return r;
}

std::vector<Bits> weight_strings(int n, int w) {
    if (n < 0 || n > 63 || w < 0 || w > n)
        throw std::invalid_argument("weight_strings: need 0 <= w <= n <= 63");
    BigUInt count = binom(static_cast<unsigned long>(n), w);
    if (count > BigUInt(1) << 26)
        throw std::length_error("weight_strings: class too large to enumerate");

    std::vector<Bits> out;
    out.reserve(count.get_ui());
    if (w == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks same-weight values in increasing order; the
    // canonical order is decreasing, so reverse at the end.
    Bits v = (Bits{1} << w) - 1;
    const Bits limit = bits_mask(n);
    while (true) {
        out.push_back(v);
        if (v == ((Bits{1} << w) - 1) << (n - w)) break;
        Bits c = v & -v;
        Bits r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
        if (v > limit) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigUInt codespace_size(const CodeParams& params) {
    const unsigned long n = static_cast<unsigned long>(params.n());
    BigUInt closed = (BigUInt(1) << (4 * params.k + 2 * params.l + 1)) -
                     binom(n - 1, 2 * params.k + params.l + 1) / 2;
    BigUInt sum = 0;
    for (int i = 0; i <= params.k; ++i) sum += binom(n, 2 * i + params.l);
    if (closed != sum)
        throw std::logic_error("codespace_size: closed form disagrees with defining sum");
    return closed;
}

AsymptoticRatio asymptotic_fraction(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("asymptotic_fraction: n must be odd and >= 3");
    Rational central(binom(static_cast<unsigned long>(n - 1), (n - 1) / 2));
    Rational denom(BigUInt(1) << (n - 1));
    Rational exact = 1 - central / denom;
    exact.canonicalize();
    AsymptoticRatio r;
    r.exact = exact;
    r.exact_value = exact.get_d();
    r.approx = 1.0 - std::sqrt(2.0 / (M_PI * (n - 1)));
    return r;
}

}  // namespace scq
