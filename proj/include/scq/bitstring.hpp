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

#ifndef SCQ_BITSTRING_HPP
#define SCQ_BITSTRING_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace scq {

// A length-n string over Z_D is packed big-endian into a single word:
// site 0 is the most significant digit, so the packed value of a binary
// string equals its integer value read left to right ("10000" -> 16).
// The packed value doubles as the basis-state index of |v>.
using Bits = std::uint64_t;    // D = 2 strings (site 0 = MSB of the n-bit value)
using Label = std::uint64_t;   // general radix-D strings, same convention

inline int weight(Bits v) { return std::popcount(v); }

inline Bits bits_mask(int n) {
    return n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
}

inline Bits bits_complement(Bits v, int n) { return ~v & bits_mask(n); }

inline int bit_at(Bits v, int site, int n) {
    return static_cast<int>((v >> (n - 1 - site)) & 1u);
}

inline int dot2(Bits a, Bits b) { return std::popcount(a & b) & 1; }

inline std::string bits_to_string(Bits v, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (bit_at(v, i, n)) s[static_cast<size_t>(i)] = '1';
    return s;
}

inline std::optional<Bits> bits_from_string(const std::string& s) {
    if (s.empty() || s.size() > 63) return std::nullopt;
    Bits v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') return std::nullopt;
        v = (v << 1) | static_cast<Bits>(c - '0');
    }
    return v;
}

// --- radix-D labels ---------------------------------------------------------

inline std::uint64_t pow_u64(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

/// Largest n such that D^n fits below 2^63; label packing is refused beyond it.
inline int max_sites_for_dim(int dim) {
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
    int n = 0;
    std::uint64_t v = 1;
    const std::uint64_t lim = std::uint64_t{1} << 63;
    while (v < lim / static_cast<std::uint64_t>(dim)) {
        v *= static_cast<std::uint64_t>(dim);
        ++n;
    }
    return n;
}

inline void check_label_size(int n, int dim) {
    if (n < 1 || n > max_sites_for_dim(dim))
        throw std::invalid_argument("label does not fit in 63 bits for this (n, dim)");
}

inline int label_digit(Label v, int site, int n, int dim) {
    return static_cast<int>((v / pow_u64(static_cast<std::uint64_t>(dim), n - 1 - site)) %
                            static_cast<std::uint64_t>(dim));
}

/// Binary word embedded as a label with digits 0/1.
inline Label label_from_bits(Bits v, int n, int dim) {
    if (dim == 2) return v;
    Label out = 0;
    for (int i = 0; i < n; ++i) out = out * static_cast<Label>(dim) + static_cast<Label>(bit_at(v, i, n));
    return out;
}

/// Digit-wise sum mod D (the X-shift action on basis labels).
inline Label label_add(Label a, Label b, int n, int dim) {
    if (dim == 2) return a ^ b;
    Label out = 0, p = 1;
    for (int i = 0; i < n; ++i) {
        out += ((a / p + b / p) % static_cast<Label>(dim)) * p;
        p *= static_cast<Label>(dim);
    }
    return out;
}

/// Digit-wise negation mod D.
inline Label label_negate(Label a, int n, int dim) {
    if (dim == 2) return a;
    Label out = 0, p = 1;
    for (int i = 0; i < n; ++i) {
        Label d = (a / p) % static_cast<Label>(dim);
        out += ((static_cast<Label>(dim) - d) % static_cast<Label>(dim)) * p;
        p *= static_cast<Label>(dim);
    }
    return out;
}

/// v + c*(1,...,1) mod D.
inline Label label_shift_all(Label v, int c, int n, int dim) {
    int cc = ((c % dim) + dim) % dim;
    Label shift = 0, p = 1;
    for (int i = 0; i < n; ++i) {
        shift += static_cast<Label>(cc) * p;
        p *= static_cast<Label>(dim);
    }
    return label_add(v, shift, n, dim);
}

/// sum_i a_i * b_i mod D (exponent of omega produced by Z^a acting on |b>).
inline int label_dot(Label a, Label b, int n, int dim) {
    if (dim == 2) return dot2(a, b);
    int acc = 0;
    Label p = 1;
    for (int i = 0; i < n; ++i) {
        acc += static_cast<int>((a / p) % static_cast<Label>(dim)) *
               static_cast<int>((b / p) % static_cast<Label>(dim));
        p *= static_cast<Label>(dim);
    }
    return acc % dim;
}

inline int label_weight(Label v, int n, int dim) {
    if (dim == 2) return weight(v);
    int w = 0;
    Label p = 1;
    for (int i = 0; i < n; ++i) {
        if ((v / p) % static_cast<Label>(dim) != 0) ++w;
        p *= static_cast<Label>(dim);
    }
    return w;
}

inline std::string label_to_string(Label v, int n, int dim) {
    if (dim > 10) throw std::invalid_argument("label_to_string supports dim <= 10");
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        s[static_cast<size_t>(i)] = static_cast<char>('0' + label_digit(v, i, n, dim));
    return s;
}

inline std::optional<Label> label_from_string(const std::string& s, int dim) {
    if (s.empty() || dim < 2 || dim > 10) return std::nullopt;
    if (static_cast<int>(s.size()) > max_sites_for_dim(dim)) return std::nullopt;
    Label v = 0;
    for (char c : s) {
        int d = c - '0';
        if (d < 0 || d >= dim) return std::nullopt;
        v = v * static_cast<Label>(dim) + static_cast<Label>(d);
    }
    return v;
}

}  // namespace scq

#endif
