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

#ifndef SCQ_WEYL_HPP
#define SCQ_WEYL_HPP

#include <string>

#include "scq/bitstring.hpp"

namespace scq {

/// Phased product of X-shifts and Z-phases in X^x Z^z normal form
/// (Z acts first, then X): |v> -> zeta^phase * omega^{z.v} |v + x mod D>,
/// where omega = exp(2*pi*i/D) and zeta^2 = omega.
///
/// The phase exponent lives in Z_{2D}. Products of X and Z factors only
/// ever produce even exponents (omega powers); the odd half of Z_{2D} is
/// never generated here, and exact arithmetic rejects it. In particular
/// Y = XZ for qubits, with no factor of sqrt(-1).
struct WeylOp {
    int n = 1;
    int dim = 2;
    Label x = 0;      // shift part, radix-D packed
    Label z = 0;      // phase part, radix-D packed
    int phase = 0;    // exponent of zeta, mod 2D

    static WeylOp identity(int n, int dim) { return WeylOp{n, dim, 0, 0, 0}; }

    /// X^a Z^b on one site, identity elsewhere.
    static WeylOp single_site(int n, int dim, int site, int a, int b);

    /// Number of sites with a non-identity factor.
    int weight() const;

    bool is_identity_op() const { return x == 0 && z == 0; }

    /// omega exponent of the global phase; throws if the zeta exponent is odd.
    int omega_exponent() const;

    bool operator==(const WeylOp& o) const = default;

    /// Display name: "I", "X@2", "Y@0", "Z@4", or "X^aZ^b@site" for qudits
    /// and multi-site products like "X@0.Z@3".
    std::string name() const;
};

/// Composition: first apply `right`, then `left`.
/// X^{x1}Z^{z1} X^{x2}Z^{z2} = omega^{z1.x2} X^{x1+x2} Z^{z1+z2}.
WeylOp compose(const WeylOp& left, const WeylOp& right);

WeylOp adjoint(const WeylOp& op);

}  // namespace scq

#endif
