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

#include "scq/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace scq {

WeylOp WeylOp::single_site(int n, int dim, int site, int a, int b) {
    if (site < 0 || site >= n) throw std::invalid_argument("site out of range");
    check_label_size(n, dim);
    Label p = pow_u64(static_cast<std::uint64_t>(dim), n - 1 - site);
    WeylOp op{n, dim, 0, 0, 0};
    op.x = static_cast<Label>(((a % dim) + dim) % dim) * p;
    op.z = static_cast<Label>(((b % dim) + dim) % dim) * p;
    return op;
}

int WeylOp::weight() const {
    int w = 0;
    for (int i = 0; i < n; ++i)
        if (label_digit(x, i, n, dim) != 0 || label_digit(z, i, n, dim) != 0) ++w;
    return w;
}

int WeylOp::omega_exponent() const {
    int p = ((phase % (2 * dim)) + 2 * dim) % (2 * dim);
    if (p % 2 != 0) throw std::logic_error("odd zeta exponent has no exact omega form");
    return (p / 2) % dim;
}

std::string WeylOp::name() const {
    if (is_identity_op()) return "I";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        int a = label_digit(x, i, n, dim);
        int b = label_digit(z, i, n, dim);
        if (a == 0 && b == 0) continue;
        if (!first) os << ".";
        first = false;
        if (dim == 2) {
            os << (a && b ? "Y" : (a ? "X" : "Z"));
        } else {
            if (a) os << "X" << (a > 1 ? "^" + std::to_string(a) : "");
            if (b) os << "Z" << (b > 1 ? "^" + std::to_string(b) : "");
        }
        os << "@" << i;
    }
    return os.str();
}

WeylOp compose(const WeylOp& left, const WeylOp& right) {
    if (left.n != right.n || left.dim != right.dim)
        throw std::invalid_argument("WeylOp dimension mismatch");
    WeylOp out{left.n, left.dim, 0, 0, 0};
    out.x = label_add(left.x, right.x, left.n, left.dim);
    out.z = label_add(left.z, right.z, left.n, left.dim);
    int cross = label_dot(left.z, right.x, left.n, left.dim);
    out.phase = ((left.phase + right.phase + 2 * cross) % (2 * left.dim) + 2 * left.dim) %
                (2 * left.dim);
    return out;
}

WeylOp adjoint(const WeylOp& op) {
    WeylOp out{op.n, op.dim, 0, 0, 0};
    out.x = label_negate(op.x, op.n, op.dim);
    out.z = label_negate(op.z, op.n, op.dim);
    int cross = label_dot(op.z, op.x, op.n, op.dim);
    out.phase = ((-op.phase + 2 * cross) % (2 * op.dim) + 2 * op.dim) % (2 * op.dim);
    return out;
}

}  // namespace scq
