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

#include <doctest.h>

#include <stdexcept>

#include "dense_oracle.hpp"
#include "scq/rng.hpp"
#include "scq/weyl.hpp"

using scq::WeylOp;

TEST_CASE("single_site packs site 0 into the most significant digit") {
    WeylOp x0 = WeylOp::single_site(3, 2, 0, 1, 0);
    CHECK(x0.x == 4);
    CHECK(x0.z == 0);
    CHECK(x0.name() == "X@0");

    WeylOp z2 = WeylOp::single_site(3, 2, 2, 0, 1);
    CHECK(z2.z == 1);
    CHECK(z2.name() == "Z@2");

    WeylOp y1 = WeylOp::single_site(3, 2, 1, 1, 1);
    CHECK(y1.x == 2);
    CHECK(y1.z == 2);
    CHECK(y1.name() == "Y@1");

    WeylOp q = WeylOp::single_site(2, 3, 0, 2, 1);
    CHECK(q.x == 6);
    CHECK(q.z == 3);
    CHECK(q.name() == "X^2Z@0");

    CHECK(WeylOp::identity(4, 2).name() == "I");
    CHECK_THROWS_AS(WeylOp::single_site(3, 2, 3, 1, 0), std::invalid_argument);
}

TEST_CASE("weight counts non-identity sites") {
    CHECK(WeylOp::identity(5, 2).weight() == 0);
    CHECK(WeylOp::single_site(5, 2, 3, 1, 1).weight() == 1);
    WeylOp two = scq::compose(WeylOp::single_site(5, 2, 0, 1, 0),
                              WeylOp::single_site(5, 2, 3, 0, 1));
    CHECK(two.weight() == 2);
    CHECK(two.name() == "X@0.Z@3");
}

TEST_CASE("reordering X and Z on the same site costs one omega") {
    WeylOp x = WeylOp::single_site(1, 2, 0, 1, 0);
    WeylOp z = WeylOp::single_site(1, 2, 0, 0, 1);
    CHECK(scq::compose(x, z).omega_exponent() == 0);
    CHECK(scq::compose(z, x).omega_exponent() == 1);
    // Y^2 = XZXZ = -I under the phaseless Y convention.
    WeylOp y = WeylOp::single_site(1, 2, 0, 1, 1);
    WeylOp yy = scq::compose(y, y);
    CHECK(yy.is_identity_op());
    CHECK(yy.omega_exponent() == 1);
}

TEST_CASE("omega_exponent rejects the odd half of the phase group") {
    WeylOp op{1, 2, 0, 0, 1};
    CHECK_THROWS_AS(op.omega_exponent(), std::logic_error);
    CHECK(WeylOp{1, 2, 0, 0, 2}.omega_exponent() == 1);
}

TEST_CASE("composition and adjoint match the dense matrix model") {
    scq::DetRng rng(4242);
    for (int dim : {2, 3}) {
        for (int n : {1, 2}) {
            auto size = static_cast<std::uint64_t>(scq_test::dense_size(n, dim));
            for (int iter = 0; iter < 30; ++iter) {
                WeylOp a{n, dim, rng.below(size), rng.below(size),
                         static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(dim)))};
                WeylOp b{n, dim, rng.below(size), rng.below(size),
                         static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(dim)))};
                Eigen::MatrixXcd lhs = scq_test::dense_weyl(scq::compose(a, b));
                Eigen::MatrixXcd rhs = scq_test::dense_weyl(a) * scq_test::dense_weyl(b);
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
                Eigen::MatrixXcd adj = scq_test::dense_weyl(scq::adjoint(a));
                Eigen::MatrixXcd adj_oracle = scq_test::dense_weyl(a).adjoint();
                CHECK((adj - adj_oracle).cwiseAbs().maxCoeff() < 1e-9);
            }
        }
    }
}

TEST_CASE("adjoint inverts exactly") {
    scq::DetRng rng(77);
    for (int dim : {2, 3, 5}) {
        for (int iter = 0; iter < 20; ++iter) {
            auto size = static_cast<std::uint64_t>(scq_test::dense_size(2, dim));
            WeylOp op{2, dim, rng.below(size), rng.below(size),
                      2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)))};
            WeylOp prod = scq::compose(scq::adjoint(op), op);
            CHECK(prod.is_identity_op());
            CHECK(prod.omega_exponent() == 0);
        }
    }
}

TEST_CASE("mismatched shapes are rejected") {
    CHECK_THROWS_AS(scq::compose(WeylOp::identity(2, 2), WeylOp::identity(3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(scq::compose(WeylOp::identity(2, 2), WeylOp::identity(2, 3)),
                    std::invalid_argument);
}
