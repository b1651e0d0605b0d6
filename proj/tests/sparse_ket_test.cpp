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
#include "scq/sparse_ket.hpp"

using scq::CycInt;
using scq::SparseKet;
using scq::WeylOp;

namespace {

SparseKet random_ket(scq::DetRng& rng, int n, int dim, int terms) {
    SparseKet ket = SparseKet::zero(n, dim);
    auto size = static_cast<std::uint64_t>(scq_test::dense_size(n, dim));
    for (int t = 0; t < terms; ++t) {
        auto c = static_cast<std::int64_t>(rng.below(5)) - 2;
        ket.add_term(rng.below(size),
                     CycInt::omega_pow(dim, static_cast<int>(rng.below(
                                                static_cast<std::uint64_t>(dim))),
                                       c));
    }
    ket.canonicalize();
    return ket;
}

}  // namespace

TEST_CASE("canonicalize sorts, merges, and drops cancellations") {
    SparseKet ket = SparseKet::zero(3, 2);
    ket.add_term(5, CycInt::integer(2, 2));
    ket.add_term(1, CycInt::integer(2, 1));
    ket.add_term(5, CycInt::integer(2, -2));
    ket.add_term(3, CycInt::integer(2, 4));
    ket.canonicalize();
    REQUIRE(ket.terms.size() == 2);
    CHECK(ket.terms[0].first == 1);
    CHECK(ket.terms[1].first == 3);
    CHECK(ket.amplitude(3)->as_int_d2() == 4);
    CHECK(ket.amplitude(5) == nullptr);
}

TEST_CASE("addition, subtraction, and scaling stay exact") {
    SparseKet a = SparseKet::zero(3, 2);
    a.add_term(4, CycInt::integer(2, 1));
    a.add_term(3, CycInt::integer(2, 1));
    a.canonicalize();
    SparseKet b = a.scaled(CycInt::integer(2, -1));
    CHECK((a + b).terms.empty());
    CHECK(a - a == SparseKet::zero(3, 2));
    CHECK(a == a);
    CHECK_FALSE(a == b);
    CHECK_THROWS_AS(a + SparseKet::zero(4, 2), std::invalid_argument);
}

TEST_CASE("inner products of lifted kets") {
    SparseKet a = SparseKet::zero(5, 2);
    a.add_term(16, CycInt::integer(2, 1));
    a.add_term(15, CycInt::integer(2, 1));
    a.canonicalize();
    CHECK(scq::inner(a, a).as_int_d2() == 2);

    SparseKet b = SparseKet::zero(5, 2);
    b.add_term(8, CycInt::integer(2, 1));
    b.add_term(23, CycInt::integer(2, 1));
    b.canonicalize();
    CHECK(scq::inner(a, b).as_int_d2() == 0);
}

TEST_CASE("inner conjugates the left argument") {
    SparseKet a = SparseKet::zero(1, 3);
    a.add_term(0, CycInt::omega_pow(3, 1));
    a.add_term(1, CycInt::integer(3, 1));
    a.canonicalize();
    SparseKet b = SparseKet::zero(1, 3);
    b.add_term(0, CycInt::integer(3, 1));
    b.add_term(1, CycInt::omega_pow(3, 2));
    b.canonicalize();
    CHECK(scq::inner(a, a) == CycInt::integer(3, 2));
    CHECK(scq::inner(a, b) == scq::inner(b, a).conj());
    CHECK(scq::inner(a, b) == CycInt::omega_pow(3, 2, 2));
}

TEST_CASE("apply_weyl matches the dense matrix model") {
    scq::DetRng rng(31337);
    for (int dim : {2, 3}) {
        for (int iter = 0; iter < 30; ++iter) {
            SparseKet ket = random_ket(rng, 2, dim, 3);
            auto size = static_cast<std::uint64_t>(scq_test::dense_size(2, dim));
            WeylOp op{2, dim, rng.below(size), rng.below(size),
                      2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)))};
            SparseKet image = scq::apply_weyl(op, ket);
            Eigen::VectorXcd lhs = scq_test::dense_ket(image);
            Eigen::VectorXcd rhs = scq_test::dense_weyl(op) * scq_test::dense_ket(ket);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
            CHECK(image.terms.size() == ket.terms.size());
        }
    }
}

TEST_CASE("apply_weyl on a lifted ket flips signs per the phase word") {
    SparseKet ket = SparseKet::zero(5, 2);
    ket.add_term(16, CycInt::integer(2, 1));
    ket.add_term(15, CycInt::integer(2, 1));
    ket.canonicalize();
    WeylOp z0 = WeylOp::single_site(5, 2, 0, 0, 1);
    SparseKet image = scq::apply_weyl(z0, ket);
    CHECK(image.amplitude(16)->as_int_d2() == -1);
    CHECK(image.amplitude(15)->as_int_d2() == 1);
    CHECK_THROWS_AS(scq::apply_weyl(WeylOp::identity(4, 2), ket),
                    std::invalid_argument);
}

TEST_CASE("display forms") {
    CHECK(SparseKet::zero(3, 2).to_string() == "0");

    SparseKet a = SparseKet::zero(3, 2);
    a.add_term(4, CycInt::integer(2, 1));
    a.add_term(3, CycInt::integer(2, 1));
    a.canonicalize();
    CHECK(a.to_string() == "|011> + |100>");

    SparseKet b = SparseKet::zero(3, 2);
    b.add_term(3, CycInt::integer(2, -1));
    b.add_term(4, CycInt::integer(2, 1));
    b.canonicalize();
    CHECK(b.to_string() == "-|011> + |100>");

    SparseKet c = SparseKet::zero(3, 2);
    c.add_term(3, CycInt::integer(2, 1));
    c.add_term(4, CycInt::integer(2, -2));
    c.canonicalize();
    CHECK(c.to_string() == "|011> + -2*|100>");

    SparseKet d = SparseKet::zero(2, 3);
    d.add_term(1, CycInt::omega_pow(3, 1));
    d.canonicalize();
    CHECK(d.to_string() == "(0,1,0)*|01>");
}
