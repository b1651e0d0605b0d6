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

#include <complex>
#include <stdexcept>
#include <vector>

#include "dense_oracle.hpp"
#include "scq/lift.hpp"
#include "scq/verifier.hpp"

using scq::CodeParams;
using scq::CycInt;
using scq::QuantumCodeBasis;
using scq::SparseKet;
using scq::WeylOp;

TEST_CASE("weight_one_ops enumerates every single-site operator once") {
    auto qubit5 = scq::weight_one_ops(5, 2);
    REQUIRE(qubit5.size() == 15);
    CHECK(qubit5[0].name() == "Z@0");
    CHECK(qubit5[1].name() == "X@0");
    CHECK(qubit5[2].name() == "Y@0");
    for (const auto& op : qubit5) CHECK(op.weight() == 1);

    auto qubit2 = scq::weight_one_ops(2, 2);
    REQUIRE(qubit2.size() == 6);
    CHECK(qubit2[3].name() == "Z@1");
    CHECK(qubit2[4].name() == "X@1");
    CHECK(qubit2[5].name() == "Y@1");

    CHECK(scq::weight_one_ops(1, 2).size() == 3);
    CHECK(scq::weight_one_ops(5, 3).size() == 40);
}

TEST_CASE("kl_matrix of the identity is the Gram matrix D * I") {
    for (int dim : {2, 3}) {
        auto basis = scq::lift_family(CodeParams::from_kl(0, 1, dim));
        auto gram = scq::kl_matrix(basis, WeylOp::identity(5, dim));
        REQUIRE(gram.size() == 5);
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                CycInt want = a == b ? CycInt::integer(dim, dim) : CycInt(dim);
                CHECK(gram[a][b] == want);
            }
        }
    }
}

TEST_CASE("kl_matrix vanishes for single-site errors on the family code") {
    auto basis = scq::lift_family(CodeParams::from_kl(0, 1));
    for (const WeylOp& op : {WeylOp::single_site(5, 2, 2, 0, 1),
                             WeylOp::single_site(5, 2, 0, 1, 0)}) {
        auto m = scq::kl_matrix(basis, op);
        for (const auto& row : m) {
            for (const auto& e : row) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("kl_matrix exposes an off-diagonal element for a distance-1 basis") {
    // |00000>+|11111> and |10000>+|01111> are exchanged by X on site 0.
    auto bad = scq::lift_qudit({0, 16}, 5, 2);
    auto m = scq::kl_matrix(bad, WeylOp::single_site(5, 2, 0, 1, 0));
    CHECK(m[0][1] == CycInt::integer(2, 2));

    auto report = scq::verify_distance2(bad);
    CHECK_FALSE(report.pass);
    // The defect is off-diagonal, so the diagonal scalars still vanish.
    CHECK(report.all_scalars_zero);
    CHECK(report.gram_ok);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations[0].op == "X@0");
}

TEST_CASE("verify_distance2 passes the qubit family") {
    struct Row {
        int k, l;
    };
    for (Row row : {Row{0, 0}, Row{0, 1}, Row{1, 0}}) {
        auto basis = scq::lift_family(CodeParams::from_kl(row.k, row.l));
        auto report = scq::verify_distance2(basis);
        CAPTURE(row.k);
        CAPTURE(row.l);
        CHECK(report.pass);
        CHECK(report.gram_ok);
        CHECK(report.gram_is_dim);
        CHECK(report.all_scalars_zero);
        CHECK(report.num_errors == 3 * basis.n);
        CHECK(report.violations.empty());
        CHECK(report.size == basis.size());
    }
}

TEST_CASE("verify_distance2 passes the qutrit lift") {
    auto basis = scq::lift_family(CodeParams::from_kl(0, 1, 3));
    auto report = scq::verify_distance2(basis);
    CHECK(report.pass);
    CHECK(report.gram_is_dim);
    CHECK(report.all_scalars_zero);
    CHECK(report.num_errors == 40);
}

TEST_CASE("verify_distance2 rejects a perturbed family basis") {
    auto basis = scq::lift_family(CodeParams::from_kl(0, 1));
    SparseKet broken = SparseKet::zero(5, 2);
    broken.add_term(1, CycInt::integer(2, 1));
    broken.add_term(3, CycInt::integer(2, 1));
    basis.kets[4] = broken;
    auto report = scq::verify_distance2(basis);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.violations.empty());
}

TEST_CASE("kl_matrix agrees with a dense float oracle at n = 5") {
    auto basis = scq::lift_family(CodeParams::from_kl(0, 1));
    std::vector<Eigen::VectorXcd> dense;
    for (const auto& ket : basis.kets) dense.push_back(scq_test::dense_ket(ket));

    auto ops = scq::weight_one_ops(5, 2);
    ops.push_back(WeylOp::identity(5, 2));
    for (const auto& op : ops) {
        auto exact = scq::kl_matrix(basis, op);
        Eigen::MatrixXcd e = scq_test::dense_weyl(op);
        for (int a = 0; a < basis.size(); ++a) {
            for (int b = 0; b < basis.size(); ++b) {
                std::complex<double> want = dense[a].dot(e * dense[b]);
                CHECK(std::abs(exact[a][b].to_complex() - want) < 1e-9);
            }
        }
    }
}

TEST_CASE("error_span_rank counts the code plus its error images") {
    CHECK(scq::error_span_rank(scq::lift_family(CodeParams::from_kl(0, 1))) == 32);
    CHECK(scq::error_span_rank(scq::lift_qudit({0}, 3, 2)) == 8);

    QuantumCodeBasis empty;
    empty.n = 3;
    empty.dim = 2;
    CHECK(scq::error_span_rank(empty) == 0);

    auto qutrit = scq::lift_family(CodeParams::from_kl(0, 1, 3));
    CHECK_THROWS_AS(scq::error_span_rank(qutrit), std::invalid_argument);

    QuantumCodeBasis wide;
    wide.n = 15;
    wide.dim = 2;
    CHECK_THROWS_AS(scq::error_span_rank(wide), std::length_error);
}
