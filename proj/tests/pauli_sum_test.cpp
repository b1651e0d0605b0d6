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
#include <map>
#include <stdexcept>

#include "dense_oracle.hpp"
#include "scq/pauli_sum.hpp"
#include "scq/rng.hpp"

using scq::Bits;
using scq::CycInt;
using scq::PauliSum;
using scq::Rational;
using scq::SparseKet;

namespace {

PauliSum random_sum(scq::DetRng& rng, int n) {
    PauliSum sum(n);
    int terms = 1 + static_cast<int>(rng.below(6));
    Bits mask = scq::bits_mask(n);
    for (int t = 0; t < terms; ++t) {
        long num = static_cast<long>(rng.below(7)) - 3;
        long den = 1 + static_cast<long>(rng.below(4));
        Rational coeff(num, den);
        coeff.canonicalize();
        sum.add_term(rng.below(mask + 1), rng.below(mask + 1), coeff);
    }
    return sum;
}

void check_close(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
}

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(PauliSum(0), std::invalid_argument);
    CHECK_THROWS_AS(PauliSum(64), std::invalid_argument);
    PauliSum sum(2);
    CHECK_THROWS_AS(sum.add_term(4, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sum.add_term(0, 5, Rational(1)), std::invalid_argument);
}

TEST_CASE("add_term accumulates and cancels") {
    PauliSum sum(3);
    sum.add_term(1, 2, Rational(1, 2));
    sum.add_term(1, 2, Rational(1, 3));
    CHECK(sum.coefficient(1, 2) == Rational(5, 6));
    CHECK(sum.term_count() == 1);
    sum.add_term(1, 2, Rational(-5, 6));
    CHECK(sum.term_count() == 0);
    CHECK(sum.coefficient(1, 2) == Rational(0));
}

TEST_CASE("Z X picks up the reordering sign, X Z does not") {
    PauliSum x(1), z(1);
    x.add_term(1, 0, Rational(1));
    z.add_term(0, 1, Rational(1));
    CHECK((z * x).coefficient(1, 1) == Rational(-1));
    CHECK((x * z).coefficient(1, 1) == Rational(1));
    CHECK((x * x).coefficient(0, 0) == Rational(1));
}

TEST_CASE("adjoint flips terms with overlapping X and Z parts") {
    PauliSum sum(1);
    sum.add_term(1, 1, Rational(1));
    sum.add_term(1, 0, Rational(2));
    PauliSum adj = sum.adjoint();
    CHECK(adj.coefficient(1, 1) == Rational(-1));
    CHECK(adj.coefficient(1, 0) == Rational(2));
}

TEST_CASE("trace sees only the identity word") {
    PauliSum sum(4);
    sum.add_term(0, 0, Rational(3, 8));
    sum.add_term(5, 2, Rational(7));
    CHECK(sum.trace() == Rational(6));
    CHECK(PauliSum(4).trace() == Rational(0));
}

TEST_CASE("equality compares canonical term maps") {
    PauliSum a(2), b(2);
    a.add_term(1, 1, Rational(1));
    b.add_term(1, 1, Rational(1));
    CHECK(a == b);
    b.add_term(2, 0, Rational(1, 2));
    CHECK(a != b);
}

TEST_CASE("ring operations agree with a dense float oracle") {
    scq::DetRng rng(60601);
    for (int n : {2, 3}) {
        for (int iter = 0; iter < 12; ++iter) {
            PauliSum a = random_sum(rng, n);
            PauliSum b = random_sum(rng, n);
            Eigen::MatrixXcd da = scq_test::dense_pauli(a);
            Eigen::MatrixXcd db = scq_test::dense_pauli(b);
            check_close(scq_test::dense_pauli(a * b), da * db);
            check_close(scq_test::dense_pauli(a + b), da + db);
            check_close(scq_test::dense_pauli(a - b), da - db);
            check_close(scq_test::dense_pauli(a.adjoint()), da.adjoint());
            CHECK(std::abs(a.trace().get_d() - da.trace().real()) < 1e-9);
        }
    }
}

TEST_CASE("apply_pauli_sum matches the dense matrix-vector product") {
    scq::DetRng rng(424243);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 3;
        PauliSum sum = random_sum(rng, n);
        SparseKet ket = SparseKet::zero(n, 2);
        ket.add_term(rng.below(8), CycInt::integer(2, 1));
        ket.add_term(rng.below(8), CycInt::integer(2, -1));
        ket.canonicalize();

        std::map<Bits, Rational> image = scq::apply_pauli_sum(sum, ket);
        Eigen::VectorXcd want = scq_test::dense_pauli(sum) * scq_test::dense_ket(ket);
        Eigen::VectorXcd got = Eigen::VectorXcd::Zero(8);
        for (const auto& [label, coeff] : image) {
            got(static_cast<Eigen::Index>(label)) = coeff.get_d();
        }
        CHECK((want - got).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("apply_pauli_sum guards its inputs") {
    PauliSum sum(3);
    sum.add_term(0, 0, Rational(1));
    CHECK_THROWS_AS(scq::apply_pauli_sum(sum, SparseKet::zero(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(scq::apply_pauli_sum(sum, SparseKet::zero(3, 3)),
                    std::invalid_argument);
}
