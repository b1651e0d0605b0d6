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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "scq/bounds.hpp"

using scq::BigUInt;
using scq::Rational;

TEST_CASE("rains_bound frozen values") {
    auto b5 = scq::rains_bound(5);
    CHECK(b5.exact == Rational(6));
    CHECK(b5.floor_value == 6);

    auto b7 = scq::rains_bound(7);
    CHECK(b7.exact == Rational(80, 3));
    CHECK(b7.floor_value == 26);

    auto b11 = scq::rains_bound(11);
    CHECK(b11.exact == Rational(2304, 5));
    CHECK(b11.floor_value == 460);

    CHECK(scq::rains_bound(3).floor_value == 1);
    CHECK_THROWS_AS(scq::rains_bound(6), std::invalid_argument);
    CHECK_THROWS_AS(scq::rains_bound(1), std::invalid_argument);
}

TEST_CASE("additive_best frozen values") {
    CHECK(scq::additive_best(5) == 4);
    CHECK(scq::additive_best(7) == 16);
    CHECK(scq::additive_best(11) == 256);
    CHECK(scq::additive_best(6) == 16);
    CHECK_THROWS_AS(scq::additive_best(2), std::invalid_argument);
}

TEST_CASE("rains_family_size frozen values") {
    CHECK(scq::rains_family_size(5) == 6);
    CHECK(scq::rains_family_size(9) == 96);
    CHECK(scq::rains_family_size(11) == 384);
    CHECK_THROWS_AS(scq::rains_family_size(4), std::invalid_argument);
}

TEST_CASE("crossover_table frozen rows up to n = 13") {
    auto rows = scq::crossover_table(13);
    REQUIRE(rows.size() == 5);
    struct Want {
        int n;
        long m;
        const char* winner;
    };
    const Want want[] = {{5, 5, "prior"},
                         {7, 22, "prior"},
                         {9, 93, "prior"},
                         {11, 386, "family"},
                         {13, 1586, "family"}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == want[i].n);
        CHECK(rows[i].m == want[i].m);
        CHECK(rows[i].winner == std::string(want[i].winner));
    }
    CHECK(rows[0].rains_floor == 6);
    CHECK(rows[1].rains_floor == 26);
    CHECK(rows[4].rains_floor == 1877);
    CHECK_THROWS_AS(scq::crossover_table(4), std::invalid_argument);
}

TEST_CASE("table invariants hold out to n = 201") {
    for (const auto& row : scq::crossover_table(201)) {
        CAPTURE(row.n);
        CHECK(row.m <= row.rains_floor);
        CHECK(row.m > row.additive);
        std::string expected = row.m > row.rains_family
                                   ? "family"
                                   : (row.m < row.rains_family ? "prior" : "tie");
        CHECK(row.winner == expected);
        if (row.n <= 9) CHECK(row.winner == "prior");
        if (row.n >= 11) CHECK(row.winner == "family");
    }
}

TEST_CASE("encoded_qubits matches exact and asymptotic counts") {
    auto e7 = scq::encoded_qubits(7);
    CHECK(e7.log2_m == doctest::Approx(std::log2(22.0)).epsilon(1e-12));

    auto e101 = scq::encoded_qubits(101);
    CHECK(std::abs(e101.log2_m - e101.approx) < 0.01);

    auto e3 = scq::encoded_qubits(3);
    CHECK(std::abs(e3.log2_m) < 1e-12);

    CHECK_THROWS_AS(scq::encoded_qubits(8), std::invalid_argument);
}

TEST_CASE("envelope gap approaches the square-root law") {
    auto ratio = scq::asymptotic_fraction(2001);
    double gap_exact = 1.0 - ratio.exact_value;
    double gap_approx = std::sqrt(2.0 / (3.14159265358979323846 * 2000.0));
    CHECK(std::abs(gap_exact - gap_approx) / gap_approx < 0.01);
}
