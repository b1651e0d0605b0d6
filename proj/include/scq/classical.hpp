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

#ifndef SCQ_CLASSICAL_HPP
#define SCQ_CLASSICAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scq/bitstring.hpp"
#include "scq/combinat.hpp"
#include "scq/params.hpp"

namespace scq {

/// A binary code with codewords kept in insertion order. For
/// self-complementary codes, generators holds one representative per
/// complement pair, in the order the pairs were first seen.
struct ClassicalCode {
    int n = 0;
    std::vector<Bits> words;
    std::vector<Bits> generators;
};

/// Generators of the family code for (k, l): all strings of weight 2i+l
/// for i = 0..k, ordered by weight then by canonical string order.
std::vector<Bits> build_generators(const CodeParams& params);

/// Generators together with their bitwise complements.
ClassicalCode full_code(const CodeParams& params);

/// Wrap an explicit word list (e.g. parsed from a file). Deduplicates
/// while preserving first-seen order and pairs complements into generators
/// when the code turns out to be self-complementary.
ClassicalCode code_from_words(int n, const std::vector<Bits>& words);

bool is_self_complementary(const ClassicalCode& code);

/// Minimum pairwise Hamming distance. Throws std::invalid_argument
/// ("undefined; K=1 degenerate code") when the code has fewer than 2 words.
int min_distance(const ClassicalCode& code);

struct AdmissibilityReport {
    bool admissible = false;
    bool self_complementary = false;
    std::optional<int> distance;  // unset for |code| < 2
    bool degenerate_pair = false; // the single complement pair {w, ~w}
    std::optional<std::pair<Bits, Bits>> distance_witness;
    std::string detail;
};

/// Precondition check for the quantum lift: self-complementary with
/// minimum distance > 1. The two-word code {w, ~w} is accepted and
/// flagged as degenerate.
AdmissibilityReport lift_admissible(const ClassicalCode& code);

}  // namespace scq

#endif
