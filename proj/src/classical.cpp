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

#include "scq/classical.hpp"

#include <stdexcept>
#include <unordered_set>

namespace scq {

std::vector<Bits> build_generators(const CodeParams& params) {
    const int n = params.n();
    if (n > 63) throw std::invalid_argument("build_generators: n must be <= 63");
    std::vector<Bits> out;
    for (int i = 0; i <= params.k; ++i) {
        auto cls = weight_strings(n, 2 * i + params.l);
        out.insert(out.end(), cls.begin(), cls.end());
    }
    return out;
}

ClassicalCode full_code(const CodeParams& params) {
    ClassicalCode code;
    code.n = params.n();
    code.generators = build_generators(params);
    code.words = code.generators;
    code.words.reserve(2 * code.generators.size());
    for (Bits g : code.generators) code.words.push_back(bits_complement(g, code.n));
    return code;
}

ClassicalCode code_from_words(int n, const std::vector<Bits>& words) {
    ClassicalCode code;
    code.n = n;
    std::unordered_set<Bits> seen;
    for (Bits w : words)
        if (seen.insert(w).second) code.words.push_back(w);
    if (is_self_complementary(code)) {
        std::unordered_set<Bits> paired;
        for (Bits w : code.words) {
            if (paired.count(w)) continue;
            code.generators.push_back(w);
            paired.insert(w);
            paired.insert(bits_complement(w, n));
        }
    }
    return code;
}

bool is_self_complementary(const ClassicalCode& code) {
    std::unordered_set<Bits> set(code.words.begin(), code.words.end());
    for (Bits w : code.words)
        if (!set.count(bits_complement(w, code.n))) return false;
    return true;
}

int min_distance(const ClassicalCode& code) {
    if (code.words.size() < 2)
        throw std::invalid_argument("undefined; K=1 degenerate code");
    int best = code.n + 1;
    for (size_t i = 0; i < code.words.size(); ++i)
        for (size_t j = i + 1; j < code.words.size(); ++j)
            best = std::min(best, weight(code.words[i] ^ code.words[j]));
    return best;
}

AdmissibilityReport lift_admissible(const ClassicalCode& code) {
    AdmissibilityReport rep;
    rep.self_complementary = is_self_complementary(code);
    if (code.words.size() < 2) {
        rep.detail = "fewer than 2 codewords; nothing to pair";
        return rep;
    }
    int best = code.n + 1;
    for (size_t i = 0; i < code.words.size() && best > 1; ++i)
        for (size_t j = i + 1; j < code.words.size(); ++j) {
            int d = weight(code.words[i] ^ code.words[j]);
            if (d < best) {
                best = d;
                rep.distance_witness = {code.words[i], code.words[j]};
                if (best <= 1) break;
            }
        }
    rep.distance = best;
    rep.degenerate_pair = code.words.size() == 2;
    rep.admissible = rep.self_complementary && best >= 2;
    if (!rep.self_complementary)
        rep.detail = "not self-complementary";
    else if (best < 2)
        rep.detail = "minimum distance below 2";
    else if (rep.degenerate_pair)
        rep.detail = "degenerate single complement pair (one-dimensional lift)";
    else
        rep.detail = "self-complementary with distance >= 2";
    return rep;
}

}  // namespace scq
