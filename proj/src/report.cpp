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

#include "scq/report.hpp"

#include <sstream>

namespace scq {

std::string ket_display(Bits generator, int n, int dim) {
    Label base = label_from_bits(generator, n, dim);
    std::string out;
    for (int c = 0; c < dim; ++c) {
        if (c) out += " + ";
        out += "|" + label_to_string(label_shift_all(base, c, n, dim), n, dim) + ">";
    }
    return out;
}

Json params_json(const CodeParams& params) {
    return Json{{"n", params.n()},
                {"k", params.k},
                {"l", params.l},
                {"dim", params.dim}};
}

Json admissibility_json(const AdmissibilityReport& rep) {
    Json j;
    j["admissible"] = rep.admissible;
    j["self_complementary"] = rep.self_complementary;
    if (rep.distance) {
        j["distance"] = *rep.distance;
    } else {
        j["distance"] = nullptr;
    }
    j["degenerate_pair"] = rep.degenerate_pair;
    j["detail"] = rep.detail;
    return j;
}

Json kl_json(const KLReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["dim"] = rep.dim;
    j["size"] = rep.size;
    j["num_errors"] = rep.num_errors;
    j["pass"] = rep.pass;
    j["gram_ok"] = rep.gram_ok;
    j["gram_is_dim"] = rep.gram_is_dim;
    j["all_scalars_zero"] = rep.all_scalars_zero;
    Json v = Json::array();
    for (const auto& violation : rep.violations) {
        v.push_back(Json{{"op", violation.op},
                         {"row", violation.row},
                         {"col", violation.col},
                         {"value", violation.value}});
    }
    j["violations"] = v;
    j["erasure_note"] = rep.erasure_note;
    return j;
}

Json projector_json(const ProjectorCheck& rep) {
    Json j;
    j["n"] = rep.n;
    j["idempotent"] = rep.idempotent;
    j["hermitian"] = rep.hermitian;
    j["trace_ok"] = rep.trace_ok;
    j["trace"] = rep.trace_value;
    j["fixes_code"] = rep.fixes_code;
    j["kills_images"] = rep.kills_images;
    j["support_ok"] = rep.support_ok;
    j["pass"] = rep.pass;
    j["witness"] = rep.witness;
    return j;
}

Json audit_json(const AuditTable& table) {
    Json j;
    j["n"] = table.n;
    j["k"] = table.k;
    j["l"] = table.l;
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        rows.push_back(Json{{"s", row.s},
                            {"i", row.i},
                            {"derived", row.derived.get_str()},
                            {"printed", row.printed.get_str()},
                            {"equal", row.equal}});
    }
    j["rows"] = rows;
    Json sums = Json::array();
    for (const auto& srow : table.sums) {
        sums.push_back(Json{{"s", srow.s},
                            {"derived_sum", srow.derived_sum.get_str()},
                            {"printed_sum", srow.printed_sum.get_str()},
                            {"equal", srow.equal}});
    }
    j["sums"] = sums;
    j["mismatches"] = table.mismatches;
    return j;
}

Json parity_json(const ParityLawReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    j["permutations"] = rep.permutations;
    j["candidates"] = rep.candidates;
    j["preserved"] = rep.preserved;
    j["law_holds"] = rep.law_holds;
    j["violations"] = rep.violations;
    j["scope_note"] = rep.scope_note;
    return j;
}

Json counterexample_json(const CounterexampleReport& rep) {
    Json j;
    j["n"] = rep.n;
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        rows.push_back(
            Json{{"name", row.name}, {"defect", row.defect}, {"fails", row.fails}});
    }
    j["rows"] = rows;
    j["all_fail"] = rep.all_fail;
    return j;
}

Json bounds_json(const std::vector<BoundsRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        arr.push_back(Json{{"n", row.n},
                           {"M", row.m.get_str()},
                           {"rains_bound", row.rains_exact.get_str()},
                           {"rains_bound_floor", row.rains_floor.get_str()},
                           {"additive", row.additive.get_str()},
                           {"rains_family", row.rains_family.get_str()},
                           {"winner", row.winner}});
    }
    return Json{{"rows", arr}};
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    out << "n,M,rains_bound_floor,additive,rains_family,winner\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.m.get_str() << ',' << row.rains_floor.get_str()
            << ',' << row.additive.get_str() << ',' << row.rains_family.get_str()
            << ',' << row.winner << '\n';
    }
    return out.str();
}

Json fidelity_json(const FidelityReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["size"] = rep.size;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["min_fidelity"] = rep.min_fidelity;
    j["mean_fidelity"] = rep.mean_fidelity;
    j["pass"] = rep.pass;
    Json res = Json::array();
    for (const auto& trial : rep.results) {
        res.push_back(Json{{"site", trial.site},
                           {"trial", trial.trial},
                           {"fidelity", trial.fidelity}});
    }
    j["results"] = res;
    return j;
}

Json run_report(const std::string& subcommand, Json parameters, Json payload,
                bool pass, double timing_ms) {
    Json j;
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = std::move(parameters);
    j["provenance"] = Json{
        {"ordering",
         "site 0 is the most significant digit; weight classes ascending, "
         "strings within a class by decreasing big-endian value"}};
    j["report"] = std::move(payload);
    j["pass"] = pass;
    j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace scq
