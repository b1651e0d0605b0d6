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

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "scq/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ParamArgs {
    int n = 0;
    int k = -1;
    int l = -1;
    int dim = 2;
};

// --n wins when given; otherwise --k/--l. l = ((n-3)/2) mod 2, k = (n-3-2l)/4.
scq::CodeParams resolve_params(const ParamArgs& args) {
    if (args.n > 0) {
        auto params = scq::CodeParams::from_n(args.n, args.dim);
        if (!params) {
            throw CLI::ValidationError("--n must be odd and >= 3");
        }
        if ((args.k >= 0 && args.k != params->k) || (args.l >= 0 && args.l != params->l)) {
            throw CLI::ValidationError("--n disagrees with --k/--l");
        }
        return *params;
    }
    if (args.k < 0 || args.l < 0) {
        throw CLI::ValidationError("give --n, or both --k and --l");
    }
    return scq::CodeParams::from_kl(args.k, args.l, args.dim);
}

void add_param_flags(CLI::App* cmd, ParamArgs& args, bool with_dim = true) {
    cmd->add_option("--n", args.n, "total sites (odd, >= 3)");
    cmd->add_option("--k", args.k, "weight-class count parameter (k >= 0)");
    cmd->add_option("--l", args.l, "weight-class offset (0 or 1)");
    if (with_dim) cmd->add_option("--dim", args.dim, "local dimension D (default 2)");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

void emit(const scq::Json& report) { std::cout << report.dump(2) << '\n'; }

std::vector<scq::Bits> read_word_file(const std::string& path, int& n_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<scq::Bits> words;
    std::string line;
    n_out = 0;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) continue;
        auto bits = scq::bits_from_string(line);
        if (!bits) throw std::runtime_error("bad codeword line: " + line);
        if (n_out == 0) {
            n_out = static_cast<int>(line.size());
        } else if (n_out != static_cast<int>(line.size())) {
            throw std::runtime_error("codeword lengths differ");
        }
        words.push_back(*bits);
    }
    if (words.empty()) throw std::runtime_error("no codewords in " + path);
    return words;
}

int cmd_construct(const ParamArgs& args, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    scq::CodeParams params = resolve_params(args);
    scq::ClassicalCode code = scq::full_code(params);
    scq::QuantumCodeBasis basis = scq::lift_family(params);

    if (as_json) {
        scq::Json payload;
        scq::Json words = scq::Json::array();
        for (scq::Bits w : code.words) words.push_back(scq::bits_to_string(w, code.n));
        scq::Json kets = scq::Json::array();
        for (scq::Bits g : basis.generators) {
            kets.push_back(scq::ket_display(g, basis.n, basis.dim));
        }
        payload["classical"] = words;
        payload["kets"] = kets;
        payload["size"] = scq::codespace_size(params).get_str();
        emit(scq::run_report("construct", scq::params_json(params), payload, true,
                             elapsed_ms(start)));
        return kExitPass;
    }
    for (scq::Bits w : code.words) std::cout << scq::bits_to_string(w, code.n) << '\n';
    std::cout << '\n';
    for (scq::Bits g : basis.generators) {
        std::cout << scq::ket_display(g, basis.n, basis.dim) << '\n';
    }
    return kExitPass;
}

int cmd_verify(const ParamArgs& args, const std::string& input) {
    auto start = std::chrono::steady_clock::now();
    scq::Json parameters;
    scq::AdmissibilityReport adm;
    std::optional<scq::QuantumCodeBasis> basis;

    if (!input.empty()) {
        if (args.dim != 2) {
            throw CLI::ValidationError("--input files are binary; requires D = 2");
        }
        int n = 0;
        std::vector<scq::Bits> words = read_word_file(input, n);
        scq::ClassicalCode code = scq::code_from_words(n, words);
        adm = scq::lift_admissible(code);
        parameters = scq::Json{{"input", input}, {"n", n}, {"dim", 2}};
        if (adm.admissible) basis = scq::lift_qubit(code);
    } else {
        scq::CodeParams params = resolve_params(args);
        scq::ClassicalCode code = scq::full_code(params);
        adm = scq::lift_admissible(code);
        parameters = scq::params_json(params);
        basis = scq::lift_family(params);
    }

    scq::Json payload;
    payload["classical"] = scq::admissibility_json(adm);
    bool pass = adm.admissible;
    if (basis) {
        scq::KLReport kl = scq::verify_distance2(*basis);
        payload["knill_laflamme"] = scq::kl_json(kl);
        payload["size"] = basis->size();
        pass = pass && kl.pass;
    }
    emit(scq::run_report("verify", std::move(parameters), payload, pass,
                         elapsed_ms(start)));
    return pass ? kExitPass : kExitFail;
}

int cmd_projector(const ParamArgs& args, bool audit) {
    auto start = std::chrono::steady_clock::now();
    scq::CodeParams params = resolve_params(args);
    if (params.dim != 2) throw CLI::ValidationError("projector form requires D = 2");
    scq::ProjectorCheck check = scq::projector_selfcheck(params);
    scq::Json payload;
    payload["selfcheck"] = scq::projector_json(check);
    if (audit) payload["audit"] = scq::audit_json(scq::audit_coefficients(params));
    emit(scq::run_report("projector", scq::params_json(params), payload, check.pass,
                         elapsed_ms(start)));
    return check.pass ? kExitPass : kExitFail;
}

int cmd_automorph(const ParamArgs& args, int perm_samples, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    scq::CodeParams params = resolve_params(args);
    if (params.dim != 2) throw CLI::ValidationError("automorphism family requires D = 2");
    scq::ParityLawReport parity = scq::verify_parity_law(params, perm_samples, seed);
    scq::Json payload;
    payload["parity_law"] = scq::parity_json(parity);
    bool pass = parity.law_holds;
    if (params.n() <= 7) {
        scq::CounterexampleReport suite = scq::counterexample_suite(params);
        payload["counterexamples"] = scq::counterexample_json(suite);
        pass = pass && suite.all_fail;
    }
    scq::Json parameters = scq::params_json(params);
    parameters["perm_samples"] = perm_samples;
    parameters["seed"] = seed;
    emit(scq::run_report("automorph", std::move(parameters), payload, pass,
                         elapsed_ms(start)));
    return pass ? kExitPass : kExitFail;
}

int cmd_bounds(int max_n, bool as_csv) {
    auto start = std::chrono::steady_clock::now();
    std::vector<scq::BoundsRow> rows = scq::crossover_table(max_n);
    bool pass = true;
    for (const auto& row : rows) {
        if (row.m > row.rains_floor) pass = false;
        if (row.m <= row.additive) pass = false;
        bool family_side = row.n >= 11;
        if (family_side != (row.winner == "family")) pass = false;
    }
    if (as_csv) {
        std::cout << scq::bounds_csv(rows);
        return pass ? kExitPass : kExitFail;
    }
    scq::Json parameters{{"max_n", max_n}};
    emit(scq::run_report("bounds", std::move(parameters), scq::bounds_json(rows), pass,
                         elapsed_ms(start)));
    return pass ? kExitPass : kExitFail;
}

int cmd_simulate(const ParamArgs& args, int trials, std::uint64_t seed, int site) {
    auto start = std::chrono::steady_clock::now();
    scq::CodeParams params = resolve_params(args);
    if (params.dim != 2) throw CLI::ValidationError("simulation requires D = 2");
    scq::FidelityReport rep = scq::fidelity_experiment(params, trials, seed, site);
    scq::Json parameters = scq::params_json(params);
    parameters["trials"] = trials;
    parameters["seed"] = seed;
    parameters["site"] = site;
    emit(scq::run_report("simulate", std::move(parameters), scq::fidelity_json(rep),
                         rep.pass, elapsed_ms(start)));
    return rep.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification workbench for a family of "
                 "nonadditive distance-2 codes"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "parallelism cap (accepted for compatibility)");

    ParamArgs construct_args;
    bool construct_json = false;
    CLI::App* construct = app.add_subcommand("construct", "emit codewords and kets");
    add_param_flags(construct, construct_args);
    construct->add_flag("--json", construct_json, "JSON instead of plain text");

    ParamArgs verify_args;
    std::string verify_input;
    CLI::App* verify = app.add_subcommand("verify", "check the correctability conditions");
    add_param_flags(verify, verify_args);
    verify->add_option("--input", verify_input, "file of binary codewords to lift");

    ParamArgs projector_args;
    bool projector_audit = false;
    CLI::App* projector = app.add_subcommand("projector", "build and check the projector");
    add_param_flags(projector, projector_args, false);
    projector->add_flag("--audit", projector_audit, "include the coefficient audit table");

    ParamArgs automorph_args;
    int perm_samples = 10;
    std::uint64_t automorph_seed = 0;
    CLI::App* automorph = app.add_subcommand("automorph", "sweep the symmetry family");
    add_param_flags(automorph, automorph_args, false);
    automorph->add_option("--perm-samples", perm_samples, "random permutations to add");
    automorph->add_option("--seed", automorph_seed, "permutation sampling seed");

    int max_n = 25;
    bool bounds_csv_flag = false;
    CLI::App* bounds = app.add_subcommand("bounds", "dimension benchmark table");
    bounds->add_option("--max-n", max_n, "largest odd n in the table");
    bounds->add_flag("--csv", bounds_csv_flag, "CSV instead of JSON");

    ParamArgs simulate_args;
    int trials = 25;
    std::uint64_t simulate_seed = 0;
    int site = -1;
    CLI::App* simulate = app.add_subcommand("simulate", "erasure-recovery experiment");
    add_param_flags(simulate, simulate_args, false);
    simulate->add_option("--trials", trials, "random logical states per site");
    simulate->add_option("--seed", simulate_seed, "state sampling seed");
    simulate->add_option("--site", site, "erase only this site (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(construct_args, construct_json);
        if (verify->parsed()) return cmd_verify(verify_args, verify_input);
        if (projector->parsed()) return cmd_projector(projector_args, projector_audit);
        if (automorph->parsed()) {
            return cmd_automorph(automorph_args, perm_samples, automorph_seed);
        }
        if (bounds->parsed()) return cmd_bounds(max_n, bounds_csv_flag);
        if (simulate->parsed()) return cmd_simulate(simulate_args, trials, simulate_seed, site);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
