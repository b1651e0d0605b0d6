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

#ifndef SCQ_REPORT_HPP
#define SCQ_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "scq/automorph.hpp"
#include "scq/bounds.hpp"
#include "scq/classical.hpp"
#include "scq/erasure.hpp"
#include "scq/projector.hpp"
#include "scq/verifier.hpp"

namespace scq {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Display form of one lifted ket, generator orbit order:
/// "|10000> + |01111>", qudit orbits with D terms.
std::string ket_display(Bits generator, int n, int dim);

Json params_json(const CodeParams& params);
Json admissibility_json(const AdmissibilityReport& rep);
Json kl_json(const KLReport& rep);
Json projector_json(const ProjectorCheck& rep);
Json audit_json(const AuditTable& table);
Json parity_json(const ParityLawReport& rep);
Json counterexample_json(const CounterexampleReport& rep);
Json bounds_json(const std::vector<BoundsRow>& rows);
std::string bounds_csv(const std::vector<BoundsRow>& rows);
Json fidelity_json(const FidelityReport& rep);

/// Wraps a subcommand payload in the common envelope. timing_ms is the one
/// field reports are allowed to differ in between identical runs.
Json run_report(const std::string& subcommand, Json parameters, Json payload,
                bool pass, double timing_ms);

}  // namespace scq

#endif
