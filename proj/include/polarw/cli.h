// Copyright 2026 The polarw Authors
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

#ifndef POLARW_CLI_H
#define POLARW_CLI_H

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "polarw/polar_geometry.h"

namespace polarw {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_FALSE = 1,
    EXIT_USAGE = 2,
};

using CheckValue = std::variant<uint64_t, bool>;

struct ReportCheck {
    std::string name;
    CheckValue expected;
    CheckValue actual;
    bool pass;
};

struct VerificationReport {
    size_t n_qubits;
    std::vector<ReportCheck> checks;
    bool overall() const;
};

/// Checks each closed-form count against enumeration at N <= 4. With `oracle`
/// (N <= 3) also sweeps every ordered operator pair through the matrix oracle.
VerificationReport verify_polar_space(size_t n_qubits, bool oracle, size_t threads = 1);

std::string report_text(const VerificationReport &report);

/// {"n": N, "kind": kind, "data": data}; keys serialize in sorted order.
nlohmann::json envelope(size_t n_qubits, const std::string &kind, nlohmann::json data);
nlohmann::json report_json(const VerificationReport &report);
/// One sorted array of Pauli words per generator.
nlohmann::json generators_json(size_t n_qubits, const std::vector<Subspace> &generators);
nlohmann::json spreads_json(size_t n_qubits, const std::vector<Spread> &spreads);
/// Adjacency list of the commuting graph: [{"vertex": w, "neighbors": [...]}, ...].
nlohmann::json graph_json(size_t n_qubits);
std::string graph_dot(size_t n_qubits);

/// Sorted Pauli words on a subspace's points.
std::vector<std::string> block_words(const Subspace &block);

/// Entry point for the polarw tool. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace polarw

#endif
