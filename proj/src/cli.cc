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

#include "polarw/cli.h"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polarw/errors.h"
#include "polarw/pauli.h"

namespace polarw {

namespace {

constexpr size_t MAX_VERIFY_QUBITS = 4;
constexpr size_t MAX_VERIFY_ORACLE_QUBITS = 3;
constexpr size_t MAX_GRAPH_QUBITS = 3;

/// Raised for bad flag combinations and out-of-range arguments.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_qubits(size_t n, size_t cap, const std::string &what) {
    if (n == 0 || n > cap) {
        throw UsageError(what + " supports 1 <= N <= " + std::to_string(cap) + ", got N=" + std::to_string(n));
    }
}

std::string value_str(const CheckValue &v) {
    if (std::holds_alternative<bool>(v)) {
        return std::get<bool>(v) ? "true" : "false";
    }
    return std::to_string(std::get<uint64_t>(v));
}

nlohmann::json value_json(const CheckValue &v) {
    if (std::holds_alternative<bool>(v)) {
        return std::get<bool>(v);
    }
    return std::get<uint64_t>(v);
}

void add_count(VerificationReport &r, std::string name, uint64_t expected, uint64_t actual) {
    r.checks.push_back({std::move(name), expected, actual, expected == actual});
}

void add_flag(VerificationReport &r, std::string name, bool actual) {
    r.checks.push_back({std::move(name), true, actual, actual});
}

uint64_t first_mismatch(const std::vector<uint64_t> &values, uint64_t expected) {
    auto it = std::find_if(values.begin(), values.end(), [&](uint64_t v) {
        return v != expected;
    });
    return it == values.end() ? expected : *it;
}

void write_json(std::ostream &out, const nlohmann::json &doc) {
    out << doc.dump(2) << "\n";
}

std::string join(const std::vector<std::string> &words) {
    std::string line;
    for (size_t k = 0; k < words.size(); k++) {
        line += (k ? "," : "") + words[k];
    }
    return line;
}

std::vector<PauliOperator> sorted_operators(size_t n) {
    std::vector<PauliOperator> ops;
    for (const auto &v : all_points(n)) {
        ops.push_back(vector_to_pauli(v));
    }
    std::sort(ops.begin(), ops.end());
    return ops;
}

struct Options {
    std::string format;
    size_t threads = 1;

    size_t n = 0;
    bool oracle = false;
    std::string method = "desarguesian";
    bool all = false;
    std::optional<size_t> limit;
    std::string word1;
    std::string word2;
};

std::string format_or(const Options &o, const std::string &fallback, std::initializer_list<std::string> allowed) {
    std::string f = o.format.empty() ? fallback : o.format;
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
        std::string list;
        for (const auto &a : allowed) {
            list += (list.empty() ? "" : ", ") + a;
        }
        throw UsageError("unsupported format '" + f + "' (expected one of: " + list + ")");
    }
    return f;
}

int cmd_verify(const Options &o, std::ostream &out) {
    std::string format = format_or(o, "text", {"text", "json"});
    require_qubits(o.n, o.oracle ? MAX_VERIFY_ORACLE_QUBITS : MAX_VERIFY_QUBITS, o.oracle ? "verify --oracle" : "verify");
    auto report = verify_polar_space(o.n, o.oracle, o.threads);
    if (format == "json") {
        write_json(out, report_json(report));
    } else {
        out << report_text(report);
    }
    return report.overall() ? EXIT_OK : EXIT_FALSE;
}

int cmd_generators(const Options &o, std::ostream &out) {
    std::string format = format_or(o, "text", {"text", "json"});
    require_qubits(o.n, MAX_GENERATOR_QUBITS, "generators");
    auto generators = enumerate_generators(o.n);
    if (format == "json") {
        write_json(out, generators_json(o.n, generators));
        return EXIT_OK;
    }
    for (const auto &g : generators) {
        out << join(block_words(g)) << "\n";
    }
    return EXIT_OK;
}

int cmd_spread(const Options &o, std::ostream &out, std::ostream &err) {
    std::string format = format_or(o, "text", {"text", "json"});
    std::vector<Spread> spreads;
    if (o.method == "desarguesian") {
        if (o.all || o.limit) {
            throw UsageError("--all and --limit only apply to --method search");
        }
        require_qubits(o.n, MAX_DESARGUESIAN_QUBITS, "spread --method desarguesian");
        spreads.push_back(desarguesian_spread(o.n));
    } else {
        require_qubits(o.n, MAX_SPREAD_SEARCH_QUBITS, "spread --method search");
        if (o.all && o.limit) {
            throw UsageError("--all and --limit are mutually exclusive");
        }
        if (o.all && o.n > MAX_FULL_SPREAD_QUBITS) {
            throw UsageError("--all supports N <= " + std::to_string(MAX_FULL_SPREAD_QUBITS));
        }
        if (o.limit && *o.limit == 0) {
            throw UsageError("--limit must be at least 1");
        }
        std::optional<size_t> limit = o.all ? std::nullopt : std::optional<size_t>(o.limit.value_or(1));
        spreads = enumerate_spreads(o.n, limit, o.threads);
    }

    for (const auto &s : spreads) {
        if (auto problems = spread_violations(s); !problems.empty()) {
            err << "error: invalid spread produced: " << problems.front() << "\n";
            return EXIT_FALSE;
        }
    }

    if (format == "json") {
        write_json(out, spreads_json(o.n, spreads));
        return EXIT_OK;
    }
    for (size_t k = 0; k < spreads.size(); k++) {
        out << "# spread " << (k + 1) << "\n";
        for (const auto &block : spreads[k].blocks()) {
            out << join(block_words(block)) << "\n";
        }
    }
    out << "# spreads: " << spreads.size() << "\n";
    return EXIT_OK;
}

int cmd_graph(const Options &o, std::ostream &out) {
    std::string format = format_or(o, "dot", {"dot", "json"});
    require_qubits(o.n, MAX_GRAPH_QUBITS, "graph");
    if (format == "json") {
        write_json(out, graph_json(o.n));
    } else {
        out << graph_dot(o.n);
    }
    return EXIT_OK;
}

int cmd_commute(const Options &o, std::ostream &out) {
    format_or(o, "text", {"text"});
    PauliOperator p(o.word1);
    PauliOperator q(o.word2);
    if (p.n_qubits() != q.n_qubits()) {
        throw UsageError("words have different lengths: " + p.word() + " and " + q.word());
    }
    if (p.is_identity() || q.is_identity()) {
        throw UsageError("the identity word is not a point; pass non-identity operators");
    }
    if (o.oracle && p.n_qubits() > MAX_ORACLE_QUBITS) {
        throw UsageError("--oracle supports N <= " + std::to_string(MAX_ORACLE_QUBITS));
    }
    if (p.n_qubits() > MAX_QUBITS) {
        throw UsageError("words longer than " + std::to_string(MAX_QUBITS) + " letters are not supported");
    }

    bool symplectic = commutes(p, q);
    auto verdict = [](bool c) {
        return c ? "commute" : "anticommute";
    };
    if (!o.oracle) {
        out << verdict(symplectic) << "\n";
        return symplectic ? EXIT_OK : EXIT_FALSE;
    }
    bool matrix = commutes_matrix(p, q);
    out << "symplectic: " << verdict(symplectic) << "\n";
    out << "matrix: " << verdict(matrix) << "\n";
    out << "agreement: " << (symplectic == matrix ? "yes" : "no") << "\n";
    return symplectic && matrix ? EXIT_OK : EXIT_FALSE;
}

}  // namespace

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck &c) {
        return c.pass;
    });
}

VerificationReport verify_polar_space(size_t n_qubits, bool oracle, size_t threads) {
    if (n_qubits == 0 || n_qubits > MAX_VERIFY_QUBITS || (oracle && n_qubits > MAX_VERIFY_ORACLE_QUBITS)) {
        throw CapacityError("verification supports N <= 4, or N <= 3 with the oracle");
    }
    auto p = params(n_qubits);
    VerificationReport report{n_qubits, {}};

    auto points = all_points(n_qubits);
    add_count(report, "eq1_point_count", p.point_count, points.size());

    auto generators = enumerate_generators(n_qubits);
    add_count(report, "eq2_generator_count", p.generator_count.convert_to<uint64_t>(), generators.size());
    bool all_maximal = std::all_of(generators.begin(), generators.end(), [](const Subspace &g) {
        return is_totally_isotropic(g) && is_maximal_isotropic(g);
    });
    add_flag(report, "eq2_generators_maximal", all_maximal);

    auto spread = desarguesian_spread(n_qubits);
    add_count(report, "eq3_spread_size", p.spread_size, spread.blocks().size());
    add_flag(report, "eq3_spread_partition", is_valid_spread(spread));

    std::vector<uint64_t> sizes;
    for (const auto &g : generators) {
        sizes.push_back(span_points(g).size());
    }
    add_count(report, "eq4_generator_size", p.generator_size, first_mismatch(sizes, p.generator_size));

    std::vector<uint64_t> non_perp;
    for (const auto &pt : points) {
        non_perp.push_back(perp_census(pt).non_perpendicular);
    }
    add_count(report, "eq5_non_perp_count", p.non_perp_count, first_mismatch(non_perp, p.non_perp_count));

    if (oracle) {
        auto sweep = oracle_sweep(n_qubits, threads);
        add_count(report, "oracle_pairs_checked", p.point_count * p.point_count, sweep.pairs_checked);
        add_count(report, "oracle_mismatches", 0, sweep.mismatches);
    }
    return report;
}

std::string report_text(const VerificationReport &report) {
    std::ostringstream out;
    out << "W(" << (2 * report.n_qubits - 1) << ", 2) verification, N=" << report.n_qubits << "\n";
    out << std::left << std::setw(24) << "check" << std::setw(12) << "expected" << std::setw(12) << "actual"
        << "result\n";
    for (const auto &c : report.checks) {
        out << std::left << std::setw(24) << c.name << std::setw(12) << value_str(c.expected) << std::setw(12)
            << value_str(c.actual) << (c.pass ? "pass" : "FAIL") << "\n";
    }
    out << "overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

nlohmann::json envelope(size_t n_qubits, const std::string &kind, nlohmann::json data) {
    nlohmann::json doc;
    doc["n"] = n_qubits;
    doc["kind"] = kind;
    doc["data"] = std::move(data);
    return doc;
}

nlohmann::json report_json(const VerificationReport &report) {
    auto data = nlohmann::json::array();
    for (const auto &c : report.checks) {
        data.push_back({
            {"name", c.name},
            {"expected", value_json(c.expected)},
            {"actual", value_json(c.actual)},
            {"pass", c.pass},
        });
    }
    return envelope(report.n_qubits, "report", std::move(data));
}

std::vector<std::string> block_words(const Subspace &block) {
    std::vector<std::string> words;
    for (const auto &v : span_points(block)) {
        words.push_back(vector_to_pauli(v).word());
    }
    std::sort(words.begin(), words.end());
    return words;
}

nlohmann::json generators_json(size_t n_qubits, const std::vector<Subspace> &generators) {
    auto data = nlohmann::json::array();
    for (const auto &g : generators) {
        data.push_back(block_words(g));
    }
    return envelope(n_qubits, "generators", std::move(data));
}

nlohmann::json spreads_json(size_t n_qubits, const std::vector<Spread> &spreads) {
    auto data = nlohmann::json::array();
    for (const auto &s : spreads) {
        auto blocks = nlohmann::json::array();
        for (const auto &b : s.blocks()) {
            blocks.push_back(block_words(b));
        }
        data.push_back(std::move(blocks));
    }
    return envelope(n_qubits, "spreads", std::move(data));
}

nlohmann::json graph_json(size_t n_qubits) {
    auto ops = sorted_operators(n_qubits);
    auto data = nlohmann::json::array();
    for (const auto &p : ops) {
        auto neighbors = nlohmann::json::array();
        for (const auto &q : ops) {
            if (p != q && commutes(p, q)) {
                neighbors.push_back(q.word());
            }
        }
        data.push_back({{"vertex", p.word()}, {"neighbors", std::move(neighbors)}});
    }
    return envelope(n_qubits, "graph", std::move(data));
}

std::string graph_dot(size_t n_qubits) {
    auto ops = sorted_operators(n_qubits);
    std::ostringstream out;
    out << "graph commuting_n" << n_qubits << " {\n";
    for (const auto &p : ops) {
        out << "  \"" << p.word() << "\";\n";
    }
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (commutes(ops[i], ops[j])) {
                out << "  \"" << ops[i].word() << "\" -- \"" << ops[j].word() << "\";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli operators as points of the symplectic polar space W(2N-1, 2)", "polarw"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format: text or json (graph: dot or json)");
    app.add_option("--threads", o.threads, "Worker threads for spread search and the oracle sweep")
        ->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify", "Check the counting formulas against enumeration");
    verify->add_option("n", o.n, "Number of qubits")->required();
    verify->add_flag("--oracle", o.oracle, "Also compare every operator pair with the matrix oracle");

    auto *generators = app.add_subcommand("generators", "List generators as maximally commuting subsets");
    generators->add_option("n", o.n, "Number of qubits")->required();

    auto *spread = app.add_subcommand("spread", "Partition all operators into maximally commuting subsets");
    spread->add_option("n", o.n, "Number of qubits")->required();
    spread->add_option("--method", o.method, "desarguesian or search")
        ->check(CLI::IsMember({"desarguesian", "search"}));
    spread->add_flag("--all", o.all, "Return every spread (search, N <= 2)");
    spread->add_option("--limit", o.limit, "Stop after this many spreads (search)");

    auto *graph = app.add_subcommand("graph", "Export the commuting (perpendicularity) graph");
    graph->add_option("n", o.n, "Number of qubits")->required();

    auto *commute = app.add_subcommand("commute", "Decide whether two Pauli words commute");
    commute->add_option("word1", o.word1, "First Pauli word")->required();
    commute->add_option("word2", o.word2, "Second Pauli word")->required();
    commute->add_flag("--oracle", o.oracle, "Also decide with exact matrices");

    for (auto *sub : {verify, generators, spread, graph, commute}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (generators->parsed()) {
            return cmd_generators(o, out);
        }
        if (spread->parsed()) {
            return cmd_spread(o, out, err);
        }
        if (graph->parsed()) {
            return cmd_graph(o, out);
        }
        return cmd_commute(o, out);
    } catch (const std::invalid_argument &e) {
        // UsageError and malformed Pauli words.
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_FALSE;
    }
}

}  // namespace polarw
