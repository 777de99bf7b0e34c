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

#include "polarw/polar_geometry.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "polarw/errors.h"
#include "polarw/exact_cover.h"
#include "polarw/gf2n_field.h"

namespace polarw {

namespace {

void require_range(size_t n_qubits, size_t cap, const char *what) {
    if (n_qubits == 0 || n_qubits > cap) {
        throw CapacityError(
            std::string(what) + " supports 1 <= N <= " + std::to_string(cap) + ", got N=" + std::to_string(n_qubits));
    }
}

SymplecticVector smallest_point(const Subspace &s) {
    if (s.rank() == 0) {
        return SymplecticVector::zero(s.n_qubits());
    }
    return span_points(s).front();
}

std::strong_ordering compare_blocks(const Subspace &a, const Subspace &b) {
    if (auto c = smallest_point(a) <=> smallest_point(b); c != 0) {
        return c;
    }
    return a <=> b;
}

void extend_isotropic(
    size_t n, std::vector<SymplecticVector> &rows, size_t next_coordinate, std::vector<Subspace> &out) {
    if (rows.size() == n) {
        out.push_back(rref(n, rows));
        return;
    }
    size_t needed = n - rows.size();
    for (size_t p = next_coordinate; p + needed <= 2 * n; p++) {
        uint64_t lead = uint64_t{1} << (2 * n - 1 - p);
        bool pivot_free = std::none_of(rows.begin(), rows.end(), [&](const SymplecticVector &r) {
            return r.packed() & lead;
        });
        if (!pivot_free) {
            continue;
        }
        // Existing pivots all sit above `lead`, so any tail below it keeps RREF.
        for (uint64_t tail = 0; tail < lead; tail++) {
            auto candidate = SymplecticVector::from_packed(n, lead | tail);
            bool isotropic = std::none_of(rows.begin(), rows.end(), [&](const SymplecticVector &r) {
                return sp_form(r, candidate);
            });
            if (!isotropic) {
                continue;
            }
            rows.push_back(candidate);
            extend_isotropic(n, rows, p + 1, out);
            rows.pop_back();
        }
    }
}

/// (a, b) in GF(2^N)^2 to the standard symplectic coordinates.
SymplecticVector field_pair_to_vector(const FieldElement &a, const FieldElement &b) {
    size_t n = a.degree();
    uint32_t x = 0;
    uint32_t z = 0;
    for (size_t k = 0; k < n; k++) {
        // Primal basis is polynomial, so a's k-th coordinate is its x^k coefficient.
        if ((a.coeffs() >> k) & 1) {
            x |= uint32_t{1} << (n - 1 - k);
        }
        // The k-th trace-dual coordinate of b is Tr(b * x^k).
        if (trace(fmul(b, FieldElement::monomial(n, k)))) {
            z |= uint32_t{1} << (n - 1 - k);
        }
    }
    return SymplecticVector(n, x, z);
}

uint64_t first_mismatch(const std::vector<uint64_t> &values, uint64_t expected) {
    for (uint64_t v : values) {
        if (v != expected) {
            return v;
        }
    }
    return expected;
}

}  // namespace

PolarSpaceParams params(size_t n_qubits) {
    require_range(n_qubits, MAX_QUBITS, "polar space parameters");
    PolarSpaceParams p;
    p.n_qubits = n_qubits;
    uint64_t two_n = uint64_t{1} << n_qubits;
    p.point_count = two_n * two_n - 1;
    p.generator_count = 1;
    for (size_t i = 1; i <= n_qubits; i++) {
        p.generator_count *= (uint64_t{1} << i) + 1;
    }
    p.generator_size = two_n - 1;
    p.spread_size = two_n + 1;
    p.non_perp_count = uint64_t{1} << (2 * n_qubits - 1);
    return p;
}

std::vector<Subspace> enumerate_generators(size_t n_qubits) {
    if (n_qubits > MAX_GENERATOR_QUBITS && n_qubits <= MAX_QUBITS) {
        throw CapacityError(
            "generator enumeration is capped at N=" + std::to_string(MAX_GENERATOR_QUBITS) + "; N=" +
            std::to_string(n_qubits) + " would produce " + params(n_qubits).generator_count.str() + " generators");
    }
    require_range(n_qubits, MAX_GENERATOR_QUBITS, "generator enumeration");
    std::vector<Subspace> out;
    std::vector<SymplecticVector> rows;
    extend_isotropic(n_qubits, rows, 0, out);
    return out;
}

bool is_maximal_isotropic(const Subspace &s) {
    if (!is_totally_isotropic(s)) {
        throw DomainError("subspace " + s.str() + " is not totally isotropic");
    }
    size_t n = s.n_qubits();
    bool by_rank = s.rank() == n;

    bool by_scan = true;
    uint64_t end = uint64_t{1} << (2 * n);
    for (uint64_t b = 1; b < end && by_scan; b++) {
        auto p = SymplecticVector::from_packed(n, b);
        if (s.contains(p)) {
            continue;
        }
        bool perp_to_all = std::none_of(s.basis().begin(), s.basis().end(), [&](const SymplecticVector &row) {
            return sp_form(row, p);
        });
        if (perp_to_all) {
            by_scan = false;
        }
    }

    if (by_rank != by_scan) {
        throw std::logic_error("maximality by rank and by perpendicular scan disagree for " + s.str());
    }
    return by_scan;
}

Spread::Spread(size_t n_qubits, std::vector<Subspace> blocks) : n_(n_qubits), blocks_(std::move(blocks)) {
    for (const auto &b : blocks_) {
        if (b.n_qubits() != n_) {
            throw DimensionError("spread block has the wrong qubit count");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Subspace &a, const Subspace &b) {
        return compare_blocks(a, b) < 0;
    });
}

std::strong_ordering Spread::operator<=>(const Spread &other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    size_t common = std::min(blocks_.size(), other.blocks_.size());
    for (size_t k = 0; k < common; k++) {
        if (auto c = compare_blocks(blocks_[k], other.blocks_[k]); c != 0) {
            return c;
        }
    }
    return blocks_.size() <=> other.blocks_.size();
}

std::vector<std::string> spread_violations(const Spread &spread) {
    std::vector<std::string> problems;
    size_t n = spread.n_qubits();
    auto p = params(n);

    if (spread.blocks().size() != p.spread_size) {
        problems.push_back(
            "block count " + std::to_string(spread.blocks().size()) + " != " + std::to_string(p.spread_size));
    }
    std::vector<uint8_t> hits(p.point_count + 1, 0);
    for (const auto &block : spread.blocks()) {
        if (block.rank() != n) {
            problems.push_back("block " + block.str() + " has rank " + std::to_string(block.rank()));
        }
        if (!is_totally_isotropic(block)) {
            problems.push_back("block " + block.str() + " is not totally isotropic");
        }
        auto pts = span_points(block);
        for (const auto &q : pts) {
            if (hits[q.packed()]++) {
                problems.push_back("point " + q.str() + " lies in two blocks");
            }
        }
        // Closure under addition, checked on the point set itself.
        std::set<SymplecticVector> point_set(pts.begin(), pts.end());
        for (size_t i = 0; i < pts.size(); i++) {
            for (size_t j = i + 1; j < pts.size(); j++) {
                if (!point_set.contains(pts[i] ^ pts[j])) {
                    problems.push_back("block " + block.str() + " is not closed under addition");
                    i = pts.size();
                    break;
                }
            }
        }
    }
    size_t covered = std::count_if(hits.begin() + 1, hits.end(), [](uint8_t h) {
        return h > 0;
    });
    if (covered != p.point_count) {
        problems.push_back(
            "blocks cover " + std::to_string(covered) + " of " + std::to_string(p.point_count) + " points");
    }
    return problems;
}

bool is_valid_spread(const Spread &spread) {
    return spread_violations(spread).empty();
}

Spread desarguesian_spread(size_t n_qubits) {
    require_range(n_qubits, MAX_DESARGUESIAN_QUBITS, "desarguesian spread");
    size_t n = n_qubits;
    auto basis = polynomial_basis(n);
    // Builds the trace-dual basis and checks Tr(e_i f_j) = delta_ij, which is what
    // makes field_pair_to_vector a symplectic isometry.
    dual_basis(basis);

    auto zero = FieldElement::zero(n);
    std::vector<Subspace> blocks;
    std::vector<SymplecticVector> rows;
    for (const auto &e : basis) {
        rows.push_back(field_pair_to_vector(zero, e));
    }
    blocks.push_back(rref(n, rows));
    for (const auto &lambda : field_elements(n)) {
        rows.clear();
        for (const auto &e : basis) {
            rows.push_back(field_pair_to_vector(e, fmul(lambda, e)));
        }
        blocks.push_back(rref(n, rows));
    }

    Spread spread(n, std::move(blocks));
    if (auto problems = spread_violations(spread); !problems.empty()) {
        throw std::logic_error("desarguesian construction produced an invalid spread: " + problems.front());
    }
    return spread;
}

std::vector<Spread> enumerate_spreads(size_t n_qubits, std::optional<size_t> limit, size_t threads) {
    require_range(n_qubits, MAX_SPREAD_SEARCH_QUBITS, "spread search");
    if (!limit && n_qubits > MAX_FULL_SPREAD_QUBITS) {
        throw CapacityError(
            "complete spread enumeration supports N <= " + std::to_string(MAX_FULL_SPREAD_QUBITS) +
            "; pass a limit for N=" + std::to_string(n_qubits));
    }
    if (limit && *limit == 0) {
        throw std::invalid_argument("spread limit must be at least 1");
    }
    threads = std::max<size_t>(threads, 1);

    auto generators = enumerate_generators(n_qubits);
    std::vector<std::vector<size_t>> rows;
    rows.reserve(generators.size());
    for (const auto &g : generators) {
        std::vector<size_t> cols;
        for (const auto &p : span_points(g)) {
            cols.push_back(p.packed() - 1);
        }
        rows.push_back(std::move(cols));
    }
    ExactCover base(params(n_qubits).point_count, rows);

    size_t first = base.first_branch_column();
    std::vector<size_t> branches;
    if (first < base.num_columns()) {
        branches = base.rows_in_column(first);
    }

    // One result list per first-level branch; concatenating them in branch
    // order reproduces the single-threaded search order.
    std::vector<std::vector<std::vector<size_t>>> found(branches.size());
    auto run_branch = [&](ExactCover &cover, size_t k) {
        size_t forced[] = {branches[k]};
        cover.search(
            [&](std::span<const size_t> chosen) {
                found[k].emplace_back(chosen.begin(), chosen.end());
                return !limit || found[k].size() < *limit;
            },
            forced);
    };

    if (threads == 1 || branches.size() <= 1) {
        size_t total = 0;
        for (size_t k = 0; k < branches.size() && (!limit || total < *limit); k++) {
            run_branch(base, k);
            total += found[k].size();
        }
    } else {
        std::vector<std::thread> pool;
        size_t workers = std::min(threads, branches.size());
        for (size_t t = 0; t < workers; t++) {
            pool.emplace_back([&, t] {
                ExactCover local = base;
                for (size_t k = t; k < branches.size(); k += workers) {
                    run_branch(local, k);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::vector<Spread> spreads;
    for (const auto &branch : found) {
        for (const auto &cover_rows : branch) {
            if (limit && spreads.size() == *limit) {
                break;
            }
            std::vector<Subspace> blocks;
            for (size_t r : cover_rows) {
                blocks.push_back(generators[r]);
            }
            spreads.emplace_back(n_qubits, std::move(blocks));
        }
    }
    std::sort(spreads.begin(), spreads.end());
    spreads.erase(std::unique(spreads.begin(), spreads.end()), spreads.end());
    return spreads;
}

bool StructureReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const StructureCheck &c) {
        return c.pass();
    });
}

StructureReport gq22_structure_check() {
    constexpr size_t n = 2;
    auto points = all_points(n);

    std::vector<Subspace> lines;
    for (size_t i = 0; i < points.size(); i++) {
        for (size_t j = i + 1; j < points.size(); j++) {
            if (sp_form(points[i], points[j])) {
                continue;
            }
            SymplecticVector pair[] = {points[i], points[j]};
            lines.push_back(rref(n, pair));
        }
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<std::vector<SymplecticVector>> line_points;
    for (const auto &l : lines) {
        line_points.push_back(span_points(l));
    }
    auto on_line = [&](size_t line, const SymplecticVector &p) {
        const auto &pts = line_points[line];
        return std::find(pts.begin(), pts.end(), p) != pts.end();
    };
    auto collinear = [&](const SymplecticVector &p, const SymplecticVector &q) {
        for (size_t l = 0; l < lines.size(); l++) {
            if (on_line(l, p) && on_line(l, q)) {
                return true;
            }
        }
        return false;
    };

    std::vector<uint64_t> points_per_line;
    for (const auto &pts : line_points) {
        points_per_line.push_back(pts.size());
    }
    std::vector<uint64_t> lines_per_point;
    std::vector<uint64_t> partners_per_point;
    for (const auto &p : points) {
        uint64_t count = 0;
        for (size_t l = 0; l < lines.size(); l++) {
            count += on_line(l, p);
        }
        lines_per_point.push_back(count);
        uint64_t partners = 0;
        for (const auto &q : points) {
            partners += q != p && collinear(p, q);
        }
        partners_per_point.push_back(partners);
    }

    // For P off L, exactly one point of L is collinear with P.
    uint64_t violations = 0;
    for (const auto &p : points) {
        for (size_t l = 0; l < lines.size(); l++) {
            if (on_line(l, p)) {
                continue;
            }
            auto hits = std::count_if(line_points[l].begin(), line_points[l].end(), [&](const SymplecticVector &q) {
                return collinear(p, q);
            });
            violations += hits != 1;
        }
    }

    StructureReport report;
    report.checks.push_back({"points", 15, points.size()});
    report.checks.push_back({"lines", 15, lines.size()});
    report.checks.push_back({"points_per_line", 3, first_mismatch(points_per_line, 3)});
    report.checks.push_back({"lines_per_point", 3, first_mismatch(lines_per_point, 3)});
    report.checks.push_back({"collinear_partners_per_point", 6, first_mismatch(partners_per_point, 6)});
    report.checks.push_back({"gq_axiom_violations", 0, violations});
    return report;
}

}  // namespace polarw
