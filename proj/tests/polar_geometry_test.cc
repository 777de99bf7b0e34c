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
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "polarw/errors.h"
#include "polarw/pauli.h"

using namespace polarw;

namespace {

uint64_t product_formula(size_t n) {
    uint64_t g = 1;
    for (size_t i = 1; i <= n; i++) {
        g *= (uint64_t{1} << i) + 1;
    }
    return g;
}

// Generators by brute force: rref of every N-subset of points, kept when rank N
// and isotropic. Shares nothing with the depth-first search but rref.
std::set<Subspace> brute_force_generators(size_t n) {
    auto pts = all_points(n);
    std::set<Subspace> out;
    std::vector<size_t> idx(n);
    auto visit = [&](auto &self, size_t depth, size_t start) -> void {
        if (depth == n) {
            std::vector<SymplecticVector> rows;
            for (size_t k : idx) {
                rows.push_back(pts[k]);
            }
            auto s = rref(n, rows);
            bool isotropic = true;
            for (const auto &a : rows) {
                for (const auto &b : rows) {
                    isotropic &= !sp_form(a, b);
                }
            }
            if (s.rank() == n && isotropic) {
                out.insert(s);
            }
            return;
        }
        for (size_t k = start; k < pts.size(); k++) {
            idx[depth] = k;
            self(self, depth + 1, k + 1);
        }
    };
    visit(visit, 0, 0);
    return out;
}

std::set<std::string> words_of(const Subspace &s) {
    std::set<std::string> out;
    for (const auto &p : span_points(s)) {
        out.insert(vector_to_pauli(p).word());
    }
    return out;
}

}  // namespace

TEST(params, examples) {
    auto p2 = params(2);
    ASSERT_EQ(p2.point_count, 15);
    ASSERT_EQ(p2.generator_count, 15);
    ASSERT_EQ(p2.generator_size, 3);
    ASSERT_EQ(p2.spread_size, 5);
    ASSERT_EQ(p2.non_perp_count, 8);

    auto p3 = params(3);
    ASSERT_EQ(p3.point_count, 63);
    ASSERT_EQ(p3.generator_count, 135);
    ASSERT_EQ(p3.generator_size, 7);
    ASSERT_EQ(p3.spread_size, 9);
    ASSERT_EQ(p3.non_perp_count, 32);

    auto p4 = params(4);
    ASSERT_EQ(p4.point_count, 255);
    ASSERT_EQ(p4.generator_count, 2295);
    ASSERT_EQ(p4.generator_size, 15);
    ASSERT_EQ(p4.spread_size, 17);
    ASSERT_EQ(p4.non_perp_count, 128);
}

TEST(params, partition_arithmetic_and_range) {
    for (size_t n = 1; n <= MAX_QUBITS; n++) {
        auto p = params(n);
        ASSERT_EQ(p.generator_size * p.spread_size, p.point_count);
        ASSERT_EQ(p.point_count, (uint64_t{1} << (2 * n)) - 1);
        BigInt g = 1;
        for (size_t i = 1; i <= n; i++) {
            g *= (BigInt(1) << i) + 1;
        }
        ASSERT_EQ(p.generator_count, g);
    }
    // 3*5*9*17*33*65*129*257*513*1025*2049*4097, beyond 64 bits.
    ASSERT_EQ(params(12).generator_count.str(), "720413716161839357604375");
    ASSERT_THROW(params(0), CapacityError);
    ASSERT_THROW(params(13), CapacityError);
}

TEST(enumerate_generators, n1_is_x_y_z) {
    auto gens = enumerate_generators(1);
    ASSERT_EQ(gens.size(), 3);
    ASSERT_EQ(gens[0].basis()[0], SymplecticVector::from_str("1|0"));
    ASSERT_EQ(gens[1].basis()[0], SymplecticVector::from_str("1|1"));
    ASSERT_EQ(gens[2].basis()[0], SymplecticVector::from_str("0|1"));
}

TEST(enumerate_generators, counts_sizes_and_order) {
    for (size_t n = 1; n <= MAX_GENERATOR_QUBITS; n++) {
        auto gens = enumerate_generators(n);
        ASSERT_EQ(gens.size(), product_formula(n)) << "n=" << n;
        ASSERT_TRUE(std::is_sorted(gens.begin(), gens.end()));
        ASSERT_EQ(std::adjacent_find(gens.begin(), gens.end()), gens.end());
        for (const auto &g : gens) {
            ASSERT_EQ(g.rank(), n);
            ASSERT_TRUE(is_totally_isotropic(g));
            ASSERT_EQ(span_points(g).size(), (size_t{1} << n) - 1);
        }
    }
    ASSERT_EQ(enumerate_generators(4).size(), 2295);
}

TEST(enumerate_generators, matches_brute_force) {
    for (size_t n = 1; n <= 3; n++) {
        auto gens = enumerate_generators(n);
        ASSERT_EQ(std::set<Subspace>(gens.begin(), gens.end()), brute_force_generators(n)) << "n=" << n;
    }
}

TEST(enumerate_generators, capacity) {
    try {
        enumerate_generators(5);
        FAIL() << "expected CapacityError";
    } catch (const CapacityError &e) {
        ASSERT_NE(std::string(e.what()).find("75735"), std::string::npos) << e.what();
    }
    ASSERT_THROW(enumerate_generators(0), CapacityError);
}

TEST(is_maximal_isotropic, examples) {
    auto gens = enumerate_generators(2);
    for (const auto &g : gens) {
        ASSERT_TRUE(is_maximal_isotropic(g));
    }
    auto xi = rref(2, std::vector<SymplecticVector>{SymplecticVector::from_str("10|00")});
    ASSERT_FALSE(is_maximal_isotropic(xi));
    auto extended = rref(2, std::vector<SymplecticVector>{
                                SymplecticVector::from_str("10|00"), SymplecticVector::from_str("01|00")});
    ASSERT_TRUE(is_totally_isotropic(extended));
    ASSERT_TRUE(is_maximal_isotropic(extended));
    auto y = rref(1, std::vector<SymplecticVector>{SymplecticVector::from_str("1|1")});
    ASSERT_TRUE(is_maximal_isotropic(y));
    ASSERT_FALSE(is_maximal_isotropic(Subspace(2)));
    auto hyperbolic = rref(1, std::vector<SymplecticVector>{
                                  SymplecticVector::from_str("1|0"), SymplecticVector::from_str("0|1")});
    ASSERT_THROW(is_maximal_isotropic(hyperbolic), DomainError);
}

TEST(is_maximal_isotropic, every_generator_and_no_smaller_subspace) {
    for (size_t n = 1; n <= 3; n++) {
        for (const auto &g : enumerate_generators(n)) {
            ASSERT_TRUE(is_maximal_isotropic(g));
            // Every rank N-1 subspace inside it extends, so it is not maximal.
            if (n > 1) {
                std::vector<SymplecticVector> rows(g.basis().begin(), g.basis().end() - 1);
                ASSERT_FALSE(is_maximal_isotropic(rref(n, rows)));
            }
        }
    }
}

TEST(desarguesian_spread, n1) {
    auto s = desarguesian_spread(1);
    ASSERT_EQ(s.blocks().size(), 3);
    std::set<std::set<std::string>> cells;
    for (const auto &b : s.blocks()) {
        cells.insert(words_of(b));
    }
    ASSERT_EQ(cells, (std::set<std::set<std::string>>{{"X"}, {"Y"}, {"Z"}}));
}

TEST(desarguesian_spread, n2_and_n3) {
    auto s2 = desarguesian_spread(2);
    ASSERT_EQ(s2.blocks().size(), 5);
    for (const auto &b : s2.blocks()) {
        ASSERT_EQ(span_points(b).size(), 3);
    }

    // Direct check at N=3: isotropic blocks and a coverage bitmask of all 63 points.
    auto s3 = desarguesian_spread(3);
    ASSERT_EQ(s3.blocks().size(), 9);
    uint64_t covered = 0;
    for (const auto &b : s3.blocks()) {
        auto pts = span_points(b);
        ASSERT_EQ(pts.size(), 7);
        for (const auto &p : pts) {
            for (const auto &q : pts) {
                ASSERT_FALSE(sp_form(p, q));
            }
            uint64_t bit = uint64_t{1} << (p.packed() - 1);
            ASSERT_FALSE(covered & bit) << "point covered twice: " << p.str();
            covered |= bit;
        }
    }
    ASSERT_EQ(covered, (uint64_t{1} << 63) - 1);
}

TEST(desarguesian_spread, all_supported_sizes_are_valid) {
    for (size_t n = 1; n <= MAX_DESARGUESIAN_QUBITS; n++) {
        auto s = desarguesian_spread(n);
        auto problems = spread_violations(s);
        ASSERT_TRUE(problems.empty()) << "n=" << n << ": " << problems.front();
        ASSERT_EQ(s.blocks().size(), (size_t{1} << n) + 1);
    }
    ASSERT_THROW(desarguesian_spread(6), CapacityError);
    ASSERT_THROW(desarguesian_spread(0), CapacityError);
}

TEST(spread_violations, detects_broken_spreads) {
    auto good = desarguesian_spread(2);
    auto blocks = good.blocks();
    blocks.back() = blocks.front();
    ASSERT_FALSE(is_valid_spread(Spread(2, blocks)));

    blocks = good.blocks();
    blocks.pop_back();
    auto problems = spread_violations(Spread(2, blocks));
    ASSERT_FALSE(problems.empty());

    blocks = good.blocks();
    blocks[0] = rref(2, std::vector<SymplecticVector>{
                            SymplecticVector::from_str("10|00"), SymplecticVector::from_str("00|10")});
    ASSERT_FALSE(is_valid_spread(Spread(2, blocks)));
}

TEST(spread, canonical_block_order) {
    auto s = desarguesian_spread(3);
    auto blocks = s.blocks();
    std::reverse(blocks.begin(), blocks.end());
    ASSERT_EQ(Spread(3, blocks), s);
    for (size_t k = 1; k < s.blocks().size(); k++) {
        ASSERT_LT(span_points(s.blocks()[k - 1]).front(), span_points(s.blocks()[k]).front());
    }
}

TEST(enumerate_spreads, n1_has_one) {
    auto spreads = enumerate_spreads(1);
    ASSERT_EQ(spreads.size(), 1);
    ASSERT_TRUE(is_valid_spread(spreads[0]));
}

TEST(enumerate_spreads, n2_matches_subset_oracle) {
    // Oracle: every 5-subset of the 15 lines of W(3,2) that partitions the points.
    auto gens = enumerate_generators(2);
    std::set<Spread> oracle;
    std::vector<size_t> pick(5);
    auto visit = [&](auto &self, size_t depth, size_t start) -> void {
        if (depth == 5) {
            std::set<SymplecticVector> seen;
            std::vector<Subspace> blocks;
            for (size_t k : pick) {
                blocks.push_back(gens[k]);
                for (const auto &p : span_points(gens[k])) {
                    seen.insert(p);
                }
            }
            if (seen.size() == 15) {
                oracle.insert(Spread(2, blocks));
            }
            return;
        }
        for (size_t k = start; k < gens.size(); k++) {
            pick[depth] = k;
            self(self, depth + 1, k + 1);
        }
    };
    visit(visit, 0, 0);

    auto spreads = enumerate_spreads(2);
    ASSERT_EQ(spreads.size(), 6);
    ASSERT_EQ(std::set<Spread>(spreads.begin(), spreads.end()), oracle);
    ASSERT_TRUE(std::is_sorted(spreads.begin(), spreads.end()));
    for (const auto &s : spreads) {
        ASSERT_TRUE(is_valid_spread(s));
    }
    ASSERT_NE(std::find(spreads.begin(), spreads.end(), desarguesian_spread(2)), spreads.end());
}

TEST(enumerate_spreads, independent_of_thread_count) {
    auto reference = enumerate_spreads(2, std::nullopt, 1);
    for (size_t threads : {2, 3, 8}) {
        ASSERT_EQ(enumerate_spreads(2, std::nullopt, threads), reference);
    }
    auto first = enumerate_spreads(3, 2, 1);
    ASSERT_EQ(enumerate_spreads(3, 2, 4), first);
}

TEST(enumerate_spreads, n3_with_limit) {
    auto one = enumerate_spreads(3, 1);
    ASSERT_EQ(one.size(), 1);
    auto problems = spread_violations(one[0]);
    ASSERT_TRUE(problems.empty()) << problems.front();

    auto three = enumerate_spreads(3, 3);
    ASSERT_EQ(three.size(), 3);
    ASSERT_EQ(std::set<Spread>(three.begin(), three.end()).size(), 3);
    for (const auto &s : three) {
        ASSERT_TRUE(is_valid_spread(s));
    }
}

TEST(enumerate_spreads, argument_checks) {
    ASSERT_THROW(enumerate_spreads(3), CapacityError);
    ASSERT_THROW(enumerate_spreads(4, 1), CapacityError);
    ASSERT_THROW(enumerate_spreads(2, 0), std::invalid_argument);
    ASSERT_EQ(enumerate_spreads(2, 2).size(), 2);
}

TEST(gq22_structure_check, passes) {
    auto report = gq22_structure_check();
    ASSERT_TRUE(report.ok());
    std::map<std::string, uint64_t> actual;
    for (const auto &c : report.checks) {
        actual[c.name] = c.actual;
    }
    ASSERT_EQ(actual["points"], 15);
    ASSERT_EQ(actual["lines"], 15);
    ASSERT_EQ(actual["points_per_line"], 3);
    ASSERT_EQ(actual["lines_per_point"], 3);
    ASSERT_EQ(actual["collinear_partners_per_point"], 6);
    ASSERT_EQ(actual["gq_axiom_violations"], 0);
}

TEST(gq22_structure_check, lines_are_the_generators) {
    // At N=2 the generators are exactly the totally isotropic lines.
    auto gens = enumerate_generators(2);
    std::set<Subspace> lines;
    auto pts = all_points(2);
    for (const auto &p : pts) {
        for (const auto &q : pts) {
            if (are_perpendicular(p, q)) {
                SymplecticVector pair[] = {p, q};
                lines.insert(rref(2, pair));
            }
        }
    }
    ASSERT_EQ(lines, std::set<Subspace>(gens.begin(), gens.end()));
}

TEST(polar_space, perpendicular_counts) {
    for (size_t n = 1; n <= 3; n++) {
        uint64_t non_perp = uint64_t{1} << (2 * n - 1);
        for (const auto &p : all_points(n)) {
            auto c = perp_census(p);
            ASSERT_EQ(c.non_perpendicular, non_perp);
            ASSERT_EQ(c.perpendicular, non_perp - 2);
        }
    }
}
