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

#include "polarw/pauli.h"

#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "polarw/errors.h"
#include "polarw/polar_geometry.h"
#include "properties.h"

using namespace polarw;

namespace {

GaussianInt g(int re, int im) {
    return {re, im};
}

std::vector<PauliOperator> non_identity_words(size_t n) {
    std::vector<PauliOperator> out;
    for (const auto &v : all_points(n)) {
        out.push_back(vector_to_pauli(v));
    }
    return out;
}

/// Phase-stripped product read off the exact matrices.
std::optional<PauliOperator> matrix_product_class(const PauliOperator &p, const PauliOperator &q) {
    return strip_phase(pauli_matrix(p) * pauli_matrix(q), p.n_qubits());
}

}  // namespace

TEST(pauli_operator, parsing) {
    ASSERT_EQ(PauliOperator("XIZZY").n_qubits(), 5);
    ASSERT_TRUE(PauliOperator("III").is_identity());
    ASSERT_FALSE(PauliOperator("IXI").is_identity());
    ASSERT_THROW(PauliOperator(""), std::invalid_argument);
    try {
        PauliOperator("XQZ");
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument &e) {
        ASSERT_NE(std::string(e.what()).find("'Q'"), std::string::npos) << e.what();
    }
    ASSERT_THROW(PauliOperator("xz"), std::invalid_argument);
}

TEST(pauli_to_vector, examples) {
    ASSERT_EQ(pauli_to_vector(PauliOperator("X")), SymplecticVector::from_str("1|0"));
    ASSERT_EQ(pauli_to_vector(PauliOperator("Z")), SymplecticVector::from_str("0|1"));
    ASSERT_EQ(pauli_to_vector(PauliOperator("Y")), SymplecticVector::from_str("1|1"));
    ASSERT_EQ(pauli_to_vector(PauliOperator("YZ")), SymplecticVector::from_str("10|11"));
    ASSERT_THROW(pauli_to_vector(PauliOperator("II")), DomainError);
    ASSERT_THROW(vector_to_pauli(SymplecticVector::zero(2)), DomainError);
    ASSERT_EQ(pauli_from_bits(SymplecticVector::zero(2)).word(), "II");

    std::set<SymplecticVector> images;
    for (const auto &p : non_identity_words(2)) {
        images.insert(pauli_to_vector(p));
    }
    ASSERT_EQ(images.size(), 15);
}

TEST(pauli_to_vector, bijection_properties) {
    auto failures = props::check_pauli_bijection(props::PROPERTY_SEED);
    ASSERT_TRUE(failures.empty()) << failures.front();
}

TEST(commutes, examples) {
    ASSERT_TRUE(commutes(PauliOperator("X"), PauliOperator("X")));
    ASSERT_FALSE(commutes(PauliOperator("X"), PauliOperator("Z")));
    ASSERT_TRUE(commutes(PauliOperator("XX"), PauliOperator("ZZ")));
    ASSERT_THROW(commutes(PauliOperator("X"), PauliOperator("XX")), DimensionError);
    ASSERT_THROW(commutes(PauliOperator("I"), PauliOperator("X")), DomainError);
}

TEST(pauli_matrix, golden) {
    auto i = pauli_matrix(PauliOperator("I"));
    ASSERT_EQ(i, ExactMatrix::identity(2));

    auto y = pauli_matrix(PauliOperator("Y"));
    ExactMatrix expected_y(2);
    expected_y.at(0, 1) = g(0, -1);
    expected_y.at(1, 0) = g(0, 1);
    ASSERT_EQ(y, expected_y);

    // X (x) Z = [[0, Z], [Z, 0]].
    ExactMatrix xz(4);
    xz.at(0, 2) = g(1, 0);
    xz.at(1, 3) = g(-1, 0);
    xz.at(2, 0) = g(1, 0);
    xz.at(3, 1) = g(-1, 0);
    ASSERT_EQ(pauli_matrix(PauliOperator("XZ")), xz);

    ASSERT_THROW(pauli_matrix(PauliOperator("XXXXXXX")), CapacityError);
    ASSERT_EQ(pauli_matrix(PauliOperator("XYZIXY")).dim(), 64);
}

TEST(pauli_matrix, unitary_with_unit_entries) {
    for (const auto &p : non_identity_words(2)) {
        auto m = pauli_matrix(p);
        // Pauli matrices are Hermitian and square to the identity.
        ASSERT_EQ(m * m, ExactMatrix::identity(4)) << p.word();
        for (size_t r = 0; r < 4; r++) {
            size_t nonzero = 0;
            for (size_t c = 0; c < 4; c++) {
                const auto &e = m.at(r, c);
                if (!e.is_zero()) {
                    nonzero++;
                    ASSERT_EQ(e.re * e.re + e.im * e.im, 1);
                }
            }
            ASSERT_EQ(nonzero, 1);
        }
    }
}

TEST(commutes_matrix, examples) {
    ASSERT_FALSE(commutes_matrix(PauliOperator("X"), PauliOperator("Y")));
    ASSERT_TRUE(commutes_matrix(PauliOperator("XI"), PauliOperator("IZ")));
    ASSERT_TRUE(commutes_matrix(PauliOperator("ZZ"), PauliOperator("XX")));
    ASSERT_THROW(commutes_matrix(PauliOperator("X"), PauliOperator("XX")), DimensionError);

    // XY - YX = 2iZ, exactly.
    auto x = pauli_matrix(PauliOperator("X"));
    auto y = pauli_matrix(PauliOperator("Y"));
    auto z = pauli_matrix(PauliOperator("Z"));
    ASSERT_EQ(x * y - y * x, z.scaled(g(0, 2)));
}

TEST(oracle_equivalence, all_pairs_up_to_three_qubits) {
    for (size_t n = 1; n <= 3; n++) {
        auto ops = non_identity_words(n);
        for (const auto &p : ops) {
            for (const auto &q : ops) {
                ASSERT_EQ(commutes(p, q), commutes_matrix(p, q)) << p.word() << " " << q.word();
            }
        }
        auto sweep = oracle_sweep(n, 2);
        ASSERT_EQ(sweep.pairs_checked, ops.size() * ops.size());
        ASSERT_EQ(sweep.mismatches, 0);
    }
}

TEST(oracle_equivalence, random_pairs_at_four_qubits) {
    auto ops = non_identity_words(4);
    std::vector<ExactMatrix> mats;
    for (const auto &p : ops) {
        mats.push_back(pauli_matrix(p));
    }
    std::mt19937_64 rng(props::PROPERTY_SEED);
    size_t mismatches = 0;
    for (int trial = 0; trial < 100000; trial++) {
        size_t i = rng() % ops.size();
        size_t j = rng() % ops.size();
        bool by_matrix = (mats[i] * mats[j] - mats[j] * mats[i]).is_zero();
        mismatches += by_matrix != commutes(ops[i], ops[j]);
        if (trial % 1000 == 0) {
            ASSERT_EQ(commutes_matrix(ops[i], ops[j]), by_matrix);
        }
    }
    ASSERT_EQ(mismatches, 0);
}

TEST(strip_phase, recovers_pauli_classes) {
    auto y = pauli_matrix(PauliOperator("Y"));
    ASSERT_EQ(strip_phase(y.scaled(g(0, 1)), 1), PauliOperator("Y"));
    ASSERT_EQ(strip_phase(y.scaled(g(-1, 0)), 1), PauliOperator("Y"));
    ASSERT_EQ(strip_phase(ExactMatrix::identity(4), 2), PauliOperator("II"));
    ASSERT_EQ(strip_phase(y.scaled(g(2, 0)), 1), std::nullopt);
    ASSERT_EQ(strip_phase(ExactMatrix(2), 1), std::nullopt);
    ExactMatrix hadamard_like(2);
    hadamard_like.at(0, 0) = g(1, 0);
    hadamard_like.at(0, 1) = g(1, 0);
    hadamard_like.at(1, 0) = g(1, 0);
    hadamard_like.at(1, 1) = g(-1, 0);
    ASSERT_EQ(strip_phase(hadamard_like, 1), std::nullopt);
}

TEST(homomorphism, product_class_is_xor_of_vectors) {
    for (size_t n = 1; n <= 2; n++) {
        auto ops = non_identity_words(n);
        for (const auto &p : ops) {
            for (const auto &q : ops) {
                auto product = matrix_product_class(p, q);
                ASSERT_TRUE(product.has_value());
                ASSERT_EQ(symplectic_bits(*product), pauli_to_vector(p) ^ pauli_to_vector(q));
            }
        }
    }
    std::mt19937_64 rng(props::PROPERTY_SEED);
    for (size_t n = 3; n <= 4; n++) {
        for (int trial = 0; trial < 300; trial++) {
            auto p = vector_to_pauli(props::random_point(rng, n));
            auto q = vector_to_pauli(props::random_point(rng, n));
            auto product = matrix_product_class(p, q);
            ASSERT_TRUE(product.has_value());
            ASSERT_EQ(symplectic_bits(*product), pauli_to_vector(p) ^ pauli_to_vector(q));
        }
    }
}

TEST(mcs_of_generator, examples) {
    auto z = rref(1, std::vector<SymplecticVector>{SymplecticVector::from_str("0|1")});
    auto cell = mcs_of_generator(z);
    ASSERT_EQ(cell, std::vector<PauliOperator>{PauliOperator("Z")});

    auto xs = rref(2, std::vector<SymplecticVector>{
                          SymplecticVector::from_str("10|00"), SymplecticVector::from_str("01|00")});
    auto words = mcs_of_generator(xs);
    std::vector<PauliOperator> expected = {PauliOperator("IX"), PauliOperator("XI"), PauliOperator("XX")};
    ASSERT_EQ(words, expected);

    auto partial = rref(2, std::vector<SymplecticVector>{SymplecticVector::from_str("10|00")});
    ASSERT_THROW(mcs_of_generator(partial), DomainError);
    auto hyperbolic = rref(1, std::vector<SymplecticVector>{
                                  SymplecticVector::from_str("1|0"), SymplecticVector::from_str("0|1")});
    ASSERT_THROW(mcs_of_generator(hyperbolic), DomainError);
}

TEST(mcs_of_generator, every_mcs_commutes_under_the_oracle) {
    for (size_t n = 1; n <= 3; n++) {
        for (const auto &gen : enumerate_generators(n)) {
            auto cell = mcs_of_generator(gen);
            ASSERT_EQ(cell.size(), (size_t{1} << n) - 1);
            for (const auto &p : cell) {
                for (const auto &q : cell) {
                    ASSERT_TRUE(commutes_matrix(p, q)) << p.word() << " " << q.word();
                }
            }
        }
    }
}

TEST(mcs_of_generator, maximal_commuting_sets_are_exactly_generators) {
    // Converse direction: every maximal pairwise-commuting set of operators, found
    // by Bron-Kerbosch on the matrix-oracle commuting graph, is a generator.
    for (size_t n = 1; n <= 3; n++) {
        auto ops = non_identity_words(n);
        size_t m = ops.size();
        std::vector<ExactMatrix> mats;
        for (const auto &p : ops) {
            mats.push_back(pauli_matrix(p));
        }
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m));
        for (size_t a = 0; a < m; a++) {
            for (size_t b = 0; b < m; b++) {
                adj[a][b] = a != b && (mats[a] * mats[b] - mats[b] * mats[a]).is_zero();
            }
        }

        std::set<std::set<std::string>> maximal_cliques;
        std::vector<size_t> clique;
        auto bron_kerbosch = [&](auto &self, std::vector<size_t> cand, std::vector<size_t> excl) -> void {
            if (cand.empty() && excl.empty()) {
                std::set<std::string> cell;
                for (size_t a : clique) {
                    cell.insert(ops[a].word());
                }
                maximal_cliques.insert(cell);
                return;
            }
            while (!cand.empty()) {
                size_t v = cand.back();
                cand.pop_back();
                std::vector<size_t> next_cand;
                std::vector<size_t> next_excl;
                for (size_t u : cand) {
                    if (adj[v][u]) {
                        next_cand.push_back(u);
                    }
                }
                for (size_t u : excl) {
                    if (adj[v][u]) {
                        next_excl.push_back(u);
                    }
                }
                clique.push_back(v);
                self(self, next_cand, next_excl);
                clique.pop_back();
                excl.push_back(v);
            }
        };
        std::vector<size_t> everything(m);
        std::iota(everything.begin(), everything.end(), 0);
        bron_kerbosch(bron_kerbosch, everything, {});

        std::set<std::set<std::string>> from_generators;
        for (const auto &gen : enumerate_generators(n)) {
            std::set<std::string> cell;
            for (const auto &p : mcs_of_generator(gen)) {
                cell.insert(p.word());
            }
            from_generators.insert(cell);
        }
        ASSERT_EQ(maximal_cliques, from_generators) << "n=" << n;
    }
}

TEST(mcs_of_generator, spread_cells_partition_all_operators) {
    for (size_t n = 1; n <= MAX_DESARGUESIAN_QUBITS; n++) {
        auto spread = desarguesian_spread(n);
        std::multiset<std::string> seen;
        for (const auto &block : spread.blocks()) {
            for (const auto &p : mcs_of_generator(block)) {
                seen.insert(p.word());
            }
        }
        ASSERT_EQ(spread.blocks().size(), (size_t{1} << n) + 1);
        ASSERT_EQ(seen.size(), (size_t{1} << (2 * n)) - 1);
        ASSERT_EQ(std::set<std::string>(seen.begin(), seen.end()).size(), seen.size());
    }
}
