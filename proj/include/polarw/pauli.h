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

#ifndef POLARW_PAULI_H
#define POLARW_PAULI_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarw/big_int.h"
#include "polarw/gf2_linear.h"

namespace polarw {

/// Largest qubit count for which explicit matrices are built (dimension 64).
constexpr size_t MAX_ORACLE_QUBITS = 6;

/// A Pauli word over {I, X, Y, Z}, read left to right with qubit 1 leftmost.
///
/// Phases are discarded: a word names the class {P, -P, iP, -iP}. The point set
/// of the polar space has 4^N - 1 elements, which is exactly the number of
/// non-identity classes, and commutation does not depend on the phase.
class PauliOperator {
   public:
    /// Throws std::invalid_argument naming the first character outside IXYZ.
    explicit PauliOperator(std::string_view word);

    size_t n_qubits() const {
        return word_.size();
    }
    const std::string &word() const {
        return word_;
    }
    char letter(size_t q) const {
        return word_[q];
    }
    bool is_identity() const;

    bool operator==(const PauliOperator &other) const = default;
    std::strong_ordering operator<=>(const PauliOperator &other) const = default;

   private:
    std::string word_;
};

/// Letterwise encoding I=(0,0), X=(1,0), Z=(0,1), Y=(1,1) as (x_q, z_q). The
/// identity maps to the zero vector.
SymplecticVector symplectic_bits(const PauliOperator &p);
/// Inverse of symplectic_bits; the zero vector gives the identity word.
PauliOperator pauli_from_bits(const SymplecticVector &v);

/// The point of W(2N-1, 2) for a non-identity operator. Throws DomainError for
/// the identity.
SymplecticVector pauli_to_vector(const PauliOperator &p);
/// The operator for a point. Throws DomainError for the zero vector.
PauliOperator vector_to_pauli(const SymplecticVector &v);

/// sigma(p, q) == 0. Throws DimensionError on a qubit count mismatch and
/// DomainError if either operand is the identity.
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// a + bi with arbitrary-precision integer parts.
struct GaussianInt {
    BigInt re;
    BigInt im;

    bool is_zero() const {
        return re.is_zero() && im.is_zero();
    }
    GaussianInt operator+(const GaussianInt &o) const {
        return {re + o.re, im + o.im};
    }
    GaussianInt operator-(const GaussianInt &o) const {
        return {re - o.re, im - o.im};
    }
    GaussianInt operator-() const {
        return {-re, -im};
    }
    GaussianInt operator*(const GaussianInt &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt &o) const = default;
};

/// Square matrix over the Gaussian integers, row-major.
class ExactMatrix {
   public:
    explicit ExactMatrix(size_t dim);
    static ExactMatrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    const GaussianInt &at(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    GaussianInt &at(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    bool is_zero() const;

    ExactMatrix operator*(const ExactMatrix &other) const;
    ExactMatrix operator-(const ExactMatrix &other) const;
    ExactMatrix scaled(const GaussianInt &factor) const;
    bool operator==(const ExactMatrix &other) const = default;

    std::string str() const;

   private:
    size_t dim_;
    std::vector<GaussianInt> entries_;
};

ExactMatrix kron(const ExactMatrix &outer, const ExactMatrix &inner);

/// Kronecker product of the 2x2 letter matrices, leftmost letter outermost,
/// with Y = [[0, -i], [i, 0]]. Capped at MAX_ORACLE_QUBITS.
ExactMatrix pauli_matrix(const PauliOperator &p);

/// True iff AB - BA is exactly the zero matrix. Independent of sp_form.
bool commutes_matrix(const PauliOperator &p, const PauliOperator &q);

/// If `m` equals a unit (1, -1, i, -i) times some Pauli matrix, that Pauli word.
std::optional<PauliOperator> strip_phase(const ExactMatrix &m, size_t n_qubits);

struct OracleSweepResult {
    uint64_t pairs_checked = 0;
    uint64_t mismatches = 0;
};

/// Compares commutes() with commutes_matrix() on every ordered pair of
/// non-identity operators. Work is split by first operand across `threads`.
OracleSweepResult oracle_sweep(size_t n_qubits, size_t threads = 1);

/// The operators on a generator, sorted by word. Throws DomainError unless `g` is
/// rank N and totally isotropic, and std::logic_error if the result is not
/// maximal (some outside operator commutes with all of it).
std::vector<PauliOperator> mcs_of_generator(const Subspace &g);

}  // namespace polarw

#endif
