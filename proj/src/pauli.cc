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

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

#include "polarw/errors.h"

namespace polarw {

namespace {

void require_same_qubits(const PauliOperator &p, const PauliOperator &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw DimensionError(
            "Pauli words of different length: '" + p.word() + "' and '" + q.word() + "'");
    }
}

void require_oracle_size(size_t n_qubits) {
    if (n_qubits > MAX_ORACLE_QUBITS) {
        throw CapacityError(
            "matrix oracle supports N <= " + std::to_string(MAX_ORACLE_QUBITS) + ", got N=" +
            std::to_string(n_qubits));
    }
}

ExactMatrix letter_matrix(char letter) {
    ExactMatrix m(2);
    switch (letter) {
        case 'I':
            m.at(0, 0) = {1, 0};
            m.at(1, 1) = {1, 0};
            break;
        case 'X':
            m.at(0, 1) = {1, 0};
            m.at(1, 0) = {1, 0};
            break;
        case 'Y':
            m.at(0, 1) = {0, -1};
            m.at(1, 0) = {0, 1};
            break;
        case 'Z':
            m.at(0, 0) = {1, 0};
            m.at(1, 1) = {-1, 0};
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
    }
    return m;
}

}  // namespace

PauliOperator::PauliOperator(std::string_view word) : word_(word) {
    if (word_.empty()) {
        throw std::invalid_argument("empty Pauli word");
    }
    for (size_t k = 0; k < word_.size(); k++) {
        char c = word_[k];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument(
                "invalid character '" + std::string(1, c) + "' at position " + std::to_string(k + 1) +
                " of Pauli word '" + word_ + "' (allowed: I, X, Y, Z)");
        }
    }
}

bool PauliOperator::is_identity() const {
    return std::all_of(word_.begin(), word_.end(), [](char c) {
        return c == 'I';
    });
}

SymplecticVector symplectic_bits(const PauliOperator &p) {
    size_t n = p.n_qubits();
    uint32_t x = 0;
    uint32_t z = 0;
    for (size_t q = 0; q < n; q++) {
        char c = p.letter(q);
        uint32_t bit = uint32_t{1} << (n - 1 - q);
        if (c == 'X' || c == 'Y') {
            x |= bit;
        }
        if (c == 'Z' || c == 'Y') {
            z |= bit;
        }
    }
    return SymplecticVector(n, x, z);
}

PauliOperator pauli_from_bits(const SymplecticVector &v) {
    static constexpr std::array<char, 4> LETTERS = {'I', 'Z', 'X', 'Y'};  // index 2x + z
    std::string word;
    for (size_t q = 0; q < v.n_qubits(); q++) {
        word.push_back(LETTERS[2 * v.x(q) + v.z(q)]);
    }
    return PauliOperator(word);
}

SymplecticVector pauli_to_vector(const PauliOperator &p) {
    if (p.is_identity()) {
        throw DomainError("the identity '" + p.word() + "' is excluded from the point set");
    }
    return symplectic_bits(p);
}

PauliOperator vector_to_pauli(const SymplecticVector &v) {
    require_point(v);
    return pauli_from_bits(v);
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_qubits(p, q);
    return !sp_form(pauli_to_vector(p), pauli_to_vector(q));
}

ExactMatrix::ExactMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
}

ExactMatrix ExactMatrix::identity(size_t dim) {
    ExactMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = {1, 0};
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const GaussianInt &g) {
        return g.is_zero();
    });
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("matrix dimension mismatch");
    }
    ExactMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            const auto &a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                const auto &b = other.at(k, j);
                if (!b.is_zero()) {
                    out.at(i, j) = out.at(i, j) + a * b;
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("matrix dimension mismatch");
    }
    ExactMatrix out(dim_);
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] = entries_[k] - other.entries_[k];
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const GaussianInt &factor) const {
    ExactMatrix out(dim_);
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] = entries_[k] * factor;
    }
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < dim_; i++) {
        out << "[";
        for (size_t j = 0; j < dim_; j++) {
            const auto &g = at(i, j);
            out << (j ? " " : "") << g.re;
            if (!g.im.is_zero()) {
                out << (g.im > 0 ? "+" : "") << g.im << "i";
            }
        }
        out << "]\n";
    }
    return out.str();
}

ExactMatrix kron(const ExactMatrix &outer, const ExactMatrix &inner) {
    size_t d = inner.dim();
    ExactMatrix out(outer.dim() * d);
    for (size_t i = 0; i < outer.dim(); i++) {
        for (size_t j = 0; j < outer.dim(); j++) {
            const auto &a = outer.at(i, j);
            if (a.is_zero()) {
                continue;
            }
            for (size_t k = 0; k < d; k++) {
                for (size_t l = 0; l < d; l++) {
                    out.at(i * d + k, j * d + l) = a * inner.at(k, l);
                }
            }
        }
    }
    return out;
}

ExactMatrix pauli_matrix(const PauliOperator &p) {
    require_oracle_size(p.n_qubits());
    ExactMatrix m = letter_matrix(p.letter(0));
    for (size_t q = 1; q < p.n_qubits(); q++) {
        m = kron(m, letter_matrix(p.letter(q)));
    }
    return m;
}

bool commutes_matrix(const PauliOperator &p, const PauliOperator &q) {
    require_same_qubits(p, q);
    require_oracle_size(p.n_qubits());
    ExactMatrix a = pauli_matrix(p);
    ExactMatrix b = pauli_matrix(q);
    return (a * b - b * a).is_zero();
}

std::optional<PauliOperator> strip_phase(const ExactMatrix &m, size_t n_qubits) {
    require_oracle_size(n_qubits);
    if (m.dim() != (size_t{1} << n_qubits)) {
        throw DimensionError("matrix dimension does not match the qubit count");
    }
    // A Pauli matrix sends basis state |j> to a multiple of |j xor x>, and the
    // ratio of its entries along column e_q tells whether qubit q carries a Z.
    size_t shift = m.dim();
    for (size_t r = 0; r < m.dim(); r++) {
        if (!m.at(r, 0).is_zero()) {
            shift = r;
            break;
        }
    }
    if (shift == m.dim()) {
        return std::nullopt;
    }
    const GaussianInt &base = m.at(shift, 0);
    uint32_t z = 0;
    for (size_t q = 0; q < n_qubits; q++) {
        size_t e = size_t{1} << (n_qubits - 1 - q);
        const GaussianInt &entry = m.at(e ^ shift, e);
        if (entry == -base) {
            z |= static_cast<uint32_t>(e);
        } else if (entry != base) {
            return std::nullopt;
        }
    }
    PauliOperator candidate = pauli_from_bits(SymplecticVector(n_qubits, static_cast<uint32_t>(shift), z));
    ExactMatrix reference = pauli_matrix(candidate);
    for (GaussianInt unit : {GaussianInt{1, 0}, GaussianInt{-1, 0}, GaussianInt{0, 1}, GaussianInt{0, -1}}) {
        if (reference.scaled(unit) == m) {
            return candidate;
        }
    }
    return std::nullopt;
}

OracleSweepResult oracle_sweep(size_t n_qubits, size_t threads) {
    require_oracle_size(n_qubits);
    std::vector<PauliOperator> ops;
    std::vector<ExactMatrix> mats;
    for (const auto &v : all_points(n_qubits)) {
        ops.push_back(vector_to_pauli(v));
        mats.push_back(pauli_matrix(ops.back()));
    }

    threads = std::clamp<size_t>(threads, 1, ops.size());
    std::vector<OracleSweepResult> partial(threads);
    auto work = [&](size_t t) {
        for (size_t i = t; i < ops.size(); i += threads) {
            for (size_t j = 0; j < ops.size(); j++) {
                bool by_matrix = (mats[i] * mats[j] - mats[j] * mats[i]).is_zero();
                partial[t].pairs_checked++;
                partial[t].mismatches += by_matrix != commutes(ops[i], ops[j]);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    OracleSweepResult total;
    for (const auto &r : partial) {
        total.pairs_checked += r.pairs_checked;
        total.mismatches += r.mismatches;
    }
    return total;
}

std::vector<PauliOperator> mcs_of_generator(const Subspace &g) {
    size_t n = g.n_qubits();
    if (g.rank() != n || !is_totally_isotropic(g)) {
        throw DomainError("not a generator: " + g.str());
    }
    std::vector<PauliOperator> out;
    for (const auto &v : span_points(g)) {
        out.push_back(vector_to_pauli(v));
    }
    std::sort(out.begin(), out.end());

    uint64_t end = uint64_t{1} << (2 * n);
    for (uint64_t b = 1; b < end; b++) {
        auto v = SymplecticVector::from_packed(n, b);
        if (g.contains(v)) {
            continue;
        }
        bool commutes_with_all = std::none_of(g.basis().begin(), g.basis().end(), [&](const SymplecticVector &row) {
            return sp_form(row, v);
        });
        if (commutes_with_all) {
            throw std::logic_error("operator " + vector_to_pauli(v).word() + " extends the MCS of " + g.str());
        }
    }
    return out;
}

}  // namespace polarw
