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

#include "polarw/gf2_linear.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "polarw/errors.h"

namespace polarw {

namespace {

void require_qubit_count(size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > MAX_QUBITS) {
        throw CapacityError(
            "qubit count " + std::to_string(n_qubits) + " outside 1.." + std::to_string(MAX_QUBITS));
    }
}

uint64_t low_mask(size_t bits) {
    return (uint64_t{1} << bits) - 1;
}

size_t leading_coordinate_of(uint64_t packed, size_t n) {
    return 2 * n - 1 - static_cast<size_t>(std::bit_width(packed) - 1);
}

}  // namespace

SymplecticVector::SymplecticVector(size_t n_qubits, uint32_t x_bits, uint32_t z_bits) {
    require_qubit_count(n_qubits);
    if ((x_bits | z_bits) >> n_qubits) {
        throw std::invalid_argument("vector bits exceed the qubit count");
    }
    n_ = static_cast<uint8_t>(n_qubits);
    bits_ = (uint64_t{x_bits} << n_qubits) | z_bits;
}

SymplecticVector SymplecticVector::zero(size_t n_qubits) {
    return SymplecticVector(n_qubits, 0, 0);
}

SymplecticVector SymplecticVector::from_packed(size_t n_qubits, uint64_t packed) {
    require_qubit_count(n_qubits);
    if (packed >> (2 * n_qubits)) {
        throw std::invalid_argument("packed vector exceeds 2N bits");
    }
    return SymplecticVector(
        n_qubits, static_cast<uint32_t>(packed >> n_qubits), static_cast<uint32_t>(packed & low_mask(n_qubits)));
}

SymplecticVector SymplecticVector::from_str(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = text.substr(1, text.size() - 2);
    }
    auto bar = text.find('|');
    if (bar == std::string_view::npos || bar != text.size() - bar - 1) {
        throw std::invalid_argument("expected 'x-bits|z-bits' of equal length, got '" + std::string(text) + "'");
    }
    size_t n = bar;
    require_qubit_count(n);
    uint32_t x = 0;
    uint32_t z = 0;
    for (size_t k = 0; k < n; k++) {
        char cx = text[k];
        char cz = text[bar + 1 + k];
        if ((cx != '0' && cx != '1') || (cz != '0' && cz != '1')) {
            throw std::invalid_argument("non-binary digit in '" + std::string(text) + "'");
        }
        x = (x << 1) | static_cast<uint32_t>(cx == '1');
        z = (z << 1) | static_cast<uint32_t>(cz == '1');
    }
    return SymplecticVector(n, x, z);
}

bool SymplecticVector::x(size_t q) const {
    return (bits_ >> (2 * n_ - 1 - q)) & 1;
}

bool SymplecticVector::z(size_t q) const {
    return (bits_ >> (n_ - 1 - q)) & 1;
}

bool SymplecticVector::coordinate(size_t c) const {
    return (bits_ >> (2 * n_ - 1 - c)) & 1;
}

size_t SymplecticVector::leading_coordinate() const {
    if (bits_ == 0) {
        throw DomainError("the zero vector has no leading coordinate");
    }
    return leading_coordinate_of(bits_, n_);
}

SymplecticVector &SymplecticVector::operator^=(const SymplecticVector &other) {
    require_same_dimension(*this, other);
    bits_ ^= other.bits_;
    return *this;
}

SymplecticVector SymplecticVector::operator^(const SymplecticVector &other) const {
    SymplecticVector result = *this;
    result ^= other;
    return result;
}

std::strong_ordering SymplecticVector::operator<=>(const SymplecticVector &other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    return bits_ <=> other.bits_;
}

std::string SymplecticVector::str() const {
    std::string out;
    out.reserve(2 * n_ + 1);
    for (size_t q = 0; q < n_; q++) {
        out.push_back(x(q) ? '1' : '0');
    }
    out.push_back('|');
    for (size_t q = 0; q < n_; q++) {
        out.push_back(z(q) ? '1' : '0');
    }
    return out;
}

void require_same_dimension(const SymplecticVector &u, const SymplecticVector &v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw DimensionError(
            "qubit count mismatch: " + std::to_string(u.n_qubits()) + " vs " + std::to_string(v.n_qubits()));
    }
}

void require_point(const SymplecticVector &p) {
    if (p.is_zero()) {
        throw DomainError("the zero vector is not a point of the polar space");
    }
}

bool sp_form(const SymplecticVector &u, const SymplecticVector &v) {
    require_same_dimension(u, v);
    uint32_t cross = (u.x_bits() & v.z_bits()) ^ (u.z_bits() & v.x_bits());
    return std::popcount(cross) & 1;
}

std::vector<SymplecticVector> all_points(size_t n_qubits) {
    require_qubit_count(n_qubits);
    uint64_t end = uint64_t{1} << (2 * n_qubits);
    std::vector<SymplecticVector> out;
    out.reserve(end - 1);
    for (uint64_t b = 1; b < end; b++) {
        out.push_back(SymplecticVector::from_packed(n_qubits, b));
    }
    return out;
}

Subspace::Subspace(size_t n_qubits) : n_(n_qubits) {
    require_qubit_count(n_qubits);
}

bool Subspace::contains(const SymplecticVector &v) const {
    if (v.n_qubits() != n_) {
        throw DimensionError("qubit count mismatch between subspace and vector");
    }
    // Reduce against the RREF rows; v is in the span iff nothing is left.
    uint64_t rest = v.packed();
    for (const auto &row : basis_) {
        if (rest & (uint64_t{1} << (2 * n_ - 1 - row.leading_coordinate()))) {
            rest ^= row.packed();
        }
    }
    return rest == 0;
}

std::strong_ordering Subspace::operator<=>(const Subspace &other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    size_t common = std::min(basis_.size(), other.basis_.size());
    for (size_t k = 0; k < common; k++) {
        const auto &a = basis_[k];
        const auto &b = other.basis_[k];
        if (auto c = a.leading_coordinate() <=> b.leading_coordinate(); c != 0) {
            return c;
        }
        if (auto c = a.packed() <=> b.packed(); c != 0) {
            return c;
        }
    }
    return basis_.size() <=> other.basis_.size();
}

std::string Subspace::str() const {
    std::ostringstream out;
    out << "<";
    for (size_t k = 0; k < basis_.size(); k++) {
        if (k) {
            out << ", ";
        }
        out << basis_[k].str();
    }
    out << ">";
    return out.str();
}

Subspace rref(size_t n_qubits, std::span<const SymplecticVector> vectors) {
    Subspace result(n_qubits);
    std::vector<uint64_t> rows;
    rows.reserve(vectors.size());
    for (const auto &v : vectors) {
        if (v.n_qubits() != n_qubits) {
            throw DimensionError("rref input vectors must share the qubit count");
        }
        rows.push_back(v.packed());
    }

    size_t rank = 0;
    for (size_t c = 0; c < 2 * n_qubits && rank < rows.size(); c++) {
        uint64_t bit = uint64_t{1} << (2 * n_qubits - 1 - c);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & bit)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r] & bit)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }

    result.basis_.reserve(rank);
    for (size_t r = 0; r < rank; r++) {
        result.basis_.push_back(SymplecticVector::from_packed(n_qubits, rows[r]));
    }
    return result;
}

std::vector<SymplecticVector> span_points(const Subspace &s) {
    auto basis = s.basis();
    size_t n = s.n_qubits();
    std::vector<SymplecticVector> out;
    out.reserve((size_t{1} << basis.size()) - 1);
    // Gray-code walk: each step flips one basis row in or out.
    uint64_t acc = 0;
    for (uint64_t k = 1; k < (uint64_t{1} << basis.size()); k++) {
        acc ^= basis[std::countr_zero(k)].packed();
        out.push_back(SymplecticVector::from_packed(n, acc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_totally_isotropic(const Subspace &s) {
    auto basis = s.basis();
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = i + 1; j < basis.size(); j++) {
            if (sp_form(basis[i], basis[j])) {
                return false;
            }
        }
    }
    return true;
}

bool are_perpendicular(const SymplecticVector &p, const SymplecticVector &q) {
    require_point(p);
    require_point(q);
    return p != q && !sp_form(p, q);
}

PerpCensus perp_census(const SymplecticVector &p) {
    require_point(p);
    size_t n = p.n_qubits();
    PerpCensus census;
    uint64_t end = uint64_t{1} << (2 * n);
    for (uint64_t b = 1; b < end; b++) {
        if (b == p.packed()) {
            continue;
        }
        if (sp_form(p, SymplecticVector::from_packed(n, b))) {
            census.non_perpendicular++;
        } else {
            census.perpendicular++;
        }
    }
    return census;
}

}  // namespace polarw
