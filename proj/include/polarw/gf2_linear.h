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

#ifndef POLARW_GF2_LINEAR_H
#define POLARW_GF2_LINEAR_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polarw {

/// Largest supported qubit count. Each half of a vector fits in 24 bits.
constexpr size_t MAX_QUBITS = 12;

/// An element of V(2N, 2) split into an x-part and a z-part.
///
/// Coordinates are ordered x_1..x_N, z_1..z_N. Internally the vector is packed
/// into one word with coordinate c stored at bit (2N - 1 - c), so qubit 1 is the
/// most significant bit of the x-part and the packed integer reads like the
/// string "x_1..x_N|z_1..z_N". The zero vector is a valid value for linear
/// algebra but is never a point; point-level APIs reject it.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    SymplecticVector(size_t n_qubits, uint32_t x_bits, uint32_t z_bits);

    static SymplecticVector zero(size_t n_qubits);
    static SymplecticVector from_packed(size_t n_qubits, uint64_t packed);
    /// Parses "10|01" or "(10|01)".
    static SymplecticVector from_str(std::string_view text);

    size_t n_qubits() const {
        return n_;
    }
    uint64_t packed() const {
        return bits_;
    }
    uint32_t x_bits() const {
        return static_cast<uint32_t>(bits_ >> n_);
    }
    uint32_t z_bits() const {
        return static_cast<uint32_t>(bits_ & ((uint64_t{1} << n_) - 1));
    }
    /// x-bit of qubit q (0-based, leftmost letter is qubit 0).
    bool x(size_t q) const;
    bool z(size_t q) const;
    /// Value of coordinate c in the order x_1..x_N, z_1..z_N.
    bool coordinate(size_t c) const;
    bool is_zero() const {
        return bits_ == 0;
    }
    /// Index of the first nonzero coordinate. Requires a nonzero vector.
    size_t leading_coordinate() const;

    SymplecticVector &operator^=(const SymplecticVector &other);
    SymplecticVector operator^(const SymplecticVector &other) const;

    bool operator==(const SymplecticVector &other) const = default;
    std::strong_ordering operator<=>(const SymplecticVector &other) const;

    /// "x_1..x_N|z_1..z_N", e.g. "10|11".
    std::string str() const;

   private:
    uint8_t n_ = 0;
    uint64_t bits_ = 0;
};

/// Throws DimensionError unless both vectors have the same qubit count.
void require_same_dimension(const SymplecticVector &u, const SymplecticVector &v);
/// Throws DomainError for the zero vector.
void require_point(const SymplecticVector &p);

/// The standard alternating form sigma(u, v) = u.x . v.z + u.z . v.x (mod 2).
bool sp_form(const SymplecticVector &u, const SymplecticVector &v);

/// All 4^N - 1 nonzero vectors of V(2N, 2) in ascending packed order.
std::vector<SymplecticVector> all_points(size_t n_qubits);

/// A subspace of V(2N, 2) held by its reduced row echelon basis.
///
/// Basis rows are sorted by strictly increasing leading coordinate and every
/// leading coordinate is zero in all other rows, so equal subspaces have equal
/// bases and `==` is subspace equality.
class Subspace {
   public:
    /// The zero subspace.
    explicit Subspace(size_t n_qubits);

    size_t n_qubits() const {
        return n_;
    }
    size_t rank() const {
        return basis_.size();
    }
    std::span<const SymplecticVector> basis() const {
        return basis_;
    }
    bool contains(const SymplecticVector &v) const;

    bool operator==(const Subspace &other) const = default;
    /// Canonical order: row by row, compare (leading coordinate, packed value).
    std::strong_ordering operator<=>(const Subspace &other) const;

    std::string str() const;

   private:
    friend Subspace rref(size_t n_qubits, std::span<const SymplecticVector> vectors);
    size_t n_;
    std::vector<SymplecticVector> basis_;
};

/// Canonical basis of the span of `vectors`. Empty input gives the zero subspace.
Subspace rref(size_t n_qubits, std::span<const SymplecticVector> vectors);

/// Every nonzero vector of the subspace, ascending. Exactly 2^rank - 1 entries.
std::vector<SymplecticVector> span_points(const Subspace &s);

/// True iff sigma vanishes on the subspace.
///
/// Only basis pairs are checked: sigma is bilinear, so sigma(sum a_i b_i, sum c_j b_j)
/// expands into basis terms and vanishes when every sigma(b_i, b_j) does.
bool is_totally_isotropic(const Subspace &s);

/// Two distinct points are perpendicular iff sigma(p, q) = 0. Over GF(2) the line
/// through them is {p, q, p + q}, and that line is totally isotropic exactly when
/// sigma(p, q) = 0, so this matches "joined by a totally isotropic line".
bool are_perpendicular(const SymplecticVector &p, const SymplecticVector &q);

struct PerpCensus {
    uint64_t perpendicular = 0;
    uint64_t non_perpendicular = 0;
};

/// Counts the other points perpendicular / not perpendicular to `p` by a full scan.
PerpCensus perp_census(const SymplecticVector &p);

}  // namespace polarw

#endif
