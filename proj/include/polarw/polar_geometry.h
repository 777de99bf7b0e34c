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

#ifndef POLARW_POLAR_GEOMETRY_H
#define POLARW_POLAR_GEOMETRY_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarw/big_int.h"
#include "polarw/gf2_linear.h"

namespace polarw {

constexpr size_t MAX_GENERATOR_QUBITS = 4;
constexpr size_t MAX_DESARGUESIAN_QUBITS = 5;
constexpr size_t MAX_SPREAD_SEARCH_QUBITS = 3;
constexpr size_t MAX_FULL_SPREAD_QUBITS = 2;

/// Closed-form sizes of the symplectic polar space W(2N-1, 2).
struct PolarSpaceParams {
    size_t n_qubits;
    uint64_t point_count;     // 4^N - 1
    BigInt generator_count;   // (2+1)(2^2+1)...(2^N+1)
    uint64_t generator_size;  // 2^N - 1
    uint64_t spread_size;     // 2^N + 1
    uint64_t non_perp_count;  // 2^(2N-1)
};

PolarSpaceParams params(size_t n_qubits);

/// All generators (rank-N totally isotropic subspaces), each exactly once, in
/// canonical Subspace order.
///
/// Depth-first: a partial RREF basis is extended by a row whose leading
/// coordinate is larger than every existing pivot and is zero in every existing
/// row, and which is sigma-orthogonal to every existing row. That only ever
/// builds canonical bases, so no dedup pass is needed. Capped at
/// MAX_GENERATOR_QUBITS; the CapacityError message carries the predicted count.
std::vector<Subspace> enumerate_generators(size_t n_qubits);

/// True iff no point outside `s` is perpendicular to all of `s`. Also computes
/// rank(s) == N and throws std::logic_error if the two characterizations ever
/// disagree. Throws DomainError when `s` is not totally isotropic.
bool is_maximal_isotropic(const Subspace &s);

/// A set of generators, kept sorted by each block's smallest point.
class Spread {
   public:
    Spread(size_t n_qubits, std::vector<Subspace> blocks);

    size_t n_qubits() const {
        return n_;
    }
    const std::vector<Subspace> &blocks() const {
        return blocks_;
    }

    bool operator==(const Spread &other) const = default;
    std::strong_ordering operator<=>(const Spread &other) const;

   private:
    size_t n_;
    std::vector<Subspace> blocks_;
};

/// Human-readable list of broken spread invariants; empty means valid.
std::vector<std::string> spread_violations(const Spread &spread);
bool is_valid_spread(const Spread &spread);

/// The spread {(0, b)} plus {(a, la) : a in GF(2^N)} for every l in GF(2^N).
///
/// A pair (a, b) maps to the symplectic vector whose x-part is a in the
/// polynomial basis and whose z-part is b in the trace-dual basis, which turns
/// Tr(ad) + Tr(bc) into the standard form.
Spread desarguesian_spread(size_t n_qubits);

/// Spreads found by exact cover of points by generators.
///
/// Without a limit (only N <= 2) every spread is returned, sorted. With a limit
/// the first `limit` covers in search order are returned, sorted. `threads`
/// splits the first branching column across workers; results are merged in
/// branch order so the output never depends on the thread count.
std::vector<Spread> enumerate_spreads(
    size_t n_qubits, std::optional<size_t> limit = std::nullopt, size_t threads = 1);

struct StructureCheck {
    std::string name;
    uint64_t expected;
    uint64_t actual;
    bool pass() const {
        return expected == actual;
    }
};

struct StructureReport {
    std::vector<StructureCheck> checks;
    bool ok() const;
};

/// Verifies that W(3, 2) is the generalized quadrangle of order two. Lines are
/// built from perpendicular point pairs rather than taken from
/// enumerate_generators, and collinearity is read off line incidence.
StructureReport gq22_structure_check();

}  // namespace polarw

#endif
