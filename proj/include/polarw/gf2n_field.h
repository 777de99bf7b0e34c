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

#ifndef POLARW_GF2N_FIELD_H
#define POLARW_GF2N_FIELD_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polarw {

constexpr size_t MAX_FIELD_DEGREE = 5;

/// The fixed reduction polynomial for GF(2^n), bit k holding the x^k coefficient.
///   n=1: x+1   n=2: x^2+x+1   n=3: x^3+x+1   n=4: x^4+x+1   n=5: x^5+x^2+1
uint32_t field_modulus(size_t degree);

/// An element of GF(2^n) in the polynomial basis {1, x, ..., x^(n-1)}.
class FieldElement {
   public:
    FieldElement(size_t degree, uint32_t coeffs);

    static FieldElement zero(size_t degree);
    static FieldElement one(size_t degree);
    /// x^k reduced by the field modulus.
    static FieldElement monomial(size_t degree, size_t k);

    size_t degree() const {
        return degree_;
    }
    uint32_t coeffs() const {
        return coeffs_;
    }
    bool is_zero() const {
        return coeffs_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    bool operator==(const FieldElement &other) const = default;

    std::string str() const;

   private:
    uint8_t degree_;
    uint32_t coeffs_;
};

FieldElement fmul(const FieldElement &a, const FieldElement &b);
FieldElement fpow(const FieldElement &a, uint64_t exponent);
/// Multiplicative inverse; throws DomainError for zero.
FieldElement finverse(const FieldElement &a);

/// Absolute trace a + a^2 + a^4 + ... + a^(2^(n-1)), which lands in GF(2).
bool trace(const FieldElement &a);

/// All 2^n elements in ascending coefficient order.
std::vector<FieldElement> field_elements(size_t degree);

/// {1, x, ..., x^(n-1)}.
std::vector<FieldElement> polynomial_basis(size_t degree);

struct DualBasisPair {
    size_t degree;
    std::vector<FieldElement> primal;
    std::vector<FieldElement> dual;
};

/// The trace-dual of `primal`: the unique basis with Tr(primal_i * dual_j) = delta_ij.
///
/// Obtained by inverting the GF(2) Gram matrix G_ij = Tr(primal_i * primal_j). A
/// singular Gram matrix means `primal` is not a basis and raises DomainError. The
/// delta identities are re-verified on every call.
DualBasisPair dual_basis(std::span<const FieldElement> primal);

}  // namespace polarw

#endif
