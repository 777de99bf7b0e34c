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

#include "polarw/gf2n_field.h"

#include <array>
#include <bit>
#include <stdexcept>

#include "polarw/errors.h"

namespace polarw {

namespace {

constexpr std::array<uint32_t, MAX_FIELD_DEGREE + 1> MODULI = {
    0,
    0b11,
    0b111,
    0b1011,
    0b10011,
    0b100101,
};

void require_degree(size_t degree) {
    if (degree == 0 || degree > MAX_FIELD_DEGREE) {
        throw CapacityError(
            "field degree " + std::to_string(degree) + " outside 1.." + std::to_string(MAX_FIELD_DEGREE));
    }
}

void require_same_degree(const FieldElement &a, const FieldElement &b) {
    if (a.degree() != b.degree()) {
        throw DimensionError(
            "field degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
    }
}

uint32_t reduce(uint64_t poly, size_t degree) {
    uint64_t modulus = MODULI[degree];
    for (int k = std::bit_width(poly) - 1; k >= static_cast<int>(degree); k--) {
        if ((poly >> k) & 1) {
            poly ^= modulus << (k - degree);
        }
    }
    return static_cast<uint32_t>(poly);
}

}  // namespace

uint32_t field_modulus(size_t degree) {
    require_degree(degree);
    return MODULI[degree];
}

FieldElement::FieldElement(size_t degree, uint32_t coeffs) {
    require_degree(degree);
    if (coeffs >> degree) {
        throw std::invalid_argument("field element has more than n coefficients");
    }
    degree_ = static_cast<uint8_t>(degree);
    coeffs_ = coeffs;
}

FieldElement FieldElement::zero(size_t degree) {
    return FieldElement(degree, 0);
}

FieldElement FieldElement::one(size_t degree) {
    return FieldElement(degree, 1);
}

FieldElement FieldElement::monomial(size_t degree, size_t k) {
    require_degree(degree);
    return FieldElement(degree, reduce(uint64_t{1} << k, degree));
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same_degree(*this, other);
    return FieldElement(degree_, coeffs_ ^ other.coeffs_);
}

std::string FieldElement::str() const {
    if (coeffs_ == 0) {
        return "0";
    }
    std::string out;
    for (int k = static_cast<int>(degree_) - 1; k >= 0; k--) {
        if (!((coeffs_ >> k) & 1)) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += "1";
        } else if (k == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(k);
        }
    }
    return out;
}

FieldElement fmul(const FieldElement &a, const FieldElement &b) {
    require_same_degree(a, b);
    uint64_t product = 0;
    for (size_t k = 0; k < a.degree(); k++) {
        if ((b.coeffs() >> k) & 1) {
            product ^= uint64_t{a.coeffs()} << k;
        }
    }
    return FieldElement(a.degree(), reduce(product, a.degree()));
}

FieldElement fpow(const FieldElement &a, uint64_t exponent) {
    FieldElement result = FieldElement::one(a.degree());
    FieldElement base = a;
    while (exponent) {
        if (exponent & 1) {
            result = fmul(result, base);
        }
        base = fmul(base, base);
        exponent >>= 1;
    }
    return result;
}

FieldElement finverse(const FieldElement &a) {
    if (a.is_zero()) {
        throw DomainError("zero has no multiplicative inverse");
    }
    // The multiplicative group has order 2^n - 1.
    return fpow(a, (uint64_t{1} << a.degree()) - 2);
}

bool trace(const FieldElement &a) {
    FieldElement sum = FieldElement::zero(a.degree());
    FieldElement term = a;
    for (size_t k = 0; k < a.degree(); k++) {
        sum = sum + term;
        term = fmul(term, term);
    }
    if (sum.coeffs() > 1) {
        throw std::logic_error("trace left the prime field");
    }
    return sum.coeffs() == 1;
}

std::vector<FieldElement> field_elements(size_t degree) {
    require_degree(degree);
    std::vector<FieldElement> out;
    for (uint32_t c = 0; c < (uint32_t{1} << degree); c++) {
        out.emplace_back(degree, c);
    }
    return out;
}

std::vector<FieldElement> polynomial_basis(size_t degree) {
    require_degree(degree);
    std::vector<FieldElement> out;
    for (size_t k = 0; k < degree; k++) {
        out.push_back(FieldElement::monomial(degree, k));
    }
    return out;
}

DualBasisPair dual_basis(std::span<const FieldElement> primal) {
    if (primal.empty()) {
        throw DomainError("not a basis: empty list");
    }
    size_t n = primal[0].degree();
    for (const auto &e : primal) {
        require_same_degree(e, primal[0]);
    }
    if (primal.size() != n) {
        throw DomainError(
            "not a basis: " + std::to_string(primal.size()) + " elements for degree " + std::to_string(n));
    }

    // Gauss-Jordan on [G | I], rows packed as bitmasks: low n bits hold G, the
    // next n bits hold the identity block that becomes G^-1.
    std::vector<uint32_t> rows(n);
    for (size_t i = 0; i < n; i++) {
        uint32_t row = uint32_t{1} << (n + i);
        for (size_t j = 0; j < n; j++) {
            if (trace(fmul(primal[i], primal[j]))) {
                row |= uint32_t{1} << j;
            }
        }
        rows[i] = row;
    }
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        while (pivot < n && !((rows[pivot] >> col) & 1)) {
            pivot++;
        }
        if (pivot == n) {
            throw DomainError("not a basis: trace Gram matrix is singular");
        }
        std::swap(rows[col], rows[pivot]);
        for (size_t r = 0; r < n; r++) {
            if (r != col && ((rows[r] >> col) & 1)) {
                rows[r] ^= rows[col];
            }
        }
    }

    // dual_j = sum_k (G^-1)_jk primal_k.
    DualBasisPair pair{n, std::vector<FieldElement>(primal.begin(), primal.end()), {}};
    for (size_t j = 0; j < n; j++) {
        FieldElement d = FieldElement::zero(n);
        for (size_t k = 0; k < n; k++) {
            if ((rows[j] >> (n + k)) & 1) {
                d = d + primal[k];
            }
        }
        pair.dual.push_back(d);
    }

    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (trace(fmul(pair.primal[i], pair.dual[j])) != (i == j)) {
                throw std::logic_error("dual basis failed Tr(primal_i * dual_j) = delta_ij");
            }
        }
    }
    return pair;
}

}  // namespace polarw
