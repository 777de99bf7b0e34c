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

#ifndef POLARW_ERRORS_H
#define POLARW_ERRORS_H

#include <stdexcept>

namespace polarw {

/// Operands live in spaces of different size (qubit count or field degree).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The input is outside the domain of the operation (zero point, identity word,
/// non-isotropic subspace, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The request exceeds a supported size cap.
struct CapacityError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace polarw

#endif
