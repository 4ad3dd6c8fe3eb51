// Copyright 2026 The qbcap Authors
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

#ifndef QBCAP_ERROR_H
#define QBCAP_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbcap {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    NotPSD,
    BadIndex,
    BadPermutation,
    LengthMismatch,
    DimensionMismatch,
    BadLength,
    BadTrace,
    NegativeDiagonal,
    BlockNotPSD,
    NotAState,
    BadBeta,
    BadHamiltonian,
    NotSorted,
    BadArity,
    NotViolatedAtZero,
    TooLarge,
    SchurViolation,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies which contract was
/// broken; `what()` carries the offending field or index.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace qbcap

#endif  // QBCAP_ERROR_H
