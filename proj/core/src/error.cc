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

#include "qbcap/error.h"

namespace qbcap {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NoConvergence:
            return "NoConvergence";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::BadIndex:
            return "BadIndex";
        case ErrorKind::BadPermutation:
            return "BadPermutation";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::BadLength:
            return "BadLength";
        case ErrorKind::BadTrace:
            return "BadTrace";
        case ErrorKind::NegativeDiagonal:
            return "NegativeDiagonal";
        case ErrorKind::BlockNotPSD:
            return "BlockNotPSD";
        case ErrorKind::NotAState:
            return "NotAState";
        case ErrorKind::BadBeta:
            return "BadBeta";
        case ErrorKind::BadHamiltonian:
            return "BadHamiltonian";
        case ErrorKind::NotSorted:
            return "NotSorted";
        case ErrorKind::BadArity:
            return "BadArity";
        case ErrorKind::NotViolatedAtZero:
            return "NotViolatedAtZero";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::SchurViolation:
            return "SchurViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qbcap
