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

#ifndef QBCAP_BATTERY_STATES_H
#define QBCAP_BATTERY_STATES_H

#include <span>
#include <utility>
#include <vector>

#include "qbcap/matops.h"

namespace qbcap {

inline constexpr double kProbabilityTolerance = 1e-12;

/// n-qubit X-state stored as its main diagonal and the upper half of its
/// anti-diagonal: anti()[k] = rho(k, 2^n - 1 - k) for k < 2^(n-1) (0-based).
/// Construction validates unit trace, nonnegative diagonal and positivity of
/// every 2x2 block {k, 2^n - 1 - k}.
class XState {
   public:
    /// Throws Error{BadLength | BadTrace | NegativeDiagonal | BlockNotPSD}.
    XState(int n, std::vector<double> diag, std::vector<Complex> anti);

    int n() const noexcept {
        return n_;
    }
    std::size_t dim() const noexcept {
        return diag_.size();
    }
    std::span<const double> diag() const noexcept {
        return diag_;
    }
    std::span<const Complex> anti() const noexcept {
        return anti_;
    }
    bool is_incoherent() const;

    bool operator==(const XState &) const = default;

   private:
    int n_;
    std::vector<double> diag_;
    std::vector<Complex> anti_;
};

/// General n-qubit density matrix: Hermitian (1e-10), unit trace (1e-12),
/// smallest eigenvalue >= -1e-10.
class DensityMatrix {
   public:
    /// Throws Error{DimensionMismatch | NotHermitian | BadTrace | NotPSD}.
    DensityMatrix(int n, ComplexMatrix m);

    /// Skips validation; only for matrices that are states by construction
    /// (X-state expansion, permutation images of valid states).
    static DensityMatrix assume_valid(int n, ComplexMatrix m);

    int n() const noexcept {
        return n_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return m_;
    }

   private:
    struct Unchecked {};
    DensityMatrix(int n, ComplexMatrix m, Unchecked) : n_(n), m_(std::move(m)) {
    }

    int n_;
    ComplexMatrix m_;
};

XState make_x_state(int n, std::vector<double> diag, std::vector<Complex> anti);

/// X-state with zero anti-diagonal.
XState incoherent_state(int n, std::vector<double> diag);

/// (I + a1 s1 s1 + a2 s2 s2 + a3 s3 s3) / 4. Throws Error{NotAState} if any
/// of the four Bell-basis weights is negative.
XState bell_diagonal(double a1, double a2, double a3);

/// beta |GHZ><GHZ| + (1 - beta) I / 2^n. Throws Error{BadBeta} for beta
/// outside [0, 1] and Error{BadArity} for n < 2.
XState ghz_white_noise(int n, double beta);

/// Zero every off-diagonal entry.
XState dephase(const XState &x);
XState dephase(const DensityMatrix &rho);

/// Closed-form spectrum from the 2x2 blocks, sorted descending.
std::vector<double> x_state_spectrum(const XState &x);

DensityMatrix to_dense(const XState &x);

}  // namespace qbcap

#endif  // QBCAP_BATTERY_STATES_H
