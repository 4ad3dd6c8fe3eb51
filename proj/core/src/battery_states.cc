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

#include "qbcap/battery_states.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qbcap/error.h"

namespace qbcap {

XState::XState(int n, std::vector<double> diag, std::vector<Complex> anti)
    : n_(n), diag_(std::move(diag)), anti_(std::move(anti)) {
    if (n < 1 || n > 20) {
        throw Error(ErrorKind::BadLength, "qubit count " + std::to_string(n) + " out of range [1, 20]");
    }
    const std::size_t d = std::size_t{1} << n;
    if (diag_.size() != d) {
        throw Error(ErrorKind::BadLength,
                    "diag has length " + std::to_string(diag_.size()) + ", expected " + std::to_string(d));
    }
    if (anti_.size() != d / 2) {
        throw Error(ErrorKind::BadLength,
                    "anti has length " + std::to_string(anti_.size()) + ", expected " + std::to_string(d / 2));
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!std::isfinite(diag_[i])) {
            throw Error(ErrorKind::BadLength, "diag[" + std::to_string(i) + "] is not finite");
        }
        if (diag_[i] < -kProbabilityTolerance) {
            throw Error(ErrorKind::NegativeDiagonal,
                        "diag[" + std::to_string(i) + "] = " + std::to_string(diag_[i]) + " is negative");
        }
    }
    const double total = std::accumulate(diag_.begin(), diag_.end(), 0.0);
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorKind::BadTrace, "diag sums to " + std::to_string(total));
    }
    for (std::size_t k = 0; k < d / 2; ++k) {
        const Complex z = anti_[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::BadLength, "anti[" + std::to_string(k) + "] is not finite");
        }
        if (diag_[k] * diag_[d - 1 - k] < std::norm(z) - kProbabilityTolerance) {
            throw Error(ErrorKind::BlockNotPSD, "block " + std::to_string(k) + ": diag product " +
                                                    std::to_string(diag_[k] * diag_[d - 1 - k]) + " < |anti|^2 " +
                                                    std::to_string(std::norm(z)));
        }
    }
}

bool XState::is_incoherent() const {
    return std::all_of(anti_.begin(), anti_.end(), [](const Complex &z) { return z == Complex{}; });
}

DensityMatrix::DensityMatrix(int n, ComplexMatrix m) : n_(n), m_(std::move(m)) {
    if (n < 1 || n > 20 || m_.dim() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dense matrix of dimension " + std::to_string(m_.dim()) + " for n = " + std::to_string(n));
    }
    // eig_hermitian reports NotHermitian.
    const auto spectrum = eig_hermitian(m_);
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorKind::BadTrace, "trace is " + std::to_string(tr));
    }
    if (spectrum.eigenvalues.back() < -kHermitianTolerance) {
        throw Error(ErrorKind::NotPSD, "smallest eigenvalue " + std::to_string(spectrum.eigenvalues.back()));
    }
}

DensityMatrix DensityMatrix::assume_valid(int n, ComplexMatrix m) {
    if (n < 1 || n > 20 || m.dim() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dense matrix of dimension " + std::to_string(m.dim()) + " for n = " + std::to_string(n));
    }
    return DensityMatrix(n, std::move(m), Unchecked{});
}

XState make_x_state(int n, std::vector<double> diag, std::vector<Complex> anti) {
    return XState(n, std::move(diag), std::move(anti));
}

XState incoherent_state(int n, std::vector<double> diag) {
    const std::size_t half = n >= 1 && n <= 20 ? (std::size_t{1} << n) / 2 : 0;
    return XState(n, std::move(diag), std::vector<Complex>(half));
}

XState bell_diagonal(double a1, double a2, double a3) {
    const double weights[4] = {
        (1 - a1 - a2 - a3) / 4,
        (1 - a1 + a2 + a3) / 4,
        (1 + a1 - a2 + a3) / 4,
        (1 + a1 + a2 - a3) / 4,
    };
    for (int k = 0; k < 4; ++k) {
        if (weights[k] < -kProbabilityTolerance) {
            throw Error(ErrorKind::NotAState, "Bell-basis weight " + std::to_string(k) + " = " +
                                                  std::to_string(weights[k]) + " is negative");
        }
    }
    return XState(2, {(1 + a3) / 4, (1 - a3) / 4, (1 - a3) / 4, (1 + a3) / 4},
                  {Complex((a1 - a2) / 4), Complex((a1 + a2) / 4)});
}

XState ghz_white_noise(int n, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw Error(ErrorKind::BadBeta, "beta = " + std::to_string(beta) + " outside [0, 1]");
    }
    if (n < 2 || n > 20) {
        throw Error(ErrorKind::BadArity, "GHZ state needs 2 <= n <= 20, got " + std::to_string(n));
    }
    const std::size_t d = std::size_t{1} << n;
    const double noise = (1.0 - beta) / static_cast<double>(d);
    std::vector<double> diag(d, noise);
    diag.front() += beta / 2;
    diag.back() += beta / 2;
    std::vector<Complex> anti(d / 2);
    anti.front() = beta / 2;
    return XState(n, std::move(diag), std::move(anti));
}

XState dephase(const XState &x) {
    return incoherent_state(x.n(), std::vector<double>(x.diag().begin(), x.diag().end()));
}

XState dephase(const DensityMatrix &rho) {
    return incoherent_state(rho.n(), rho.matrix().real_diagonal());
}

std::vector<double> x_state_spectrum(const XState &x) {
    const std::size_t d = x.dim();
    std::vector<double> values;
    values.reserve(d);
    for (std::size_t k = 0; k < d / 2; ++k) {
        const double a = x.diag()[k];
        const double b = x.diag()[d - 1 - k];
        if (x.anti()[k] == Complex{}) {
            values.push_back(a);
            values.push_back(b);
            continue;
        }
        const double root = std::sqrt((a - b) * (a - b) + 4.0 * std::norm(x.anti()[k]));
        values.push_back(0.5 * (a + b + root));
        values.push_back(0.5 * (a + b - root));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

DensityMatrix to_dense(const XState &x) {
    const std::size_t d = x.dim();
    ComplexMatrix m = ComplexMatrix::diagonal(x.diag());
    for (std::size_t k = 0; k < d / 2; ++k) {
        m(k, d - 1 - k) = x.anti()[k];
        m(d - 1 - k, k) = std::conj(x.anti()[k]);
    }
    return DensityMatrix::assume_valid(x.n(), std::move(m));
}

}  // namespace qbcap
