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

#include "qbcap/hamiltonians.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qbcap/error.h"

namespace qbcap {

BatteryHamiltonian::BatteryHamiltonian(std::vector<double> eps, double gamma)
    : eps_(std::move(eps)), gamma_(gamma) {
    if (eps_.empty() || eps_.size() > 20) {
        throw Error(ErrorKind::BadHamiltonian, "need between 1 and 20 local energies, got " +
                                                   std::to_string(eps_.size()));
    }
    for (std::size_t i = 0; i < eps_.size(); ++i) {
        if (!std::isfinite(eps_[i]) || eps_[i] < 0.0) {
            throw Error(ErrorKind::BadHamiltonian,
                        "eps[" + std::to_string(i) + "] = " + std::to_string(eps_[i]) + " must be >= 0");
        }
        if (i > 0 && eps_[i] > eps_[i - 1]) {
            throw Error(ErrorKind::BadHamiltonian, "eps must be descending: eps[" + std::to_string(i) + "] > eps[" +
                                                       std::to_string(i - 1) + "]");
        }
    }
    if (!std::isfinite(gamma_) || gamma_ < 0.0) {
        throw Error(ErrorKind::BadHamiltonian, "gamma = " + std::to_string(gamma_) + " must be >= 0");
    }
}

std::vector<double> default_eps(int n) {
    std::vector<double> eps;
    for (int i = 0; i < n; ++i) {
        eps.push_back(i == 0 ? 0.5 : i == 1 ? 0.3 : 0.1);
    }
    return eps;
}

namespace {

// I (x) ... (x) op (x) ... (x) I with op on qubit `site` (1-based).
ComplexMatrix lift(const ComplexMatrix &op, int site, int n) {
    ComplexMatrix out = site == 1 ? op : pauli::identity2();
    for (int q = 2; q <= n; ++q) {
        out = kron(out, q == site ? op : pauli::identity2());
    }
    return out;
}

}  // namespace

ComplexMatrix build_hamiltonian(const BatteryHamiltonian &h) {
    const int n = h.n();
    ComplexMatrix total(std::size_t{1} << n);
    for (int site = 1; site <= n; ++site) {
        total += lift(local_hamiltonian(h.eps()[static_cast<std::size_t>(site - 1)]), site, n);
    }
    if (h.gamma() != 0.0) {
        ComplexMatrix coupling = pauli::sigma1();
        for (int q = 2; q <= n; ++q) {
            coupling = kron(coupling, pauli::sigma1());
        }
        total += h.gamma() * coupling;
    }
    return total;
}

std::vector<double> hamiltonian_spectrum(const BatteryHamiltonian &h) {
    const int n = h.n();
    const std::size_t d = std::size_t{1} << n;
    std::vector<double> values;
    values.reserve(d);
    // b and its complement give the same |E_b|, so half the bitstrings suffice.
    for (std::size_t b = 0; b < d / 2; ++b) {
        double energy = 0.0;
        for (int site = 1; site <= n; ++site) {
            const bool bit = (b >> (n - site)) & 1U;
            energy += bit ? -h.eps()[static_cast<std::size_t>(site - 1)] : h.eps()[static_cast<std::size_t>(site - 1)];
        }
        const double level = std::hypot(energy, h.gamma());
        values.push_back(level);
        values.push_back(-level);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

ComplexMatrix local_hamiltonian(double eps) {
    return {{eps, 0.0}, {0.0, -eps}};
}

BatteryHamiltonian subsystem_hamiltonian(const BatteryHamiltonian &h, std::span<const int> keep,
                                         bool include_interaction) {
    if (keep.empty()) {
        throw Error(ErrorKind::BadIndex, "subsystem keep set is empty");
    }
    std::vector<double> eps;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 1 || keep[k] > h.n()) {
            throw Error(ErrorKind::BadIndex, "qubit index " + std::to_string(keep[k]) + " out of range");
        }
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw Error(ErrorKind::BadIndex, "keep must be strictly ascending");
        }
        eps.push_back(h.eps()[static_cast<std::size_t>(keep[k] - 1)]);
    }
    const bool keep_coupling = include_interaction && keep.size() >= 2;
    return BatteryHamiltonian(std::move(eps), keep_coupling ? h.gamma() : 0.0);
}

BatteryHamiltonian subsystem_hamiltonian(const BatteryHamiltonian &h, std::initializer_list<int> keep,
                                         bool include_interaction) {
    return subsystem_hamiltonian(h, std::span<const int>(keep.begin(), keep.size()), include_interaction);
}

}  // namespace qbcap
