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

#ifndef QBCAP_HAMILTONIANS_H
#define QBCAP_HAMILTONIANS_H

#include <initializer_list>
#include <span>
#include <vector>

#include "qbcap/matops.h"

namespace qbcap {

/// H = sum_i eps_i sigma3^(i) + gamma sigma1^(x n). Local energies must be
/// nonnegative and descending (qubit 1 carries the largest); gamma >= 0.
class BatteryHamiltonian {
   public:
    /// Throws Error{BadHamiltonian} when the ordering or sign constraints fail.
    BatteryHamiltonian(std::vector<double> eps, double gamma);

    int n() const noexcept {
        return static_cast<int>(eps_.size());
    }
    std::span<const double> eps() const noexcept {
        return eps_;
    }
    double gamma() const noexcept {
        return gamma_;
    }
    BatteryHamiltonian with_gamma(double gamma) const {
        return BatteryHamiltonian(eps_, gamma);
    }

    bool operator==(const BatteryHamiltonian &) const = default;

   private:
    std::vector<double> eps_;
    double gamma_;
};

/// (0.5, 0.3, 0.1, 0.1, ...) truncated to n sites: the default numerical
/// convention for GHZ sweeps.
std::vector<double> default_eps(int n);

ComplexMatrix build_hamiltonian(const BatteryHamiltonian &h);

/// Closed form: each bitstring b has E_b = sum_i eps_i (-1)^(b_i); the
/// interaction couples b with its complement, giving +-sqrt(E_b^2 + gamma^2).
/// Sorted descending.
std::vector<double> hamiltonian_spectrum(const BatteryHamiltonian &h);

/// eps * sigma3.
ComplexMatrix local_hamiltonian(double eps);

/// Restriction of the local energies to the qubits in `keep` (1-based,
/// strictly ascending). The coupling is dropped unless include_interaction is
/// set and |keep| >= 2, in which case gamma multiplies sigma1 on every kept
/// qubit. Marginal capacities are always evaluated with include_interaction
/// off, so subsystem energies are interaction-free.
BatteryHamiltonian subsystem_hamiltonian(const BatteryHamiltonian &h, std::span<const int> keep,
                                         bool include_interaction);
BatteryHamiltonian subsystem_hamiltonian(const BatteryHamiltonian &h, std::initializer_list<int> keep,
                                         bool include_interaction);

}  // namespace qbcap

#endif  // QBCAP_HAMILTONIANS_H
