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

#ifndef QBCAP_CAPACITY_H
#define QBCAP_CAPACITY_H

#include <span>

#include "qbcap/battery_states.h"
#include "qbcap/hamiltonians.h"
#include "qbcap/matops.h"

namespace qbcap {

inline constexpr double kCapacityTolerance = 1e-10;

/// Battery capacity sum_i lambda_i (eps_i - eps_{d-1-i}) of a state with
/// spectrum `lambda` under a Hamiltonian with spectrum `eps`. Both must be
/// sorted descending; lambda must sum to 1 within 1e-10.
/// Throws Error{LengthMismatch | NotSorted | BadTrace}.
double capacity(std::span<const double> lambda, std::span<const double> eps);

/// The same quantity as sum_i eps_i (lambda_i - lambda_{d-1-i}). Kept separate
/// so the two orderings of the sum can be checked against each other.
double capacity_energy_form(std::span<const double> lambda, std::span<const double> eps);

double capacity_of(const XState &rho, const BatteryHamiltonian &h);
double capacity_of(const DensityMatrix &rho, const BatteryHamiltonian &h);

/// Capacity of the dephased state, a lower bound on capacity_of.
double capacity_lower_bound(const XState &rho, const BatteryHamiltonian &h);
double capacity_lower_bound(const DensityMatrix &rho, const BatteryHamiltonian &h);

struct SchurReport {
    bool majorized = false;  // spec(rho) majorized by spec(varrho)
    double c_rho = 0.0;
    double c_varrho = 0.0;
};

/// Throws Error{SchurViolation} if rho is majorized by varrho yet has the
/// larger capacity (beyond 1e-10), and Error{DimensionMismatch} on size
/// mismatch.
SchurReport schur_pair_check(const DensityMatrix &rho, const DensityMatrix &varrho, const BatteryHamiltonian &h);
SchurReport schur_pair_check(const XState &rho, const XState &varrho, const BatteryHamiltonian &h);

}  // namespace qbcap

#endif  // QBCAP_CAPACITY_H
