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

#include "qbcap/capacity.h"

#include <cmath>
#include <numeric>
#include <string>

#include "qbcap/error.h"

namespace qbcap {

namespace {

void check_capacity_inputs(std::span<const double> lambda, std::span<const double> eps) {
    if (lambda.size() != eps.size()) {
        throw Error(ErrorKind::LengthMismatch, "state spectrum has " + std::to_string(lambda.size()) +
                                                   " levels, Hamiltonian has " + std::to_string(eps.size()));
    }
    for (std::size_t i = 1; i < lambda.size(); ++i) {
        if (lambda[i] > lambda[i - 1]) {
            throw Error(ErrorKind::NotSorted, "state spectrum not descending at index " + std::to_string(i));
        }
        if (eps[i] > eps[i - 1]) {
            throw Error(ErrorKind::NotSorted, "Hamiltonian spectrum not descending at index " + std::to_string(i));
        }
    }
    const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    if (std::abs(total - 1.0) > kCapacityTolerance) {
        throw Error(ErrorKind::BadTrace, "state spectrum sums to " + std::to_string(total));
    }
}

void check_qubits(int state_n, const BatteryHamiltonian &h) {
    if (state_n != h.n()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(state_n) + "-qubit state with " + std::to_string(h.n()) + "-qubit Hamiltonian");
    }
}

}  // namespace

double capacity(std::span<const double> lambda, std::span<const double> eps) {
    check_capacity_inputs(lambda, eps);
    const std::size_t d = lambda.size();
    double c = 0.0;
    // Terms i and d-1-i pair up into a product of two nonnegative gaps, so a
    // flat spectrum gives exactly zero instead of a rounding residue.
    for (std::size_t i = 0; i < d / 2; ++i) {
        c += (lambda[i] - lambda[d - 1 - i]) * (eps[i] - eps[d - 1 - i]);
    }
    return c;
}

double capacity_energy_form(std::span<const double> lambda, std::span<const double> eps) {
    check_capacity_inputs(lambda, eps);
    const std::size_t d = lambda.size();
    double c = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        c += eps[i] * (lambda[i] - lambda[d - 1 - i]);
    }
    return c;
}

double capacity_of(const XState &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    return capacity(x_state_spectrum(rho), hamiltonian_spectrum(h));
}

double capacity_of(const DensityMatrix &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    return capacity(eig_hermitian(rho.matrix()).eigenvalues, hamiltonian_spectrum(h));
}

double capacity_lower_bound(const XState &rho, const BatteryHamiltonian &h) {
    return capacity_of(dephase(rho), h);
}

double capacity_lower_bound(const DensityMatrix &rho, const BatteryHamiltonian &h) {
    return capacity_of(dephase(rho), h);
}

namespace {

SchurReport schur_from_spectra(const std::vector<double> &spec_rho, const std::vector<double> &spec_varrho,
                               const BatteryHamiltonian &h) {
    if (spec_rho.size() != spec_varrho.size()) {
        throw Error(ErrorKind::DimensionMismatch, "Schur pair of different dimensions");
    }
    const auto levels = hamiltonian_spectrum(h);
    SchurReport report;
    report.majorized = is_majorized(spec_rho, spec_varrho, kCapacityTolerance);
    report.c_rho = capacity(spec_rho, levels);
    report.c_varrho = capacity(spec_varrho, levels);
    if (report.majorized && report.c_rho > report.c_varrho + kCapacityTolerance) {
        throw Error(ErrorKind::SchurViolation, "majorized state has capacity " + std::to_string(report.c_rho) +
                                                   " > " + std::to_string(report.c_varrho));
    }
    return report;
}

}  // namespace

SchurReport schur_pair_check(const DensityMatrix &rho, const DensityMatrix &varrho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    check_qubits(varrho.n(), h);
    return schur_from_spectra(eig_hermitian(rho.matrix()).eigenvalues, eig_hermitian(varrho.matrix()).eigenvalues, h);
}

SchurReport schur_pair_check(const XState &rho, const XState &varrho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    check_qubits(varrho.n(), h);
    return schur_from_spectra(x_state_spectrum(rho), x_state_spectrum(varrho), h);
}

}  // namespace qbcap
