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

#ifndef QBCAP_RANDOM_H
#define QBCAP_RANDOM_H

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qbcap/battery_states.h"
#include "qbcap/hamiltonians.h"
#include "qbcap/matops.h"

namespace qbcap {

/// Seeded source for the fuzzing generators. Draws are derived from the raw
/// mt19937_64 stream so a seed reproduces the same samples on every platform
/// (std distributions are implementation-defined).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }
    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }
    /// Uniform on {0, ..., n - 1}.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n));
    }
    double normal();

   private:
    std::mt19937_64 engine_;
};

/// Flat-Dirichlet diagonal; each |anti[k]| uniform in [0, sqrt(d_k d_{D-1-k})]
/// with a uniform phase, so every block is positive by construction.
XState random_x_state(Rng &rng, int n, bool incoherent = false);

/// Descending local energies uniform in [0, 1] and gamma uniform in
/// [0, gamma_max].
BatteryHamiltonian random_hamiltonian(Rng &rng, int n, double gamma_max);

/// Gaussian Hermitian matrix.
ComplexMatrix random_hermitian(Rng &rng, std::size_t dim);

/// G G^dagger / tr(G G^dagger) for Gaussian G.
ComplexMatrix random_density_matrix(Rng &rng, std::size_t dim);

/// Product of `rotations` random complex Givens rotations.
ComplexMatrix random_unitary(Rng &rng, std::size_t dim, int rotations);

Permutation random_permutation(Rng &rng, std::size_t dim);

/// Q v where Q is a random convex combination of `terms` permutation
/// matrices (hence doubly stochastic).
std::vector<double> random_doubly_stochastic_image(Rng &rng, std::span<const double> v, int terms);

}  // namespace qbcap

#endif  // QBCAP_RANDOM_H
