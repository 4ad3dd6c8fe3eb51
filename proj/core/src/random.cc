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

#include "qbcap/random.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace qbcap {

double Rng::normal() {
    // Box-Muller; 1 - uniform() keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

XState random_x_state(Rng &rng, int n, bool incoherent) {
    const std::size_t d = std::size_t{1} << n;
    std::vector<double> diag(d);
    for (double &x : diag) {
        x = -std::log(1.0 - rng.uniform());
    }
    const double total = std::accumulate(diag.begin(), diag.end(), 0.0);
    for (double &x : diag) {
        x /= total;
    }
    std::vector<Complex> anti(d / 2);
    if (!incoherent) {
        for (std::size_t k = 0; k < d / 2; ++k) {
            const double radius = rng.uniform() * std::sqrt(diag[k] * diag[d - 1 - k]);
            anti[k] = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform());
        }
    }
    return XState(n, std::move(diag), std::move(anti));
}

BatteryHamiltonian random_hamiltonian(Rng &rng, int n, double gamma_max) {
    std::vector<double> eps(static_cast<std::size_t>(n));
    for (double &e : eps) {
        e = rng.uniform();
    }
    std::sort(eps.begin(), eps.end(), std::greater<>());
    return BatteryHamiltonian(std::move(eps), rng.uniform(0.0, gamma_max));
}

ComplexMatrix random_hermitian(Rng &rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = rng.normal();
        for (std::size_t c = r + 1; c < dim; ++c) {
            m(r, c) = Complex(rng.normal(), rng.normal());
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

ComplexMatrix random_density_matrix(Rng &rng, std::size_t dim) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            g(r, c) = Complex(rng.normal(), rng.normal());
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    // Exact Hermiticity after rounding.
    return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_unitary(Rng &rng, std::size_t dim, int rotations) {
    ComplexMatrix u = ComplexMatrix::identity(dim);
    if (dim < 2) {
        return u;
    }
    for (int k = 0; k < rotations; ++k) {
        const std::size_t p = rng.below(dim);
        std::size_t q = rng.below(dim - 1);
        if (q >= p) {
            ++q;
        }
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Complex phase = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Columns p, q of u times [[c, -s conj(phase)], [s phase, c]].
        for (std::size_t r = 0; r < dim; ++r) {
            const Complex up = u(r, p);
            const Complex uq = u(r, q);
            u(r, p) = c * up + s * phase * uq;
            u(r, q) = -s * std::conj(phase) * up + c * uq;
        }
    }
    return u;
}

Permutation random_permutation(Rng &rng, std::size_t dim) {
    std::vector<std::size_t> image(dim);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t i = dim; i > 1; --i) {
        std::swap(image[i - 1], image[rng.below(i)]);
    }
    return Permutation(std::move(image));
}

std::vector<double> random_doubly_stochastic_image(Rng &rng, std::span<const double> v, int terms) {
    std::vector<double> weights(static_cast<std::size_t>(terms));
    for (double &w : weights) {
        w = -std::log(1.0 - rng.uniform());
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> out(v.size(), 0.0);
    for (double w : weights) {
        const Permutation p = random_permutation(rng, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[p[i]] += (w / total) * v[i];
        }
    }
    return out;
}

}  // namespace qbcap
