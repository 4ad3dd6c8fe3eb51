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

#include "qbcap/gain_optimizer.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <string>

#include "qbcap/capacity.h"
#include "qbcap/distribution.h"
#include "qbcap/error.h"

namespace qbcap {

namespace {

constexpr double kRatioFloor = 1e-12;
constexpr double kTieTolerance = 1e-12;

double sum(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

std::vector<std::size_t> descending_order(std::span<const double> diag) {
    std::vector<std::size_t> order(diag.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] > diag[b]; });
    return order;
}

std::size_t factorial(std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

std::string_view strategy_name(GainStrategy s) {
    switch (s) {
        case GainStrategy::Exhaustive:
            return "exhaustive";
        case GainStrategy::SortDiagonal:
            return "sort-diagonal";
        case GainStrategy::TheoremPattern:
            return "theorem-pattern";
    }
    return "?";
}

GainStrategy parse_strategy(std::string_view name) {
    for (GainStrategy s : {GainStrategy::Exhaustive, GainStrategy::SortDiagonal, GainStrategy::TheoremPattern}) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    throw Error(ErrorKind::BadIndex, "unknown strategy '" + std::string(name) + "'");
}

GainResult apply_gain_permutation(const XState &rho, const BatteryHamiltonian &h, const Permutation &pi) {
    if (pi.size() != rho.dim()) {
        throw Error(ErrorKind::BadPermutation, "permutation of size " + std::to_string(pi.size()) + " for dimension " +
                                                   std::to_string(rho.dim()));
    }
    const DensityMatrix before = to_dense(rho);
    const DensityMatrix after =
        DensityMatrix::assume_valid(rho.n(), conjugate_by_permutation(before.matrix(), pi));

    GainResult result;
    result.permutation = pi;
    result.marginals_before = marginal_capacities(before, h);
    result.marginals_after = marginal_capacities(after, h);
    result.total_before = capacity_of(rho, h);
    result.total_after = capacity_of(after, h);
    result.rbc_before = result.total_before - sum(result.marginals_before);
    result.rbc_after = result.total_after - sum(result.marginals_after);
    result.gain = sum(result.marginals_after) - sum(result.marginals_before);
    if (result.rbc_before > kRatioFloor) {
        result.ratio = result.gain / result.rbc_before;
    }
    return result;
}

double permuted_marginal_sum(const XState &rho, const BatteryHamiltonian &h, const Permutation &pi) {
    const int n = rho.n();
    const std::size_t d = rho.dim();
    if (pi.size() != d) {
        throw Error(ErrorKind::BadPermutation, "permutation size mismatch");
    }
    if (h.n() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and state qubit counts differ");
    }
    std::vector<double> diag(d);
    for (std::size_t i = 0; i < d; ++i) {
        diag[pi[i]] = rho.diag()[i];
    }
    double total = 0.0;
    for (int q = 1; q <= n; ++q) {
        const std::size_t bit = std::size_t{1} << (n - q);
        // Population difference summed pairwise so that balanced pairs cancel
        // exactly.
        double imbalance = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(i & bit)) {
                imbalance += diag[i] - diag[i | bit];
            }
        }
        Complex coherence = 0.0;
        for (std::size_t k = 0; k < d / 2; ++k) {
            const std::size_t row = pi[k];
            const std::size_t col = pi[d - 1 - k];
            if ((row ^ col) == bit) {
                coherence += (row & bit) ? std::conj(rho.anti()[k]) : rho.anti()[k];
            }
        }
        // Eigenvalue gap of [[p0, c], [c*, p1]] times the level gap 2 eps.
        total += 2.0 * h.eps()[static_cast<std::size_t>(q - 1)] * std::sqrt(imbalance * imbalance + 4.0 * std::norm(coherence));
    }
    return total;
}

Permutation theorem2_permutation(const XState &rho) {
    if (rho.n() != 2) {
        throw Error(ErrorKind::BadArity, "two-qubit construction on a " + std::to_string(rho.n()) + "-qubit state");
    }
    if (equality_ordering_check(rho.diag()).matches) {
        return Permutation::identity(rho.dim());
    }
    const auto order = descending_order(rho.diag());
    std::optional<Permutation> best;
    std::size_t best_moved = rho.dim() + 1;
    for (std::size_t mask = 0; mask < rho.dim(); ++mask) {
        std::vector<std::size_t> image(rho.dim());
        for (std::size_t k = 0; k < rho.dim(); ++k) {
            image[order[k]] = k ^ mask;
        }
        std::size_t moved = 0;
        for (std::size_t i = 0; i < image.size(); ++i) {
            moved += image[i] != i;
        }
        if (moved < best_moved) {
            best_moved = moved;
            best = Permutation(std::move(image));
        }
    }
    return *best;
}

Permutation sort_diagonal_permutation(std::span<const double> diag) {
    const auto order = descending_order(diag);
    std::vector<std::size_t> image(diag.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        image[order[k]] = k;
    }
    return Permutation(std::move(image));
}

Permutation theorem_pattern_permutation(int n) {
    const std::size_t d = std::size_t{1} << n;
    return Permutation::transposition(d, 1 % d, d - 1);
}

namespace {

// Evaluates every permutation whose image starts with `first`, in
// lexicographic order.
std::vector<double> gains_with_first(const XState &rho, const BatteryHamiltonian &h, std::size_t first,
                                     double baseline) {
    const std::size_t d = rho.dim();
    std::vector<std::size_t> image(d);
    image[0] = first;
    std::size_t slot = 1;
    for (std::size_t v = 0; v < d; ++v) {
        if (v != first) {
            image[slot++] = v;
        }
    }
    std::vector<double> gains;
    gains.reserve(factorial(d - 1));
    do {
        gains.push_back(permuted_marginal_sum(rho, h, Permutation(image)) - baseline);
    } while (std::next_permutation(image.begin() + 1, image.end()));
    return gains;
}

Permutation nth_with_first(std::size_t d, std::size_t first, std::size_t index) {
    std::vector<std::size_t> image(d);
    image[0] = first;
    std::size_t slot = 1;
    for (std::size_t v = 0; v < d; ++v) {
        if (v != first) {
            image[slot++] = v;
        }
    }
    for (std::size_t k = 0; k < index; ++k) {
        std::next_permutation(image.begin() + 1, image.end());
    }
    return Permutation(std::move(image));
}

Permutation exhaustive_search(const XState &rho, const BatteryHamiltonian &h) {
    const std::size_t d = rho.dim();
    const double baseline = permuted_marginal_sum(rho, h, Permutation::identity(d));

    std::vector<std::future<std::vector<double>>> parts;
    for (std::size_t first = 0; first < d; ++first) {
        parts.push_back(std::async(std::launch::async, gains_with_first, std::cref(rho), std::cref(h), first, baseline));
    }
    // Sequential scan in lexicographic order keeps the tie-break independent of
    // how the work was split.
    double best_gain = 0.0;
    std::size_t best_first = 0;
    std::size_t best_index = 0;
    bool have_best = false;
    for (std::size_t first = 0; first < d; ++first) {
        const auto gains = parts[first].get();
        for (std::size_t k = 0; k < gains.size(); ++k) {
            if (!have_best || gains[k] > best_gain + kTieTolerance) {
                have_best = true;
                best_gain = gains[k];
                best_first = first;
                best_index = k;
            }
        }
    }
    return nth_with_first(d, best_first, best_index);
}

}  // namespace

GainResult optimize_gain(const XState &rho, const BatteryHamiltonian &h, GainStrategy strategy) {
    switch (strategy) {
        case GainStrategy::Exhaustive:
            if (rho.n() > kMaxExhaustiveQubits) {
                throw Error(ErrorKind::TooLarge, "exhaustive search limited to n <= 3, got n = " +
                                                     std::to_string(rho.n()));
            }
            return apply_gain_permutation(rho, h, exhaustive_search(rho, h));
        case GainStrategy::SortDiagonal:
            return apply_gain_permutation(rho, h, sort_diagonal_permutation(rho.diag()));
        case GainStrategy::TheoremPattern:
            return apply_gain_permutation(rho, h, theorem_pattern_permutation(rho.n()));
    }
    throw Error(ErrorKind::BadIndex, "unknown strategy");
}

std::vector<RatioPoint> transfer_ratio_curve(int n, double beta, std::span<const double> gamma_grid) {
    const XState state = ghz_white_noise(n, beta);
    const Permutation identity = Permutation::identity(state.dim());
    const Permutation swap = theorem_pattern_permutation(n);
    std::vector<RatioPoint> curve;
    curve.reserve(gamma_grid.size());
    for (double gamma : gamma_grid) {
        const BatteryHamiltonian h(default_eps(n), gamma);
        const double before = permuted_marginal_sum(state, h, identity);
        const double rbc = capacity_of(state, h) - before;
        RatioPoint point{gamma, std::nullopt};
        if (rbc > kRatioFloor) {
            point.ratio = (permuted_marginal_sum(state, h, swap) - before) / rbc;
        }
        curve.push_back(point);
    }
    return curve;
}

}  // namespace qbcap
