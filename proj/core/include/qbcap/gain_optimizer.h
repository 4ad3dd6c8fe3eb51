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

#ifndef QBCAP_GAIN_OPTIMIZER_H
#define QBCAP_GAIN_OPTIMIZER_H

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qbcap/battery_states.h"
#include "qbcap/hamiltonians.h"
#include "qbcap/matops.h"

namespace qbcap {

/// Effect of a global basis permutation on how capacity is distributed.
struct GainResult {
    Permutation permutation;
    std::vector<double> marginals_before;
    std::vector<double> marginals_after;
    double total_before = 0.0;
    double total_after = 0.0;
    double rbc_before = 0.0;
    double rbc_after = 0.0;
    double gain = 0.0;            // sum(after) - sum(before)
    std::optional<double> ratio;  // gain / rbc_before, when rbc_before > 1e-12
};

enum class GainStrategy { Exhaustive, SortDiagonal, TheoremPattern };

std::string_view strategy_name(GainStrategy s);
/// Throws Error{BadIndex} for an unknown name.
GainStrategy parse_strategy(std::string_view name);

/// Largest register the exhaustive search accepts (2^3 = 8 basis states).
inline constexpr int kMaxExhaustiveQubits = 3;

/// Marginal capacities of P rho P^dagger, evaluated on the dense image since
/// it is in general no longer an X-state. Throws Error{BadPermutation}.
GainResult apply_gain_permutation(const XState &rho, const BatteryHamiltonian &h, const Permutation &pi);

/// Sum of single-qubit capacities of P rho P^dagger, computed from the
/// nonzero entries only. Used inside the exhaustive search.
double permuted_marginal_sum(const XState &rho, const BatteryHamiltonian &h, const Permutation &pi);

/// Two-qubit construction: identity when the diagonal already satisfies one
/// of the four equality orderings, otherwise the permutation that moves the
/// fewest basis states while rearranging the diagonal into such an ordering.
/// Throws Error{BadArity} unless n == 2.
Permutation theorem2_permutation(const XState &rho);

/// Sends the k-th largest diagonal entry (stable) to position k.
Permutation sort_diagonal_permutation(std::span<const double> diag);

/// Exchange of basis states |0...01> and |1...11>.
Permutation theorem_pattern_permutation(int n);

/// Exhaustive search is over all (2^n)! permutations, argmax gain with ties
/// resolved toward the lexicographically smallest image vector; it throws
/// Error{TooLarge} for n > 3.
GainResult optimize_gain(const XState &rho, const BatteryHamiltonian &h, GainStrategy strategy);

struct RatioPoint {
    double gamma = 0.0;
    std::optional<double> ratio;
};

/// Transfer ratio of the theorem-pattern swap on the noisy GHZ state with the
/// default local energies, one point per gamma.
std::vector<RatioPoint> transfer_ratio_curve(int n, double beta, std::span<const double> gamma_grid);

}  // namespace qbcap

#endif  // QBCAP_GAIN_OPTIMIZER_H
