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

#ifndef QBCAP_DISTRIBUTION_H
#define QBCAP_DISTRIBUTION_H

#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qbcap/battery_states.h"
#include "qbcap/hamiltonians.h"

namespace qbcap {

inline constexpr double kSlackTolerance = 1e-10;

/// How the capacity of a state splits between its single-qubit marginals and
/// the residual. rbc = total - sum(marginals) = rbc_ic + rbc_c.
struct CapacityReport {
    double total = 0.0;
    double dephased_total = 0.0;  // capacity of the dephased state
    std::vector<double> marginals;
    double rbc = 0.0;
    double rbc_ic = 0.0;
    double rbc_c = 0.0;
};

/// Monogamy of capacity: lhs = sum of marginal capacities, rhs = total.
struct MonogamyAudit {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;          // slack >= -1e-10
    bool equality_case = false;  // slack <= 1e-10
};

/// Three-qubit distribution relations. The T5 family always holds for
/// X-states; the EX2 family is falsifiable.
enum class Relation { T5_AB_C, T5_AC_B, T5_BC_A, EX2_1, EX2_2, EX2_3 };

std::string_view relation_label(Relation r);
/// Throws Error{BadIndex} for an unknown label.
Relation parse_relation(std::string_view label);

struct RelationSlack {
    Relation relation = Relation::T5_AB_C;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
};

struct OrderingMatch {
    bool matches = false;
    std::optional<unsigned> mask;
};

struct CapacityInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Capacity of the reduced state on `keep` (1-based) under the restricted
/// Hamiltonian.
double subsystem_capacity(const DensityMatrix &rho, const BatteryHamiltonian &h, std::span<const int> keep,
                          bool include_interaction = false);
double subsystem_capacity(const DensityMatrix &rho, const BatteryHamiltonian &h, std::initializer_list<int> keep,
                          bool include_interaction = false);

/// C(rho_i; eps_i sigma3) for every qubit i.
std::vector<double> marginal_capacities(const DensityMatrix &rho, const BatteryHamiltonian &h);

CapacityReport capacity_report(const XState &rho, const BatteryHamiltonian &h);
/// Same decomposition for a general state; rbc may be negative off the
/// X-state family.
CapacityReport capacity_report(const DensityMatrix &rho, const BatteryHamiltonian &h);

/// Slacks that land in (-1e-6, -1e-10) are recomputed along the dense
/// eigensolver path with extended-precision sums before being reported.
MonogamyAudit monogamy_audit(const XState &rho, const BatteryHamiltonian &h);

/// Looks for a bitmask m with diag[i ^ m] non-increasing in i; the smallest
/// such mask is returned. Throws Error{BadLength} unless the length is a
/// power of two (>= 2).
OrderingMatch equality_ordering_check(std::span<const double> diag);

/// Throws Error{BadArity} unless rho.n() == 3.
RelationSlack relation_slack(const XState &rho, const BatteryHamiltonian &h, Relation relation,
                             bool pair_interaction = false);
std::vector<RelationSlack> three_qubit_relations(const XState &rho, const BatteryHamiltonian &h,
                                                 bool pair_interaction = false);
std::vector<RelationSlack> candidate_relation_slack(const XState &rho, const BatteryHamiltonian &h);

/// Smallest gamma in [0, gamma_max] where the relation's slack reaches zero:
/// a grid scan with step gamma_max / 1000 brackets the first sign change, then
/// bisection narrows it to 1e-8. Empty if the slack stays negative on the
/// whole range. Throws Error{NotViolatedAtZero} if slack(0) >= -1e-10.
std::optional<double> critical_gamma(const XState &rho, Relation relation, const BatteryHamiltonian &h0,
                                     double gamma_max);

/// [C(rho_i), C(rho_i) + rbc] for each qubit.
std::vector<CapacityInterval> genuine_bounds(const XState &rho, const BatteryHamiltonian &h);

/// The three diagonal three-qubit states that break EX2-1, EX2-2 and EX2-3
/// respectively (k = 1, 2, 3). Throws Error{BadIndex} otherwise.
XState counterexample_state(int k);

}  // namespace qbcap

#endif  // QBCAP_DISTRIBUTION_H
