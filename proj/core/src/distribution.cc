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

#include "qbcap/distribution.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qbcap/capacity.h"
#include "qbcap/error.h"

namespace qbcap {

namespace {

constexpr double kRecheckFloor = -1e-6;

void check_qubits(int state_n, const BatteryHamiltonian &h) {
    if (state_n != h.n()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(state_n) + "-qubit state with " + std::to_string(h.n()) + "-qubit Hamiltonian");
    }
}

void require_three_qubits(const XState &rho) {
    if (rho.n() != 3) {
        throw Error(ErrorKind::BadArity, "three-qubit relation on a " + std::to_string(rho.n()) + "-qubit state");
    }
}

long double capacity_extended(const std::vector<double> &lambda, const std::vector<double> &eps) {
    const std::size_t d = lambda.size();
    long double c = 0.0L;
    for (std::size_t i = 0; i < d; ++i) {
        c += static_cast<long double>(lambda[i]) *
             (static_cast<long double>(eps[i]) - static_cast<long double>(eps[d - 1 - i]));
    }
    return c;
}

// Monogamy slack recomputed from the dense eigensolver with long double sums.
long double monogamy_slack_extended(const XState &rho, const BatteryHamiltonian &h) {
    const DensityMatrix dense = to_dense(rho);
    long double slack = capacity_extended(eig_hermitian(dense.matrix()).eigenvalues, hamiltonian_spectrum(h));
    for (int q = 1; q <= rho.n(); ++q) {
        const int keep[1] = {q};
        const ComplexMatrix marginal = partial_trace(dense.matrix(), rho.n(), keep);
        const BatteryHamiltonian local({h.eps()[static_cast<std::size_t>(q - 1)]}, 0.0);
        slack -= capacity_extended(eig_hermitian(marginal).eigenvalues, hamiltonian_spectrum(local));
    }
    return slack;
}

// Away from n = 1 the single-qubit marginals of an X-state are diagonal, so
// their capacities follow from populations alone.
std::vector<double> x_state_marginals(const XState &rho, const BatteryHamiltonian &h) {
    if (rho.n() == 1) {
        return {capacity_of(rho, h.with_gamma(0.0))};
    }
    const std::size_t d = rho.dim();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(rho.n()));
    for (int q = 1; q <= rho.n(); ++q) {
        const std::size_t bit = std::size_t{1} << (rho.n() - q);
        double imbalance = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(i & bit)) {
                imbalance += rho.diag()[i] - rho.diag()[i | bit];
            }
        }
        out.push_back(2.0 * h.eps()[static_cast<std::size_t>(q - 1)] * std::abs(imbalance));
    }
    return out;
}

}  // namespace

std::string_view relation_label(Relation r) {
    switch (r) {
        case Relation::T5_AB_C:
            return "T5-AB|C";
        case Relation::T5_AC_B:
            return "T5-AC|B";
        case Relation::T5_BC_A:
            return "T5-BC|A";
        case Relation::EX2_1:
            return "EX2-1";
        case Relation::EX2_2:
            return "EX2-2";
        case Relation::EX2_3:
            return "EX2-3";
    }
    return "?";
}

Relation parse_relation(std::string_view label) {
    for (Relation r : {Relation::T5_AB_C, Relation::T5_AC_B, Relation::T5_BC_A, Relation::EX2_1, Relation::EX2_2,
                       Relation::EX2_3}) {
        if (relation_label(r) == label) {
            return r;
        }
    }
    throw Error(ErrorKind::BadIndex, "unknown relation label '" + std::string(label) + "'");
}

double subsystem_capacity(const DensityMatrix &rho, const BatteryHamiltonian &h, std::span<const int> keep,
                          bool include_interaction) {
    check_qubits(rho.n(), h);
    const BatteryHamiltonian sub = subsystem_hamiltonian(h, keep, include_interaction);
    if (static_cast<int>(keep.size()) == rho.n()) {
        return capacity_of(rho, sub);
    }
    const DensityMatrix reduced =
        DensityMatrix::assume_valid(static_cast<int>(keep.size()), partial_trace(rho.matrix(), rho.n(), keep));
    return capacity_of(reduced, sub);
}

double subsystem_capacity(const DensityMatrix &rho, const BatteryHamiltonian &h, std::initializer_list<int> keep,
                          bool include_interaction) {
    return subsystem_capacity(rho, h, std::span<const int>(keep.begin(), keep.size()), include_interaction);
}

std::vector<double> marginal_capacities(const DensityMatrix &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(rho.n()));
    for (int q = 1; q <= rho.n(); ++q) {
        const int keep[1] = {q};
        out.push_back(subsystem_capacity(rho, h, keep));
    }
    return out;
}

CapacityReport capacity_report(const XState &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    CapacityReport report;
    report.total = capacity_of(rho, h);
    report.dephased_total = capacity_lower_bound(rho, h);
    report.marginals = x_state_marginals(rho, h);
    const double marginal_sum = std::accumulate(report.marginals.begin(), report.marginals.end(), 0.0);
    report.rbc = report.total - marginal_sum;
    report.rbc_ic = report.dephased_total - marginal_sum;
    report.rbc_c = report.total - report.dephased_total;
    return report;
}

CapacityReport capacity_report(const DensityMatrix &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    CapacityReport report;
    report.total = capacity_of(rho, h);
    report.dephased_total = capacity_lower_bound(rho, h);
    report.marginals = marginal_capacities(rho, h);
    const double marginal_sum = std::accumulate(report.marginals.begin(), report.marginals.end(), 0.0);
    report.rbc = report.total - marginal_sum;
    report.rbc_ic = report.dephased_total - marginal_sum;
    report.rbc_c = report.total - report.dephased_total;
    return report;
}

MonogamyAudit monogamy_audit(const XState &rho, const BatteryHamiltonian &h) {
    check_qubits(rho.n(), h);
    const auto marginals = x_state_marginals(rho, h);
    MonogamyAudit audit;
    audit.lhs = std::accumulate(marginals.begin(), marginals.end(), 0.0);
    audit.rhs = capacity_of(rho, h);
    audit.slack = audit.rhs - audit.lhs;
    if (audit.slack < -kSlackTolerance && audit.slack > kRecheckFloor) {
        audit.slack = static_cast<double>(monogamy_slack_extended(rho, h));
    }
    audit.holds = audit.slack >= -kSlackTolerance;
    audit.equality_case = audit.slack <= kSlackTolerance;
    return audit;
}

OrderingMatch equality_ordering_check(std::span<const double> diag) {
    const std::size_t d = diag.size();
    if (d < 2 || (d & (d - 1)) != 0) {
        throw Error(ErrorKind::BadLength, "diagonal length " + std::to_string(d) + " is not a power of two");
    }
    for (std::size_t mask = 0; mask < d; ++mask) {
        bool ordered = true;
        for (std::size_t i = 0; i + 1 < d && ordered; ++i) {
            ordered = diag[i ^ mask] >= diag[(i + 1) ^ mask];
        }
        if (ordered) {
            return {true, static_cast<unsigned>(mask)};
        }
    }
    return {false, std::nullopt};
}

RelationSlack relation_slack(const XState &rho, const BatteryHamiltonian &h, Relation relation,
                             bool pair_interaction) {
    require_three_qubits(rho);
    check_qubits(rho.n(), h);
    const DensityMatrix dense = to_dense(rho);
    auto sub = [&](std::initializer_list<int> keep) {
        return subsystem_capacity(dense, h, keep, pair_interaction && keep.size() >= 2);
    };

    RelationSlack out;
    out.relation = relation;
    out.rhs = capacity_of(rho, h);
    switch (relation) {
        case Relation::T5_AB_C:
        case Relation::T5_AC_B:
        case Relation::T5_BC_A: {
            const double coherent = out.rhs - capacity_lower_bound(rho, h);
            if (relation == Relation::T5_AB_C) {
                out.lhs = sub({1, 2}) + sub({3});
            } else if (relation == Relation::T5_AC_B) {
                out.lhs = sub({1, 3}) + sub({2});
            } else {
                out.lhs = sub({2, 3}) + sub({1});
            }
            out.lhs += coherent;
            break;
        }
        case Relation::EX2_1:
            out.lhs = sub({1, 2}) + sub({1, 3}) - sub({1});
            break;
        case Relation::EX2_2:
            out.lhs = sub({1, 2}) + sub({2, 3}) - sub({2});
            break;
        case Relation::EX2_3:
            out.lhs = sub({1, 3}) + sub({2, 3}) - sub({3});
            break;
    }
    out.slack = out.rhs - out.lhs;
    return out;
}

std::vector<RelationSlack> three_qubit_relations(const XState &rho, const BatteryHamiltonian &h,
                                                 bool pair_interaction) {
    return {relation_slack(rho, h, Relation::T5_AB_C, pair_interaction),
            relation_slack(rho, h, Relation::T5_AC_B, pair_interaction),
            relation_slack(rho, h, Relation::T5_BC_A, pair_interaction)};
}

std::vector<RelationSlack> candidate_relation_slack(const XState &rho, const BatteryHamiltonian &h) {
    return {relation_slack(rho, h, Relation::EX2_1), relation_slack(rho, h, Relation::EX2_2),
            relation_slack(rho, h, Relation::EX2_3)};
}

std::optional<double> critical_gamma(const XState &rho, Relation relation, const BatteryHamiltonian &h0,
                                     double gamma_max) {
    if (!(gamma_max > 0.0) || !std::isfinite(gamma_max)) {
        throw Error(ErrorKind::BadHamiltonian, "gamma_max must be positive and finite");
    }
    auto slack_at = [&](double gamma) { return relation_slack(rho, h0.with_gamma(gamma), relation).slack; };
    const double at_zero = slack_at(0.0);
    if (at_zero >= -kSlackTolerance) {
        throw Error(ErrorKind::NotViolatedAtZero, std::string(relation_label(relation)) +
                                                      " has slack " + std::to_string(at_zero) + " at gamma = 0");
    }

    constexpr int kGridSteps = 1000;
    constexpr double kPrecision = 1e-8;
    const double step = gamma_max / kGridSteps;
    double lo = 0.0;
    double hi = -1.0;
    for (int k = 1; k <= kGridSteps; ++k) {
        const double g = k == kGridSteps ? gamma_max : k * step;
        if (slack_at(g) >= 0.0) {
            hi = g;
            break;
        }
        lo = g;
    }
    if (hi < 0.0) {
        return std::nullopt;
    }
    while (hi - lo > kPrecision) {
        const double mid = 0.5 * (lo + hi);
        (slack_at(mid) >= 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<CapacityInterval> genuine_bounds(const XState &rho, const BatteryHamiltonian &h) {
    const CapacityReport report = capacity_report(rho, h);
    std::vector<CapacityInterval> out;
    out.reserve(report.marginals.size());
    for (double c : report.marginals) {
        out.push_back({c, c + report.rbc});
    }
    return out;
}

XState counterexample_state(int k) {
    std::vector<double> weights;
    switch (k) {
        case 1:
            weights = {8, 7, 2, 1, 4, 3, 6, 5};
            break;
        case 2:
            weights = {8, 7, 4, 3, 2, 1, 6, 5};
            break;
        case 3:
            weights = {8, 4, 7, 3, 6, 2, 5, 1};
            break;
        default:
            throw Error(ErrorKind::BadIndex, "counterexample index " + std::to_string(k) + " not in {1, 2, 3}");
    }
    for (double &w : weights) {
        w /= 36.0;
    }
    return incoherent_state(3, std::move(weights));
}

}  // namespace qbcap
