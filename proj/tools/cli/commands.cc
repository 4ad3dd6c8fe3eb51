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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>

#include "CLI11.hpp"
#include "io.h"
#include "qbcap/error.h"
#include "qbcap/random.h"

namespace qbcap::cli {

namespace {

class StateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kUndefinedRatioFloor = 1e-12;

struct Options {
    std::string state_path;
    std::string builtin;
    std::string hamiltonian_path;
    std::string eps_text;
    std::optional<double> gamma;
    std::optional<std::string> format;
    std::string out_path;

    // Built-in state parameters.
    std::string bell_text = "0.5,0.3,0.1";
    std::string n_text;
    std::optional<double> beta;

    std::string strategy = "exhaustive";
    std::string beta_grid = "0:1:11";
    std::string gamma_grid;
    double gamma_max = 2.0;
    std::uint64_t seed = 42;
    long samples = 10000;
};

std::string join(std::span<const double> v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? ", " : "") + format_shortest(v[k]);
    }
    return s;
}

double sum(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

int single_qubit_count(const Options &o, int fallback) {
    if (o.n_text.empty()) {
        return fallback;
    }
    const auto ns = parse_int_list(o.n_text, "--n");
    if (ns.size() != 1) {
        throw ParseError("--n", "expected a single qubit count");
    }
    return ns[0];
}

AnyState build_state(const Options &o) {
    if (o.state_path.empty() == o.builtin.empty()) {
        throw ParseError("--state", "exactly one of --state or --builtin is required");
    }
    try {
        if (!o.state_path.empty()) {
            return load_state_file(o.state_path);
        }
        if (o.builtin == "bell-diagonal") {
            const auto a = parse_real_list(o.bell_text, "--a");
            if (a.size() != 3) {
                throw ParseError("--a", "expected three coefficients a1,a2,a3");
            }
            return bell_diagonal(a[0], a[1], a[2]);
        }
        if (o.builtin == "ghz-noise") {
            return ghz_white_noise(single_qubit_count(o, 3), o.beta.value_or(0.5));
        }
        return counterexample_state(o.builtin.back() - '0');
    } catch (const Error &e) {
        throw StateError(e.what());
    }
}

BatteryHamiltonian build_hamiltonian(const Options &o, int n) {
    std::vector<double> eps;
    double gamma = 0.0;
    try {
        if (!o.hamiltonian_path.empty()) {
            const BatteryHamiltonian h = load_hamiltonian_file(o.hamiltonian_path);
            eps.assign(h.eps().begin(), h.eps().end());
            gamma = h.gamma();
        } else {
            eps = default_eps(n);
        }
        if (!o.eps_text.empty()) {
            eps = parse_real_list(o.eps_text, "--eps");
        }
        if (o.gamma) {
            gamma = *o.gamma;
        }
        if (static_cast<int>(eps.size()) != n) {
            throw ConfigError(std::to_string(eps.size()) + " local energies for a " + std::to_string(n) +
                              "-qubit state");
        }
        return BatteryHamiltonian(std::move(eps), gamma);
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
}

std::string describe(const BatteryHamiltonian &h) {
    return "eps = (" + join(h.eps()) + "), gamma = " + format_shortest(h.gamma());
}

void emit_json(std::ostream &out, const Json &j) {
    out << j.dump(2) << '\n';
}

void emit_table(std::ostream &out, Format f, const Table &t) {
    switch (f) {
        case Format::Csv:
            t.write_csv(out);
            break;
        case Format::Json:
            emit_json(out, t.to_json());
            break;
        case Format::Table:
            t.write_text(out);
            break;
    }
}

// ---------------------------------------------------------------- capacity

int cmd_capacity(const Options &o, Format f, std::ostream &out) {
    const AnyState state = build_state(o);
    const int n = state_qubits(state);
    const BatteryHamiltonian h = build_hamiltonian(o, n);
    const XState *x = std::get_if<XState>(&state);
    const CapacityReport r = x ? capacity_report(*x, h) : capacity_report(std::get<DensityMatrix>(state), h);

    std::optional<MonogamyAudit> audit;
    std::vector<CapacityInterval> bounds;
    if (x) {
        audit = monogamy_audit(*x, h);
        bounds = genuine_bounds(*x, h);
    }

    if (f == Format::Json) {
        Json j{{"n", n}, {"hamiltonian", hamiltonian_to_json(h)}};
        j.update(report_to_json(r));
        if (audit) {
            j["monogamy"] = Json{{"lhs", audit->lhs},
                                 {"rhs", audit->rhs},
                                 {"slack", audit->slack},
                                 {"holds", audit->holds},
                                 {"equality_case", audit->equality_case}};
            Json b = Json::array();
            for (const auto &iv : bounds) {
                b.push_back({iv.lower, iv.upper});
            }
            j["genuine_bounds"] = b;
        }
        emit_json(out, j);
        return kExitOk;
    }

    std::vector<std::string> headers{"total", "dephased_total", "rbc", "rbc_ic", "rbc_c"};
    std::vector<Table::Cell> row{r.total, r.dephased_total, r.rbc, r.rbc_ic, r.rbc_c};
    for (int q = 1; q <= n; ++q) {
        headers.push_back("marginal_" + std::to_string(q));
        row.emplace_back(r.marginals[static_cast<std::size_t>(q - 1)]);
    }
    if (audit) {
        headers.push_back("monogamy_slack");
        row.emplace_back(audit->slack);
    }
    if (f == Format::Csv) {
        Table t(headers);
        t.add_row(row);
        t.write_csv(out);
        return kExitOk;
    }

    out << "capacity report for a " << n << "-qubit " << (x ? "X-state" : "general state") << ", " << describe(h)
        << "\n\n";
    Table t({"quantity", "value"});
    for (std::size_t k = 0; k < headers.size(); ++k) {
        t.add_row({headers[k], row[k]});
    }
    for (std::size_t q = 0; q < bounds.size(); ++q) {
        t.add_row({"genuine_" + std::to_string(q + 1),
                   "[" + format_shortest(bounds[q].lower) + ", " + format_shortest(bounds[q].upper) + "]"});
    }
    t.write_text(out);
    return kExitOk;
}

// -------------------------------------------------------------------- gain

int cmd_gain(const Options &o, Format f, std::ostream &out) {
    const AnyState state = build_state(o);
    const XState *x = std::get_if<XState>(&state);
    if (!x) {
        throw ConfigError("gain needs an X-state (diag/anti) input");
    }
    const BatteryHamiltonian h = build_hamiltonian(o, x->n());
    GainResult r;
    try {
        if (o.strategy == "theorem2") {
            r = apply_gain_permutation(*x, h, theorem2_permutation(*x));
        } else {
            r = optimize_gain(*x, h, parse_strategy(o.strategy));
        }
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }

    if (f == Format::Json) {
        emit_json(out, gain_result_to_json(r, o.strategy));
        return kExitOk;
    }
    std::string image;
    for (std::size_t i = 0; i < r.permutation.size(); ++i) {
        image += (i ? " " : "") + std::to_string(r.permutation[i]);
    }
    Table::Cell ratio;
    if (r.ratio) {
        ratio = *r.ratio;
    }
    if (f == Format::Csv) {
        Table t({"strategy", "permutation", "total_before", "total_after", "marginal_sum_before",
                 "marginal_sum_after", "rbc_before", "rbc_after", "gain", "ratio"});
        t.add_row({o.strategy, image, r.total_before, r.total_after, sum(r.marginals_before),
                   sum(r.marginals_after), r.rbc_before, r.rbc_after, r.gain, ratio});
        t.write_csv(out);
        return kExitOk;
    }
    out << "capacity gain (" << o.strategy << ") for a " << x->n() << "-qubit X-state, " << describe(h) << "\n\n";
    Table t({"quantity", "value"});
    t.add_row({"permutation", image});
    t.add_row({"marginals_before", join(r.marginals_before)});
    t.add_row({"marginals_after", join(r.marginals_after)});
    t.add_row({"total_before", r.total_before});
    t.add_row({"total_after", r.total_after});
    t.add_row({"rbc_before", r.rbc_before});
    t.add_row({"rbc_after", r.rbc_after});
    t.add_row({"gain", r.gain});
    t.add_row({"ratio", ratio});
    t.write_text(out);
    return kExitOk;
}

// --------------------------------------------------------------- sweep-ghz

constexpr int kMaxSweepQubits = 16;

std::vector<double> nonempty_grid(const std::string &text, const char *flag) {
    auto grid = parse_grid(text, flag);
    if (grid.empty()) {
        throw ConfigError(std::string(flag) + " is empty");
    }
    return grid;
}

void check_sweep_qubits(int n) {
    if (n < 2 || n > kMaxSweepQubits) {
        throw ConfigError("--n must lie in [2, " + std::to_string(kMaxSweepQubits) + "], got " + std::to_string(n));
    }
}

int cmd_sweep_ghz(const Options &o, Format f, std::ostream &out) {
    const auto ns = parse_int_list(o.n_text.empty() ? "3" : o.n_text, "--n");
    const auto betas = nonempty_grid(o.beta_grid, "--beta-grid");
    const auto gammas = nonempty_grid(o.gamma_grid.empty() ? "0,0.5,1" : o.gamma_grid, "--gamma-grid");
    for (int n : ns) {
        check_sweep_qubits(n);
    }

    Table t({"n", "beta", "gamma", "total", "rbc", "rbc_ic", "rbc_c", "gain", "ratio", "rbc_fraction_after"});
    try {
        for (int n : ns) {
            const Permutation swap = theorem_pattern_permutation(n);
            for (double beta : betas) {
                const XState rho = ghz_white_noise(n, beta);
                for (double gamma : gammas) {
                    const BatteryHamiltonian h(default_eps(n), gamma);
                    const CapacityReport r = capacity_report(rho, h);
                    const double after = permuted_marginal_sum(rho, h, swap);
                    const double gain = after - sum(r.marginals);
                    const double ratio = r.rbc > kUndefinedRatioFloor ? gain / r.rbc : 0.0;
                    const double rbc_after = r.total - after;
                    const double fraction = r.total > kUndefinedRatioFloor ? rbc_after / r.total : 0.0;
                    t.add_row({static_cast<double>(n), beta, gamma, r.total, r.rbc, r.rbc_ic, r.rbc_c, gain, ratio,
                               fraction});
                }
            }
        }
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    emit_table(out, f, t);
    return kExitOk;
}

// ------------------------------------------------------------- ratio-curve

int cmd_ratio_curve(const Options &o, Format f, std::ostream &out) {
    const int n = single_qubit_count(o, 3);
    check_sweep_qubits(n);
    const auto gammas = nonempty_grid(o.gamma_grid.empty() ? "0:2:21" : o.gamma_grid, "--gamma-grid");
    std::vector<RatioPoint> curve;
    try {
        curve = transfer_ratio_curve(n, o.beta.value_or(1.0), gammas);
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    Table t({"gamma", "ratio"});
    for (const RatioPoint &p : curve) {
        t.add_row({p.gamma, p.ratio.value_or(0.0)});
    }
    emit_table(out, f, t);
    return kExitOk;
}

// --------------------------------------------------------- counterexamples

int cmd_counterexamples(const Options &o, Format f, std::ostream &out) {
    const double gamma = o.gamma.value_or(0.0);
    Options base = o;
    base.gamma = 0.0;
    const BatteryHamiltonian h0 = build_hamiltonian(base, 3);
    if (!(gamma >= 0.0)) {
        throw ConfigError("--gamma must be nonnegative");
    }
    const BatteryHamiltonian h = h0.with_gamma(gamma);
    const Relation own[3] = {Relation::EX2_1, Relation::EX2_2, Relation::EX2_3};

    bool reproduced = true;
    Table t({"state", "relation", "lhs", "rhs", "slack", "status", "gamma_c"});
    Json violations = Json::array();
    for (int k = 1; k <= 3; ++k) {
        const XState rho = counterexample_state(k);
        const std::string name = "ex2-rho" + std::to_string(k);
        auto slacks = three_qubit_relations(rho, h);
        const auto candidates = candidate_relation_slack(rho, h);
        slacks.insert(slacks.end(), candidates.begin(), candidates.end());

        const RelationSlack at_zero = relation_slack(rho, h0, own[k - 1]);
        if (!(at_zero.slack < -kSlackTolerance)) {
            reproduced = false;
        }
        for (const RelationSlack &s : slacks) {
            const bool is_t5 = s.relation == Relation::T5_AB_C || s.relation == Relation::T5_AC_B ||
                               s.relation == Relation::T5_BC_A;
            const bool holds = s.slack >= -kSlackTolerance;
            if (is_t5 && !holds) {
                reproduced = false;
            }
            Table::Cell gamma_c;
            if (!is_t5 && relation_slack(rho, h0, s.relation).slack < -kSlackTolerance) {
                const auto gc = critical_gamma(rho, s.relation, h0, o.gamma_max);
                gamma_c = gc ? Table::Cell(*gc) : Table::Cell("none");
            }
            if (!holds) {
                violations.push_back(violation_record(relation_label(s.relation), gamma, s.lhs, s.rhs, s.slack, rho));
            }
            t.add_row({name, std::string(relation_label(s.relation)), s.lhs, s.rhs, s.slack,
                       std::string(holds ? "holds" : "violated"), gamma_c});
        }
    }

    if (f == Format::Json) {
        emit_json(out, Json{{"hamiltonian", hamiltonian_to_json(h)},
                            {"gamma_max", o.gamma_max},
                            {"relations", t.to_json()},
                            {"violations", violations},
                            {"reproduced", reproduced}});
    } else if (f == Format::Csv) {
        t.write_csv(out);
    } else {
        out << "three-qubit relations for the built-in counterexample states, " << describe(h) << "\n"
            << "gamma_c: smallest interaction strength in [0, " << format_shortest(o.gamma_max)
            << "] at which a relation violated without interaction starts to hold\n\n";
        t.write_text(out);
        out << "\n" << (reproduced ? "reproduced" : "NOT reproduced") << "\n";
    }
    return reproduced ? kExitOk : kExitReproduction;
}

// -------------------------------------------------------------------- fuzz

struct Tally {
    std::string name;
    double min_slack = std::numeric_limits<double>::infinity();
    long violations = 0;
};

constexpr std::size_t kMaxDumpedViolations = 20;

int cmd_fuzz(const Options &o, Format f, std::ostream &out) {
    const int n = single_qubit_count(o, 3);
    if (n < 2 || n > 4) {
        throw ConfigError("--n must be 2, 3 or 4 for fuzz, got " + std::to_string(n));
    }
    if (o.samples < 0) {
        throw ConfigError("--samples must be nonnegative");
    }
    if (!(o.gamma_max >= 0.0) || !std::isfinite(o.gamma_max)) {
        throw ConfigError("--gamma-max must be nonnegative");
    }

    std::vector<Tally> tallies{{"monogamy"}, {"monogamy-incoherent"}, {"lower-bound"}, {"majorization"}};
    if (n == 3) {
        for (Relation r : {Relation::T5_AB_C, Relation::T5_AC_B, Relation::T5_BC_A}) {
            tallies.push_back({std::string(relation_label(r))});
        }
    }
    Json dumped = Json::array();
    long total_violations = 0;
    auto record = [&](std::size_t index, double gamma, double lhs, double rhs, const XState &state) {
        Tally &tally = tallies[index];
        const double slack = rhs - lhs;
        tally.min_slack = std::min(tally.min_slack, slack);
        if (slack < -kSlackTolerance) {
            ++tally.violations;
            ++total_violations;
            if (dumped.size() < kMaxDumpedViolations) {
                dumped.push_back(violation_record(tally.name, gamma, lhs, rhs, slack, state));
            }
        }
    };

    Rng rng(o.seed);
    for (long s = 0; s < o.samples; ++s) {
        const XState x = random_x_state(rng, n);
        const BatteryHamiltonian h = random_hamiltonian(rng, n, o.gamma_max);
        const double gamma = h.gamma();

        const MonogamyAudit audit = monogamy_audit(x, h);
        record(0, gamma, audit.lhs, audit.lhs + audit.slack, x);
        const XState tau = dephase(x);
        const MonogamyAudit incoherent = monogamy_audit(tau, h);
        record(1, gamma, incoherent.lhs, incoherent.lhs + incoherent.slack, tau);
        record(2, gamma, capacity_lower_bound(x, h), audit.rhs, x);

        // Diagonal majorized by spectrum: compare partial sums of the sorted
        // vectors and keep the tightest one.
        std::vector<double> diag(x.diag().begin(), x.diag().end());
        std::sort(diag.begin(), diag.end(), std::greater<>());
        const std::vector<double> spectrum = x_state_spectrum(x);
        double diag_prefix = 0.0, spec_prefix = 0.0;
        double worst_lhs = 0.0, worst_rhs = 0.0;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
            diag_prefix += diag[k];
            spec_prefix += spectrum[k];
            if (spec_prefix - diag_prefix < worst) {
                worst = spec_prefix - diag_prefix;
                worst_lhs = diag_prefix;
                worst_rhs = spec_prefix;
            }
        }
        record(3, gamma, worst_lhs, worst_rhs, x);

        if (n == 3) {
            const auto slacks = three_qubit_relations(x, h);
            for (std::size_t k = 0; k < slacks.size(); ++k) {
                record(4 + k, gamma, slacks[k].lhs, slacks[k].rhs, x);
            }
        }
    }

    const bool passed = total_violations == 0;
    if (f == Format::Json) {
        Json rel = Json::array();
        for (const Tally &t : tallies) {
            rel.push_back(Json{{"relation", t.name},
                               {"min_slack", o.samples > 0 ? Json(t.min_slack) : Json(nullptr)},
                               {"violations", t.violations}});
        }
        emit_json(out, Json{{"n", n},
                            {"samples", o.samples},
                            {"seed", o.seed},
                            {"gamma_max", o.gamma_max},
                            {"relations", rel},
                            {"violations", dumped},
                            {"passed", passed}});
    } else {
        Table t({"relation", "min_slack", "violations"});
        for (const Tally &tally : tallies) {
            t.add_row({tally.name, o.samples > 0 ? Table::Cell(tally.min_slack) : Table::Cell(),
                       static_cast<double>(tally.violations)});
        }
        if (f == Format::Csv) {
            t.write_csv(out);
        } else {
            out << "fuzz: n = " << n << ", samples = " << o.samples << ", seed = " << o.seed << ", gamma in [0, "
                << format_shortest(o.gamma_max) << "]\n\n";
            t.write_text(out);
            out << "\n" << (passed ? "no violations" : std::to_string(total_violations) + " violation(s)") << "\n";
            if (!passed) {
                out << dumped.dump(2) << "\n";
            }
        }
    }
    return passed ? kExitOk : kExitReproduction;
}

// ------------------------------------------------------------------ wiring

void add_output_options(CLI::App *sub, Options &o) {
    sub->add_option("--format", o.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

void add_hamiltonian_options(CLI::App *sub, Options &o) {
    sub->add_option("--eps", o.eps_text, "local energies, descending, e.g. 0.5,0.3,0.1");
    sub->add_option("--gamma", o.gamma, "interaction strength (default 0)");
    sub->add_option("--hamiltonian", o.hamiltonian_path, "Hamiltonian JSON file {\"eps\", \"gamma\"}");
}

void add_state_options(CLI::App *sub, Options &o) {
    sub->add_option("--state", o.state_path, "state JSON file ({n, diag, anti} or {n, dense})");
    sub->add_option("--builtin", o.builtin, "built-in state")
        ->check(CLI::IsMember({"bell-diagonal", "ghz-noise", "ex2-rho1", "ex2-rho2", "ex2-rho3"}));
    sub->add_option("--a", o.bell_text, "bell-diagonal coefficients a1,a2,a3")->capture_default_str();
    sub->add_option("--n", o.n_text, "ghz-noise qubit count (default 3)");
    sub->add_option("--beta", o.beta, "ghz-noise weight (default 0.5)");
}

int dispatch(const std::string &command, const Options &o, std::ostream &out) {
    auto format_or = [&](Format fallback) { return o.format ? parse_format(*o.format) : fallback; };
    if (command == "capacity") {
        return cmd_capacity(o, format_or(Format::Table), out);
    }
    if (command == "gain") {
        return cmd_gain(o, format_or(Format::Table), out);
    }
    if (command == "sweep-ghz") {
        return cmd_sweep_ghz(o, format_or(Format::Csv), out);
    }
    if (command == "ratio-curve") {
        return cmd_ratio_curve(o, format_or(Format::Csv), out);
    }
    if (command == "counterexamples") {
        return cmd_counterexamples(o, format_or(Format::Table), out);
    }
    return cmd_fuzz(o, format_or(Format::Table), out);
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qbcap: battery capacity of multi-qubit X-states"};
    app.footer(
        "Local energies default to 0.5, 0.3, then 0.1 for every further qubit; the GHZ closed forms assume this.\n"
        "Exit codes: 0 ok, 2 parse error, 3 invalid state, 4 bad configuration, 5 reproduction failure.");
    app.require_subcommand(1);
    Options o;

    auto *capacity = app.add_subcommand("capacity", "capacity, marginals and residual capacity of a state");
    add_state_options(capacity, o);
    add_hamiltonian_options(capacity, o);
    add_output_options(capacity, o);

    auto *gain = app.add_subcommand("gain", "capacity gain of a basis permutation");
    add_state_options(gain, o);
    add_hamiltonian_options(gain, o);
    add_output_options(gain, o);
    gain->add_option("--strategy", o.strategy, "exhaustive, sort-diagonal, theorem-pattern or theorem2")
        ->check(CLI::IsMember({"exhaustive", "sort-diagonal", "theorem-pattern", "theorem2"}))
        ->capture_default_str();

    auto *sweep = app.add_subcommand("sweep-ghz", "GHZ-with-white-noise sweep over beta and gamma");
    sweep->add_option("--n", o.n_text, "qubit counts, e.g. 2,3,4 (default 3)");
    sweep->add_option("--beta-grid", o.beta_grid, "lo:hi:count or a comma list")->capture_default_str();
    sweep->add_option("--gamma-grid", o.gamma_grid, "lo:hi:count or a comma list (default 0,0.5,1)");
    add_output_options(sweep, o);

    auto *ratio = app.add_subcommand("ratio-curve", "transfer ratio of the GHZ swap against gamma");
    ratio->add_option("--n", o.n_text, "qubit count (default 3)");
    ratio->add_option("--beta", o.beta, "GHZ weight (default 1)");
    ratio->add_option("--gamma-grid", o.gamma_grid, "lo:hi:count or a comma list (default 0:2:21)");
    add_output_options(ratio, o);

    auto *counter = app.add_subcommand("counterexamples", "three-qubit relations on the built-in counterexamples");
    counter->add_option("--eps", o.eps_text, "local energies (default 0.5,0.3,0.1)");
    counter->add_option("--gamma", o.gamma, "interaction strength for the reported slacks (default 0)");
    counter->add_option("--gamma-max", o.gamma_max, "upper end of the critical-gamma search")->capture_default_str();
    add_output_options(counter, o);

    auto *fuzz = app.add_subcommand("fuzz", "random X-state property checks");
    fuzz->add_option("--n", o.n_text, "qubit count: 2, 3 or 4 (default 3)");
    fuzz->add_option("--samples", o.samples, "number of random states")->capture_default_str();
    fuzz->add_option("--seed", o.seed, "random seed")->capture_default_str();
    fuzz->add_option("--gamma-max", o.gamma_max, "interaction strength drawn from [0, gamma-max]")
        ->capture_default_str();
    add_output_options(fuzz, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::ostringstream buffer;
    int status = kExitOk;
    try {
        status = dispatch(command, o, buffer);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const StateError &e) {
        err << "invalid state: " << e.what() << '\n';
        return kExitInvalidState;
    } catch (const ConfigError &e) {
        err << "bad configuration: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const Error &e) {
        err << "bad configuration: " << e.what() << '\n';
        return kExitBadConfig;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "bad configuration: cannot write " << o.out_path << '\n';
            return kExitBadConfig;
        }
    }
    return status;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"qbcap"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qbcap::cli
