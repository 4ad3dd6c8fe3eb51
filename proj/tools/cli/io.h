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

#ifndef QBCAP_CLI_IO_H
#define QBCAP_CLI_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qbcap/battery_states.h"
#include "qbcap/capacity.h"
#include "qbcap/distribution.h"
#include "qbcap/gain_optimizer.h"
#include "qbcap/hamiltonians.h"

namespace qbcap::cli {

using Json = nlohmann::ordered_json;

/// Malformed input. `field` names the offending JSON field or flag.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

using AnyState = std::variant<XState, DensityMatrix>;

int state_qubits(const AnyState &state);

/// {"n", "diag", "anti"} or {"n", "dense"}. Complex entries are [re, im]
/// pairs or bare reals. Schema problems throw ParseError; physically invalid
/// data throws qbcap::Error from the state constructors.
AnyState parse_state(const Json &j);
AnyState load_state_file(const std::string &path);
Json state_to_json(const XState &x);

/// {"eps", "gamma"}; gamma defaults to 0.
BatteryHamiltonian parse_hamiltonian(const Json &j);
BatteryHamiltonian load_hamiltonian_file(const std::string &path);
Json hamiltonian_to_json(const BatteryHamiltonian &h);

Json report_to_json(const CapacityReport &r);
Json gain_result_to_json(const GainResult &r, std::string_view strategy);
Json violation_record(std::string_view label, double gamma, double lhs, double rhs, double slack, const XState &state);

/// Locale-independent, 17 significant digits.
std::string format_fixed_digits(double x);
/// Shortest representation that round-trips.
std::string format_shortest(double x);

/// "0.5,0.3,0.1".
std::vector<double> parse_real_list(std::string_view text, std::string_view flag);
std::vector<int> parse_int_list(std::string_view text, std::string_view flag);
/// "lo:hi:count" (count evenly spaced points, both ends included when count
/// >= 2) or an explicit comma list. A count of 0 yields an empty grid.
std::vector<double> parse_grid(std::string_view text, std::string_view flag);

enum class Format { Table, Json, Csv };
Format parse_format(std::string_view name);

/// Rectangular output shared by the tabular commands.
class Table {
   public:
    using Cell = std::variant<std::monostate, double, std::string>;

    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {
    }
    void add_row(std::vector<Cell> row);
    const std::vector<std::string> &headers() const {
        return headers_;
    }
    const std::vector<std::vector<Cell>> &rows() const {
        return rows_;
    }

    void write_csv(std::ostream &out) const;
    void write_text(std::ostream &out) const;
    Json to_json() const;

   private:
    std::vector<std::string> headers_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace qbcap::cli

#endif  // QBCAP_CLI_IO_H
