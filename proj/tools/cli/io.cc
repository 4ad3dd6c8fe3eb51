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

#include "io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qbcap::cli {

namespace {

std::string element(std::string_view field, std::size_t index) {
    return std::string(field) + "[" + std::to_string(index) + "]";
}

const Json &require(const Json &j, const char *key) {
    if (!j.is_object()) {
        throw ParseError("<root>", "expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(key, "missing field");
    }
    return *it;
}

double read_real(const Json &j, const std::string &field) {
    if (!j.is_number()) {
        throw ParseError(field, "expected a number, got " + std::string(j.type_name()));
    }
    return j.get<double>();
}

Complex read_complex(const Json &j, const std::string &field) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(field, "expected [re, im] or a number");
    }
    return {read_real(j[0], field + "[0]"), read_real(j[1], field + "[1]")};
}

std::vector<double> read_real_array(const Json &j, const char *field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        out.push_back(read_real(j[k], element(field, k)));
    }
    return out;
}

int read_qubits(const Json &j) {
    const Json &n = require(j, "n");
    if (!n.is_number_integer()) {
        throw ParseError("n", "expected an integer");
    }
    return n.get<int>();
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, "cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ParseError(path, e.what());
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view token, std::string_view flag) {
    T value{};
    const char *first = token.data();
    const char *last = token.data() + token.size();
    if (!token.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(std::string(flag), "cannot parse '" + std::string(token) + "' as a number");
    }
    return value;
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

int state_qubits(const AnyState &state) {
    return std::visit([](const auto &s) { return s.n(); }, state);
}

AnyState parse_state(const Json &j) {
    const int n = read_qubits(j);
    if (j.contains("dense")) {
        const Json &rows = j["dense"];
        if (!rows.is_array() || rows.empty()) {
            throw ParseError("dense", "expected a non-empty array of rows");
        }
        const std::size_t d = rows.size();
        ComplexMatrix m(d);
        for (std::size_t r = 0; r < d; ++r) {
            const std::string row_field = element("dense", r);
            if (!rows[r].is_array() || rows[r].size() != d) {
                throw ParseError(row_field, "expected a row of " + std::to_string(d) + " entries");
            }
            for (std::size_t c = 0; c < d; ++c) {
                m(r, c) = read_complex(rows[r][c], element(row_field, c));
            }
        }
        return DensityMatrix(n, std::move(m));
    }
    std::vector<double> diag = read_real_array(require(j, "diag"), "diag");
    std::vector<Complex> anti;
    if (j.contains("anti")) {
        const Json &a = j["anti"];
        if (!a.is_array()) {
            throw ParseError("anti", "expected an array of [re, im] pairs");
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            anti.push_back(read_complex(a[k], element("anti", k)));
        }
    } else {
        anti.assign(diag.size() / 2, Complex{});
    }
    return XState(n, std::move(diag), std::move(anti));
}

AnyState load_state_file(const std::string &path) {
    return parse_state(read_file(path));
}

Json state_to_json(const XState &x) {
    Json anti = Json::array();
    for (const Complex &c : x.anti()) {
        anti.push_back({c.real(), c.imag()});
    }
    return Json{{"n", x.n()}, {"diag", std::vector<double>(x.diag().begin(), x.diag().end())}, {"anti", anti}};
}

BatteryHamiltonian parse_hamiltonian(const Json &j) {
    std::vector<double> eps = read_real_array(require(j, "eps"), "eps");
    double gamma = 0.0;
    if (j.contains("gamma")) {
        gamma = read_real(j["gamma"], "gamma");
    }
    return BatteryHamiltonian(std::move(eps), gamma);
}

BatteryHamiltonian load_hamiltonian_file(const std::string &path) {
    return parse_hamiltonian(read_file(path));
}

Json hamiltonian_to_json(const BatteryHamiltonian &h) {
    return Json{{"eps", std::vector<double>(h.eps().begin(), h.eps().end())}, {"gamma", h.gamma()}};
}

Json report_to_json(const CapacityReport &r) {
    return Json{{"total", r.total},   {"dephased_total", r.dephased_total}, {"marginals", r.marginals},
                {"rbc", r.rbc},       {"rbc_ic", r.rbc_ic},                 {"rbc_c", r.rbc_c}};
}

Json gain_result_to_json(const GainResult &r, std::string_view strategy) {
    Json ratio = nullptr;
    if (r.ratio) {
        ratio = *r.ratio;
    }
    return Json{{"strategy", strategy},
                {"permutation", r.permutation.image()},
                {"marginals_before", r.marginals_before},
                {"marginals_after", r.marginals_after},
                {"total_before", r.total_before},
                {"total_after", r.total_after},
                {"rbc_before", r.rbc_before},
                {"rbc_after", r.rbc_after},
                {"gain", r.gain},
                {"ratio", ratio}};
}

Json violation_record(std::string_view label, double gamma, double lhs, double rhs, double slack, const XState &state) {
    return Json{{"label", label}, {"gamma", gamma}, {"lhs", lhs},
                {"rhs", rhs},     {"slack", slack}, {"state", state_to_json(state)}};
}

std::string format_fixed_digits(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_shortest(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_real_list(std::string_view text, std::string_view flag) {
    std::vector<double> out;
    for (std::string_view token : split(text, ',')) {
        out.push_back(parse_number<double>(token, flag));
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view flag) {
    std::vector<int> out;
    for (std::string_view token : split(text, ',')) {
        out.push_back(parse_number<int>(token, flag));
    }
    return out;
}

std::vector<double> parse_grid(std::string_view text, std::string_view flag) {
    if (text.find(':') == std::string_view::npos) {
        return parse_real_list(text, flag);
    }
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ParseError(std::string(flag), "expected lo:hi:count");
    }
    const double lo = parse_number<double>(parts[0], flag);
    const double hi = parse_number<double>(parts[1], flag);
    const long count = parse_number<long>(parts[2], flag);
    if (count < 0) {
        throw ParseError(std::string(flag), "negative point count");
    }
    std::vector<double> grid;
    if (count == 1) {
        grid.push_back(lo);
    }
    for (long k = 0; count >= 2 && k < count; ++k) {
        grid.push_back(k == count - 1 ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
    }
    return grid;
}

Format parse_format(std::string_view name) {
    if (name == "table") {
        return Format::Table;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw ParseError("--format", "unknown format '" + std::string(name) + "'");
}

void Table::add_row(std::vector<Cell> row) {
    row.resize(headers_.size());
    rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream &out) const {
    for (std::size_t c = 0; c < headers_.size(); ++c) {
        out << (c ? "," : "") << csv_escape(headers_[c]);
    }
    out << '\n';
    for (const auto &row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out << ',';
            }
            if (const double *v = std::get_if<double>(&row[c])) {
                out << format_fixed_digits(*v);
            } else if (const std::string *s = std::get_if<std::string>(&row[c])) {
                out << csv_escape(*s);
            }
        }
        out << '\n';
    }
}

void Table::write_text(std::ostream &out) const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) {
        width[c] = headers_[c].size();
    }
    for (const auto &row : rows_) {
        auto &text = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const double *v = std::get_if<double>(&row[c])) {
                text.push_back(format_shortest(*v));
            } else if (const std::string *s = std::get_if<std::string>(&row[c])) {
                text.push_back(*s);
            } else {
                text.push_back("-");
            }
            width[c] = std::max(width[c], text.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string> &line) {
        std::string s;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) {
                s += "  ";
            }
            s += line[c];
            if (c + 1 < line.size()) {
                s.append(width[c] - line[c].size(), ' ');
            }
        }
        out << s << '\n';
    };
    emit(headers_);
    for (const auto &line : cells) {
        emit(line);
    }
}

Json Table::to_json() const {
    Json rows = Json::array();
    for (const auto &row : rows_) {
        Json obj = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const double *v = std::get_if<double>(&row[c])) {
                obj[headers_[c]] = *v;
            } else if (const std::string *s = std::get_if<std::string>(&row[c])) {
                obj[headers_[c]] = *s;
            } else {
                obj[headers_[c]] = nullptr;
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

}  // namespace qbcap::cli
