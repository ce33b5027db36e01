// SPDX-License-Identifier: Apache-2.0
//
// nula: non-uniform linear antenna array design and analysis for mmWave LoS MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nula/table.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nula {

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable::add_row: cell count does not match columns");
    rows.push_back(std::move(row));
}

namespace {

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_cell(const Cell &c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return csv_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string &v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell &c) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(const std::string &v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

} // namespace

std::string ResultTable::to_csv() const {
    std::string out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (j)
            out += ',';
        out += columns[j];
    }
    out += '\n';
    for (const auto &row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ',';
            out += csv_cell(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string ResultTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"tool_version", tool_version}, {"scenario_hash", scenario_hash}};
    doc["columns"] = columns;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto &cell : row)
            r.push_back(json_cell(cell));
        rows_json.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows_json);
    return doc.dump(2) + "\n";
}

} // namespace nula
