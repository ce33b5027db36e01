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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nula {

// One table cell. monostate renders as an empty CSV field / JSON null and is
// used for quantities that do not exist in a given row (e.g. an unachievable
// tau_min in a theta sweep).
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

// Column-named table of typed rows, the common currency of all CLI commands.
// Serialization is deterministic: a fixed table yields byte-identical CSV and
// JSON output. wall_clock_ms is diagnostic only and never serialized.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string tool_version;
    std::string scenario_hash; // empty when no scenario file is involved
    double wall_clock_ms = 0.0;

    void add_row(std::vector<Cell> row);

    // CSV: header row, '\n' line endings, '.' decimal separator, doubles at
    // 12 significant digits. Values never need quoting (no commas emitted).
    std::string to_csv() const;

    // JSON: {"meta": {...}, "columns": [...], "rows": [[...]]} with doubles at
    // full round-trip precision, 2-space indent, trailing newline.
    std::string to_json() const;
};

} // namespace nula
