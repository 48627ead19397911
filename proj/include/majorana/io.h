// Copyright 2026 The Majorana Qutrit Authors
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

#ifndef MAJORANA_IO_H
#define MAJORANA_IO_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "majorana/analysis.h"
#include "majorana/states.h"

namespace majorana {

/// Shortest decimal that round-trips, independent of the C locale.
std::string format_number(double v);

/// Fixed notation with the given number of decimals, locale independent.
/// Negative zero prints without its sign.
std::string format_fixed(double v, int decimals);

double to_degrees(double radians);

using Cell = std::variant<std::string, double, long>;

struct Column {
    std::string name;
    /// Decimals used for double cells in pretty output.
    int pretty_decimals = 6;
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { Json, Csv, Pretty };

/// Parses "json", "csv" or "pretty"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

std::string render_csv(const Table &t);
std::string render_pretty(const Table &t);
/// Array of row objects keyed by column name.
nlohmann::json render_json(const Table &t);
std::string render(const Table &t, OutputFormat format);

nlohmann::json state_to_json(const MajoranaState &s);
nlohmann::json ray_to_json(const Ray &r);

/// A state in either shared encoding.
using EncodedState = std::variant<MajoranaState, Ray>;

/// Accepts {"majorana": [[theta1, phi1], [theta2, phi2]]} (radians) or
/// {"ray": [[re0, im0], [re1, im1], [re2, im2]]}. Throws
/// std::invalid_argument with a description on anything else.
EncodedState parse_state_json(std::string_view text);

/// {bins: [{phase_rad, phase_over_pi, count}], total}.
nlohmann::json census_to_json(const PhaseCensus &c);

}  // namespace majorana

#endif
