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

#include "majorana/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majorana {

std::string format_number(double v) {
    if (v == 0) {
        return "0";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

double to_degrees(double radians) {
    return radians * 180.0 / kPi;
}

OutputFormat parse_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "pretty") {
        return OutputFormat::Pretty;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string cell_text(const Cell &c, int decimals) {
    if (const auto *s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto *l = std::get_if<long>(&c)) {
        return std::to_string(*l);
    }
    double d = std::get<double>(c);
    return decimals < 0 ? format_number(d) : format_fixed(d, decimals);
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string render_csv(const Table &t) {
    std::ostringstream out;
    for (size_t c = 0; c < t.columns.size(); c++) {
        out << (c ? "," : "") << csv_escape(t.columns[c].name);
    }
    out << '\n';
    for (const auto &row : t.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << csv_escape(cell_text(row[c], -1));
        }
        out << '\n';
    }
    return out.str();
}

std::string render_pretty(const Table &t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); c++) {
        width[c] = t.columns[c].name.size();
    }
    for (const auto &row : t.rows) {
        std::vector<std::string> line;
        for (size_t c = 0; c < row.size(); c++) {
            line.push_back(cell_text(row[c], t.columns[c].pretty_decimals));
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string> &line) {
        for (size_t c = 0; c < line.size(); c++) {
            if (c) {
                out << "  ";
            }
            out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << '\n';
    };
    std::vector<std::string> header;
    for (const auto &col : t.columns) {
        header.push_back(col.name);
    }
    emit(header);
    for (const auto &line : cells) {
        emit(line);
    }
    return out.str();
}

nlohmann::json render_json(const Table &t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t c = 0; c < row.size(); c++) {
            std::visit([&](const auto &v) { obj[t.columns[c].name] = v; }, row[c]);
        }
        rows.push_back(obj);
    }
    return rows;
}

std::string render(const Table &t, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return render_json(t).dump(2) + "\n";
        case OutputFormat::Csv:
            return render_csv(t);
        case OutputFormat::Pretty:
            return render_pretty(t);
    }
    return {};
}

nlohmann::json state_to_json(const MajoranaState &s) {
    SphericalAngles a = s.v1().spherical();
    SphericalAngles b = s.v2().spherical();
    return {{"majorana", {{a.theta(), a.phi()}, {b.theta(), b.phi()}}}};
}

nlohmann::json ray_to_json(const Ray &r) {
    nlohmann::json comps = nlohmann::json::array();
    for (size_t k = 0; k < 3; k++) {
        comps.push_back({r[k].real(), r[k].imag()});
    }
    return {{"ray", comps}};
}

namespace {

double number_at(const nlohmann::json &j, const char *what) {
    if (!j.is_number()) {
        throw std::invalid_argument(std::string(what) + " must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
    return v;
}

const nlohmann::json &pair_at(const nlohmann::json &arr, size_t k, const char *what) {
    const auto &p = arr.at(k);
    if (!p.is_array() || p.size() != 2) {
        throw std::invalid_argument(std::string(what) + " entries must be two-element arrays");
    }
    return p;
}

}  // namespace

EncodedState parse_state_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || j.size() != 1) {
        throw std::invalid_argument("expected an object with a single \"majorana\" or \"ray\" key");
    }
    if (j.contains("majorana")) {
        const auto &m = j["majorana"];
        if (!m.is_array() || m.size() != 2) {
            throw std::invalid_argument("\"majorana\" must hold two [theta, phi] pairs");
        }
        const auto &a = pair_at(m, 0, "\"majorana\"");
        const auto &b = pair_at(m, 1, "\"majorana\"");
        try {
            return MajoranaState::from_angles(number_at(a[0], "theta"), number_at(a[1], "phi"),
                                              number_at(b[0], "theta"), number_at(b[1], "phi"));
        } catch (const std::domain_error &e) {
            throw std::invalid_argument(e.what());
        }
    }
    if (j.contains("ray")) {
        const auto &r = j["ray"];
        if (!r.is_array() || r.size() != 3) {
            throw std::invalid_argument("\"ray\" must hold three [re, im] pairs");
        }
        std::array<cdouble, 3> c;
        for (size_t k = 0; k < 3; k++) {
            const auto &p = pair_at(r, k, "\"ray\"");
            c[k] = {number_at(p[0], "re"), number_at(p[1], "im")};
        }
        return Ray(c);
    }
    throw std::invalid_argument("expected a \"majorana\" or \"ray\" key");
}

nlohmann::json census_to_json(const PhaseCensus &c) {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto &b : c.bins) {
        bins.push_back({{"phase_rad", b.phase}, {"phase_over_pi", b.phase / kPi}, {"count", b.count}});
    }
    return {{"bins", bins}, {"total", c.total}};
}

}  // namespace majorana
