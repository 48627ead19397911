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

// Command-line front end: rebuilds the state tables, runs the verification
// suites and the extension search, and converts between state encodings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majorana/analysis.h"
#include "majorana/io.h"
#include "majorana/kernels.h"
#include "majorana/mub.h"
#include "majorana/sic.h"

namespace {

using namespace majorana;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    double tol = 1e-9;
    std::string format = "pretty";
    uint64_t seed = 42;
    int grid = 720;
    std::string out;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open output file " + cfg.out);
    }
    f << text;
}

OutputFormat format_of(const RunConfig &cfg) {
    try {
        return parse_format(cfg.format);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

// Angle columns print with 2 decimals in pretty mode, ray parts with 4.
std::vector<Column> angle_columns() {
    return {{"theta1_deg", 2}, {"phi1_deg", 2}, {"theta2_deg", 2}, {"phi2_deg", 2}};
}

std::vector<Column> ray_columns() {
    return {{"re0", 4}, {"im0", 4}, {"re1", 4}, {"im1", 4}, {"re2", 4}, {"im2", 4}};
}

void append_angles(std::vector<Cell> &row, const MajoranaState &s) {
    SphericalAngles a = s.v1().spherical();
    SphericalAngles b = s.v2().spherical();
    row.insert(row.end(), {to_degrees(a.theta()), to_degrees(a.phi()), to_degrees(b.theta()), to_degrees(b.phi())});
}

void append_ray(std::vector<Cell> &row, const Ray &r) {
    for (size_t k = 0; k < 3; k++) {
        row.push_back(r[k].real());
        row.push_back(r[k].imag());
    }
}

Table indexed_table(const std::string &group, const std::vector<Column> &extra) {
    Table t;
    t.columns = {{group, 0}, {"state_index", 0}};
    t.columns.insert(t.columns.end(), extra.begin(), extra.end());
    return t;
}

Table mub_angle_table(const MubSet &m) {
    Table t = indexed_table("basis_index", angle_columns());
    for (size_t b = 0; b < m.size(); b++) {
        for (int k = 0; k < 3; k++) {
            std::vector<Cell> row{static_cast<long>(b + 1), static_cast<long>(k + 1)};
            append_angles(row, m.bases[b][k]);
            t.rows.push_back(row);
        }
    }
    return t;
}

Table mub_ray_table(const std::vector<RayBasis> &bases, const std::vector<std::string> &labels) {
    std::vector<Column> extra;
    if (!labels.empty()) {
        extra.push_back({"operator", 0});
    }
    auto rc = ray_columns();
    extra.insert(extra.end(), rc.begin(), rc.end());
    Table t = indexed_table("basis_index", extra);
    for (size_t b = 0; b < bases.size(); b++) {
        for (int k = 0; k < 3; k++) {
            std::vector<Cell> row{static_cast<long>(b + 1), static_cast<long>(k + 1)};
            if (!labels.empty()) {
                row.push_back(labels[b]);
            }
            append_ray(row, bases[b][k]);
            t.rows.push_back(row);
        }
    }
    return t;
}

const std::vector<std::string> kSicEtriads1 = {"AAA", "DDD", "DDD-inverted"};

Table sic_table(const Sic &s, bool rays) {
    Table t = indexed_table("etriad", rays ? ray_columns() : angle_columns());
    t.columns[0].pretty_decimals = 0;
    for (size_t i = 0; i < s.size(); i++) {
        std::vector<Cell> row{kSicEtriads1[i / 3], static_cast<long>(i % 3 + 1)};
        if (rays) {
            append_ray(row, to_ray(s[i]));
        } else {
            append_angles(row, s[i]);
        }
        t.rows.push_back(row);
    }
    return t;
}

Table etriad_table() {
    Table t;
    t.columns = {{"label", 0}, {"geometry", 0}};
    auto ac = angle_columns();
    t.columns.insert(t.columns.end(), ac.begin(), ac.end());
    t.columns.push_back({"residual", -1});
    t.columns.push_back({"table_residual", -1});
    for (const auto &e : catalog_etriads()) {
        std::vector<Cell> row{e.label, e.geometry, to_degrees(e.seed.theta1), to_degrees(e.seed.phi1),
                              to_degrees(e.seed.theta2), to_degrees(e.seed.phi2), e.residual, e.table_residual};
        t.rows.push_back(row);
    }
    return t;
}

Sic sic_by_name(const std::string &name, double phi_a, double phi_b) {
    if (name == "sic1") {
        return build_sic1(phi_a, phi_b);
    }
    if (name == "sic2") {
        return build_sic2();
    }
    throw UsageError("unknown SIC '" + name + "' (expected sic1 or sic2)");
}

std::string census_text(const PhaseCensus &c, OutputFormat f) {
    if (f == OutputFormat::Json) {
        return census_to_json(c).dump(2) + "\n";
    }
    Table t;
    t.columns = {{"phase_rad", 6}, {"phase_over_pi", 6}, {"count", 0}};
    for (const auto &b : c.bins) {
        t.rows.push_back({b.phase, b.phase / kPi, static_cast<long>(b.count)});
    }
    std::string s = render(t, f);
    if (f == OutputFormat::Pretty) {
        s += "total " + std::to_string(c.total) + "\n";
    }
    return s;
}

std::string hesse_text(const HesseConfiguration &h, OutputFormat f) {
    if (f == OutputFormat::Json) {
        nlohmann::json j;
        j["mub_partners"] = h.mub_partners;
        j["sic_partners"] = h.sic_partners;
        j["total_pairs"] = h.total_pairs;
        j["one_per_basis"] = h.one_per_basis;
        return j.dump(2) + "\n";
    }
    Table t;
    t.columns = {{"side", 0}, {"index", 0}, {"partners", 0}, {"count", 0}};
    auto join = [](const std::vector<int> &v) {
        std::string s;
        for (size_t i = 0; i < v.size(); i++) {
            s += (i ? ";" : "") + std::to_string(v[i]);
        }
        return s;
    };
    for (size_t i = 0; i < h.mub_partners.size(); i++) {
        t.rows.push_back({std::string("mub"), static_cast<long>(i), join(h.mub_partners[i]),
                          static_cast<long>(h.mub_partners[i].size())});
    }
    for (size_t i = 0; i < h.sic_partners.size(); i++) {
        t.rows.push_back({std::string("sic"), static_cast<long>(i), join(h.sic_partners[i]),
                          static_cast<long>(h.sic_partners[i].size())});
    }
    return render(t, f);
}

int cmd_tables(const RunConfig &cfg, const std::string &which, const std::string &sic, double phi_a, double phi_b) {
    OutputFormat f = format_of(cfg);
    std::string text;
    if (which == "mub-majorana") {
        text = render(mub_angle_table(build_maximal_mub()), f);
    } else if (which == "mub-rays") {
        std::vector<RayBasis> rays;
        for (const auto &b : build_maximal_mub().bases) {
            rays.push_back({to_ray(b[0]), to_ray(b[1]), to_ray(b[2])});
        }
        text = render(mub_ray_table(rays, {}), f);
    } else if (which == "mub-pauli") {
        text = render(mub_ray_table(build_pauli_mub(), {"Z,Z^2", "W,W^2", "Y,Y^2", "X,X^2"}), f);
    } else if (which == "mub-unextendible") {
        Table t = mub_angle_table(build_unextendible_triple());
        auto rays = unextendible_triple_rays();
        for (const auto &c : ray_columns()) {
            t.columns.push_back({"rotated_" + c.name, c.pretty_decimals});
        }
        for (size_t i = 0; i < t.rows.size(); i++) {
            append_ray(t.rows[i], rays[i / 3][i % 3]);
        }
        text = render(t, f);
    } else if (which == "etriads") {
        text = render(etriad_table(), f);
    } else if (which == "sic1" || which == "sic1-rays") {
        text = render(sic_table(build_sic1(phi_a, phi_b), which == "sic1-rays"), f);
    } else if (which == "sic2" || which == "sic2-rays") {
        text = render(sic_table(build_sic2(), which == "sic2-rays"), f);
    } else if (which == "phase-census") {
        text = census_text(phase_census(sic_by_name(sic, phi_a, phi_b)), f);
    } else if (which == "hesse") {
        text = hesse_text(hesse_configuration(), f);
    } else {
        throw UsageError("unknown table '" + which + "'");
    }
    emit(cfg, text);
    return kExitOk;
}

struct Report {
    std::vector<std::pair<std::string, Cell>> entries;
    bool passed = true;

    void add(const std::string &k, Cell v) { entries.emplace_back(k, std::move(v)); }
    void check(const std::string &k, double v, double tol) {
        add(k, v);
        passed = passed && v < tol;
    }
};

std::string report_text(const Report &r, OutputFormat f) {
    if (f == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto &[k, v] : r.entries) {
            std::visit([&](const auto &x) { j[k] = x; }, v);
        }
        j["passed"] = r.passed;
        return j.dump(2) + "\n";
    }
    Table t;
    t.columns = {{"metric", 0}, {"value", -1}};
    for (const auto &[k, v] : r.entries) {
        t.rows.push_back({k, v});
    }
    t.rows.push_back({std::string("status"), std::string(r.passed ? "PASS" : "FAIL")});
    return render(t, f);
}

void add_mub(Report &r, const MubReport &m, double tol) {
    r.add("bases", static_cast<long>(m.bases));
    r.check("max_orthogonality", m.max_orthogonality, tol);
    r.check("max_normalization", m.max_normalization, tol);
    r.check("max_cross", m.max_cross, tol);
}

void add_sic(Report &r, const SicReport &s, double tol) {
    r.add("states", static_cast<long>(s.size));
    r.check("max_overlap_error", s.max_overlap_error, tol);
    r.check("projector_sum_error", s.projector_sum_error, tol);
    r.passed = r.passed && s.cardinality_ok;
}

int cmd_verify(const RunConfig &cfg, const std::string &target, double phi_a, double phi_b, long samples) {
    Report r;
    if (target == "mub") {
        add_mub(r, verify_mub(build_maximal_mub(), cfg.tol), cfg.tol);
    } else if (target == "unextendible") {
        add_mub(r, verify_mub(build_unextendible_triple(), cfg.tol), cfg.tol);
    } else if (target == "sic1") {
        r.add("phi_a", phi_a);
        r.add("phi_b", phi_b);
        add_sic(r, verify_sic(build_sic1(phi_a, phi_b), cfg.tol), cfg.tol);
    } else if (target == "sic2") {
        add_sic(r, verify_sic(build_sic2(), cfg.tol), cfg.tol);
    } else if (target == "hesse") {
        HesseConfiguration h = hesse_configuration();
        r.add("total_pairs", static_cast<long>(h.total_pairs));
        r.add("one_per_basis", std::string(h.one_per_basis ? "yes" : "no"));
        bool counts = true;
        for (const auto &p : h.mub_partners) {
            counts = counts && p.size() == 3;
        }
        for (const auto &p : h.sic_partners) {
            counts = counts && p.size() == 4;
        }
        r.passed = h.total_pairs == 36 && h.one_per_basis && counts;
    } else if (target == "oracle") {
        if (samples <= 0) {
            throw UsageError("--samples must be positive");
        }
        OracleSweep s = parallel::oracle_sweep(random_state_pairs(static_cast<size_t>(samples), cfg.seed));
        r.add("samples", static_cast<long>(s.samples));
        r.add("seed", static_cast<long>(cfg.seed));
        r.check("max_oracle_error", s.max_oracle_error, cfg.tol);
        r.check("max_ray_error", s.max_ray_error, cfg.tol);
    } else {
        throw UsageError("unknown verification target '" + target + "'");
    }
    emit(cfg, report_text(r, format_of(cfg)));
    return r.passed ? kExitOk : kExitFail;
}

int cmd_solve(const RunConfig &cfg) {
    SpecialAnglesSolution s = solve_special_angles();
    OutputFormat f = format_of(cfg);
    const auto &a = s.angles;
    const std::pair<const char *, double> angles[] = {
        {"theta_d", a.theta_d}, {"phi_d", a.phi_d}, {"phi_h", a.phi_h},
        {"theta_i", a.theta_i}, {"phi_i", a.phi_i}, {"phi_r", a.phi_r},
    };
    const auto &res = s.residuals;
    const std::pair<const char *, double> residuals[] = {
        {"theta_d_poly", res.theta_d_poly},         {"theta_i_poly", res.theta_i_poly},
        {"phi_d_def", res.phi_d_def},               {"phi_i_def", res.phi_i_def},
        {"phi_h_quartic", res.phi_h_quartic},       {"phi_h_equation", res.phi_h_equation},
        {"phi_h_identity", res.phi_h_identity},     {"phi_h_closed_form", res.phi_h_closed_form},
        {"phi_r_identity", res.phi_r_identity},
    };
    bool ok = true;
    for (const auto &[k, v] : residuals) {
        ok = ok && std::abs(v) < cfg.tol;
    }
    std::string text;
    if (f == OutputFormat::Json) {
        nlohmann::json j;
        for (const auto &[k, v] : angles) {
            j["angles"][k] = {{"rad", v}, {"deg", to_degrees(v)}};
        }
        for (const auto &[k, v] : residuals) {
            j["residuals"][k] = v;
        }
        text = j.dump(2) + "\n";
    } else {
        Table t;
        t.columns = {{"angle", 0}, {"rad", -1}, {"deg", 2}};
        for (const auto &[k, v] : angles) {
            t.rows.push_back({std::string(k), v, to_degrees(v)});
        }
        Table r;
        r.columns = {{"residual", 0}, {"value", -1}};
        for (const auto &[k, v] : residuals) {
            r.rows.push_back({std::string(k), v});
        }
        text = render(t, f) + (f == OutputFormat::Pretty ? "\n" : "") + render(r, f);
    }
    emit(cfg, text);
    return ok ? kExitOk : kExitFail;
}

int cmd_search(const RunConfig &cfg, const std::vector<std::string> &base) {
    if (base.empty()) {
        throw UsageError("--base is required");
    }
    if (cfg.grid < 100) {
        throw UsageError("search needs --grid >= 100");
    }
    MubSet m;
    size_t expected = 0;
    const std::string &kind = base[0];
    if (kind == "unextendible" && base.size() == 1) {
        m = build_unextendible_triple();
    } else if (kind == "maximal" && base.size() == 1) {
        m = build_maximal_mub();
    } else if (kind == "cac-plus-cone" && base.size() == 2) {
        double theta;
        try {
            size_t used = 0;
            theta = std::stod(base[1], &used);
            if (used != base[1].size()) {
                throw std::invalid_argument("trailing characters");
            }
            m.bases = {cac_basis(), double_cone_basis({theta, 0, false})};
        } catch (const std::exception &e) {
            throw UsageError("bad cone angle '" + base[1] + "': " + e.what());
        }
        expected = 3;
    } else {
        throw UsageError("--base must be 'unextendible', 'maximal' or 'cac-plus-cone THETA'");
    }
    ExtensionSearchOptions opt;
    opt.grid = cfg.grid;
    ExtensionSearchResult res = search_unbiased_extension(m, opt);
    bool ok = res.hits.size() == expected;

    OutputFormat f = format_of(cfg);
    std::string text;
    auto hit_table = [&](const std::vector<ExtensionHit> &hits) {
        Table t;
        t.columns = {{"theta_deg", 4}, {"psi_deg", 4}, {"sheet", 0}, {"residual", -1}};
        auto ac = angle_columns();
        t.columns.insert(t.columns.end(), ac.begin(), ac.end());
        for (const auto &h : hits) {
            std::vector<Cell> row{to_degrees(h.params.theta), to_degrees(h.params.psi),
                                  std::string(h.params.mirror ? "mirror" : "plus"), h.residual};
            append_angles(row, h.state);
            t.rows.push_back(row);
        }
        return t;
    };
    if (f == OutputFormat::Json) {
        nlohmann::json j;
        j["hits"] = render_json(hit_table(res.hits));
        j["near_misses"] = render_json(hit_table(res.near_misses));
        j["candidates"] = res.candidates;
        j["min_grid_cost"] = res.min_grid_cost;
        j["expected_hits"] = expected;
        j["expected_met"] = ok;
        text = j.dump(2) + "\n";
    } else {
        text = render(hit_table(res.hits), f);
        if (f == OutputFormat::Pretty) {
            text += "hits " + std::to_string(res.hits.size()) + ", near misses " +
                    std::to_string(res.near_misses.size()) + ", candidates " + std::to_string(res.candidates) +
                    ", min grid cost " + format_number(res.min_grid_cost) + "\n";
            text += "expected " + std::to_string(expected) + " hits: " + (ok ? "met" : "NOT met") + "\n";
        }
    }
    emit(cfg, text);
    return ok ? kExitOk : kExitFail;
}

int cmd_convert(const RunConfig &cfg, const std::string &input, bool round_trip) {
    std::string text = input;
    if (text.empty() || text == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    EncodedState parsed;
    try {
        parsed = parse_state_json(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    nlohmann::json out;
    double residual = 0;
    if (const auto *s = std::get_if<MajoranaState>(&parsed)) {
        Ray r = to_ray(*s);
        out = ray_to_json(r);
        residual = state_distance(from_ray(r), *s);
    } else {
        const Ray &r = std::get<Ray>(parsed);
        MajoranaState back = from_ray(r);
        out = state_to_json(back);
        residual = ray_distance(to_ray(back), r);
    }
    bool ok = true;
    if (round_trip) {
        out["round_trip_residual"] = residual;
        ok = residual < cfg.tol;
    }
    emit(cfg, out.dump() + "\n");
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spin-1 states in the Majorana representation: MUB and SIC tables, checks and searches"};
    app.fallthrough();
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "Pass/fail tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--seed", cfg.seed, "Seed for mt19937_64 sampling");
    app.add_option("--grid", cfg.grid, "Grid points along theta for searches")->check(CLI::Range(16, 100000));
    app.add_option("--out", cfg.out, "Write output to FILE instead of stdout");

    std::string which, sic = "sic2";
    double phi_a = 0, phi_b = 0;
    auto *tables = app.add_subcommand("tables", "Emit a state table");
    tables
        ->add_option("which", which, "Table name")
        ->required()
        ->check(CLI::IsMember({"mub-majorana", "mub-rays", "mub-pauli", "mub-unextendible", "etriads", "sic1",
                               "sic1-rays", "sic2", "sic2-rays", "phase-census", "hesse"}));
    tables->add_option("--sic", sic, "SIC for phase-census")->check(CLI::IsMember({"sic1", "sic2"}));
    tables->add_option("--phi-a", phi_a, "SIC-1 rotation of the first DDD etriad (rad)");
    tables->add_option("--phi-b", phi_b, "SIC-1 rotation of the second DDD etriad (rad)");

    std::string target;
    long samples = 100000;
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("target", target, "What to verify")
        ->required()
        ->check(CLI::IsMember({"mub", "unextendible", "sic1", "sic2", "hesse", "oracle"}));
    verify->add_option("--phi-a", phi_a, "SIC-1 phi_a (rad)");
    verify->add_option("--phi-b", phi_b, "SIC-1 phi_b (rad)");
    verify->add_option("--samples", samples, "Random state pairs for the oracle sweep");

    std::string solve_what;
    auto *solve = app.add_subcommand("solve", "Solve for the special angles");
    solve->add_option("what", solve_what)->required()->check(CLI::IsMember({"angles"}));

    std::string search_what;
    std::vector<std::string> base;
    auto *search = app.add_subcommand("search", "Search for states unbiased to a basis set");
    search->add_option("what", search_what)->required()->check(CLI::IsMember({"extend"}));
    search->add_option("--base", base, "unextendible | maximal | cac-plus-cone THETA")->expected(1, 2)->required();

    std::string input;
    bool round_trip = false;
    auto *convert = app.add_subcommand("convert", "Convert a state between Majorana and ray JSON");
    convert->add_option("input", input, "State JSON, or - for stdin");
    convert->add_flag("--round-trip", round_trip, "Convert back and report the residual");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tables) {
            return cmd_tables(cfg, which, sic, phi_a, phi_b);
        }
        if (*verify) {
            return cmd_verify(cfg, target, phi_a, phi_b, samples);
        }
        if (*solve) {
            return cmd_solve(cfg);
        }
        if (*search) {
            return cmd_search(cfg, base);
        }
        if (*convert) {
            return cmd_convert(cfg, input, round_trip);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
