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

#include <clocale>
#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

#include "oracles.test.h"

using namespace majorana;

TEST(io, number_formatting) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
    EXPECT_EQ(format_fixed(57.3225, 2), "57.32");
    EXPECT_EQ(format_fixed(-0.001, 2), "0.00");
    EXPECT_EQ(format_fixed(-1.5, 1), "-1.5");
    EXPECT_NEAR(to_degrees(oracle::kPi), 180, 1e-13);
}

TEST(io, formatting_ignores_locale) {
    const char *old = std::setlocale(LC_NUMERIC, nullptr);
    std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") == nullptr) {
        GTEST_SKIP() << "de_DE locale not installed";
    }
    EXPECT_EQ(format_fixed(1.25, 2), "1.25");
    EXPECT_EQ(format_number(2.5), "2.5");
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST(io, parse_format) {
    EXPECT_EQ(parse_format("json"), OutputFormat::Json);
    EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
    EXPECT_EQ(parse_format("pretty"), OutputFormat::Pretty);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(io, render_table) {
    Table t;
    t.columns = {{"name", 0}, {"x", 2}, {"n", 0}};
    t.rows = {{std::string("a,b"), 1.0 / 3.0, 7L}, {std::string("c"), -2.5, 10L}};
    EXPECT_EQ(render_csv(t), "name,x,n\n\"a,b\",0.3333333333333333,7\nc,-2.5,10\n");
    EXPECT_EQ(render_pretty(t),
              "name      x   n\n"
              " a,b   0.33   7\n"
              "   c  -2.50  10\n");
    nlohmann::json j = render_json(t);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["name"], "a,b");
    EXPECT_EQ(j[1]["n"], 10);
    EXPECT_EQ(j[0]["x"].get<double>(), 1.0 / 3.0);
    EXPECT_EQ(render(t, OutputFormat::Csv), render_csv(t));
}

TEST(io, state_json_round_trip) {
    oracle::Gen gen(601);
    for (int i = 0; i < 500; i++) {
        MajoranaState s = gen.edge_state();
        EncodedState e = parse_state_json(state_to_json(s).dump());
        ASSERT_TRUE(std::holds_alternative<MajoranaState>(e));
        ASSERT_LT(state_distance(std::get<MajoranaState>(e), s), 1e-15);
        Ray r = to_ray(s);
        EncodedState f = parse_state_json(ray_to_json(r).dump());
        ASSERT_TRUE(std::holds_alternative<Ray>(f));
        ASSERT_LT(ray_distance(std::get<Ray>(f), r), 1e-15);
    }
}

TEST(io, state_json_schema) {
    nlohmann::json j = state_to_json(MajoranaState::from_angles(0, 0, oracle::kPi, 0));
    ASSERT_TRUE(j.contains("majorana"));
    EXPECT_EQ(j["majorana"].size(), 2u);
    EXPECT_EQ(j["majorana"][1][0].get<double>(), oracle::kPi);
    nlohmann::json r = ray_to_json(Ray(0, 1, 0));
    EXPECT_EQ(r["ray"][1][0].get<double>(), 1.0);
    EXPECT_EQ(r["ray"][0][1].get<double>(), 0.0);
}

TEST(io, state_json_rejects_malformed_input) {
    for (const char *bad : {
             "", "{", "[]", "{}", "{\"x\": 1}", "{\"majorana\": 1}", "{\"majorana\": [[0, 0]]}",
             "{\"majorana\": [[0, 0], [0]]}", "{\"majorana\": [[0, \"a\"], [0, 0]]}", "{\"majorana\": [[4, 0], [0, 0]]}",
             "{\"ray\": [[0, 0], [0, 0], [0, 0]]}", "{\"ray\": [[1, 0], [0, 0]]}",
             "{\"ray\": [[1, 0], [0, 0], [0, 0]], \"majorana\": [[0, 0], [0, 0]]}",
         }) {
        EXPECT_THROW(parse_state_json(bad), std::invalid_argument) << bad;
    }
}

TEST(io, census_json) {
    PhaseCensus c;
    c.bins = {{0.0, 3}, {oracle::kPi, 1}};
    c.total = 4;
    nlohmann::json j = census_to_json(c);
    EXPECT_EQ(j["total"], 4);
    ASSERT_EQ(j["bins"].size(), 2u);
    EXPECT_EQ(j["bins"][1]["count"], 1);
    EXPECT_EQ(j["bins"][1]["phase_over_pi"].get<double>(), 1.0);
}
