/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "pendroa/config.hpp"
#include "pendroa/csv.hpp"

namespace pendroa {
namespace {

TEST(Csv, FormatRoundTrips) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 10000; ++i) {
        const double v = u(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
        EXPECT_EQ(parse_double(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(0.0), "0");
}

TEST(Csv, ParseRejectsGarbage) {
    EXPECT_EQ(parse_double(" +2.5 "), 2.5);
    EXPECT_THROW(parse_double("abc"), std::invalid_argument);
    EXPECT_THROW(parse_double("1.0x"), std::invalid_argument);
    EXPECT_THROW(parse_double(""), std::invalid_argument);
}

TEST(Csv, WriterAndSplitter) {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.header({"a", "b", "c", "d"});
    csv.field(1.5).field(true).empty().field("x");
    csv.end_row();
    EXPECT_EQ(os.str(), "a,b,c,d\n1.5,1,,x\n");
    const auto cells = split_csv_line("1.5,1,,x");
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[2], "");
    EXPECT_EQ(cells[3], "x");
}

TEST(Config, ParsesKeysAndComments) {
    std::istringstream in("# pendulum\npreset = long\nmass = 0.2  # override\n\ntorque_limit_fraction=0.25\nq0 = 2\n");
    const ConfigValues cfg = parse_config(in);
    EXPECT_EQ(cfg.preset, "long");
    const PendulumParams p = cfg.params();
    EXPECT_EQ(p.mass, 0.2);
    EXPECT_EQ(p.length, 1.744);
    EXPECT_EQ(cfg.limit_fraction(), 0.25);
    EXPECT_EQ(cfg.weights().q0, 2.0);
    EXPECT_EQ(cfg.weights().r, 1.0);
}

TEST(Config, DefaultsToNormalPreset) {
    const ConfigValues cfg;
    EXPECT_EQ(cfg.params().mass, 0.676);
    EXPECT_EQ(cfg.limit_fraction(), 0.5);
}

TEST(Config, LaterSourceWins) {
    std::istringstream in("mass = 1.0\nlength = 0.5\n");
    ConfigValues cfg = parse_config(in);
    ConfigValues flags;
    flags.mass = 2.0;
    cfg.merge(flags);
    EXPECT_EQ(cfg.params().mass, 2.0);
    EXPECT_EQ(cfg.params().length, 0.5);
}

TEST(Config, RejectsMalformedInput) {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_config(in);
    };
    EXPECT_THROW(parse("mass 1.0\n"), std::invalid_argument);
    EXPECT_THROW(parse("colour = red\n"), std::invalid_argument);
    EXPECT_THROW(parse("mass = heavy\n"), std::invalid_argument);
    EXPECT_THROW(parse("mass =\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("mass = -1\n").params(), std::invalid_argument);
    EXPECT_THROW((void)parse("preset = tall\n").params(), std::invalid_argument);
    EXPECT_THROW(load_config("/nonexistent/pendroa.cfg"), std::invalid_argument);
}

} // namespace
} // namespace pendroa
