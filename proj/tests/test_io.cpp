// Copyright 2026 The Bunching Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bunching/io.hpp"

using namespace bunching;
using bunching::io::Json;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bunching_test_" + name);
}

}  // namespace

TEST_CASE("unitary files round-trip at full precision") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const UnitaryMatrix u = haar_sample(1 + s % 7, Seed{s});
        const auto path = temp_path("u.json");
        io::save_unitary(u, path);
        const UnitaryMatrix back = io::load_unitary(path);
        CHECK(max_abs_diff(u.matrix(), back.matrix()) <= 1e-15);
        CHECK(u == back);
    }
}

TEST_CASE("unitary loader validation") {
    CHECK_THROWS_AS(io::unitary_from_json(Json{{"m", 2}, {"re", {{1, 0}}}, {"im", {{0, 0}}}}), ValidationError);
    CHECK_THROWS_AS(io::unitary_from_json(Json{{"m", 1}, {"re", {{1}}}}), ValidationError);
    CHECK_THROWS_AS(io::unitary_from_json(Json{{"m", 1}, {"re", {{"x"}}}, {"im", {{0}}}}), ValidationError);

    // Within the 1e-8 loader tolerance but outside the 1e-10 construction one.
    const Json close{{"m", 1}, {"re", {{1.0 + 3e-9}}}, {"im", {{0.0}}}};
    CHECK_NOTHROW(io::unitary_from_json(close));
    try {
        io::unitary_from_json(Json{{"m", 2}, {"re", {{1, 0.1}, {0, 1}}}, {"im", {{0, 0}, {0, 0}}}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("0.1") != std::string::npos);
    }
    CHECK_THROWS_AS(io::load_unitary(temp_path("missing.json")), ValidationError);
}

TEST_CASE("circuit files") {
    const Json doc = Json::parse(R"({"m": 3, "elements": [
        {"type": "coupler", "a": 1, "b": 2, "t": 0.5},
        {"type": "phase", "mode": 3, "phi": 1.57}]})");
    const CircuitSpec spec = io::circuit_from_json(doc);
    REQUIRE(spec.elements.size() == 2);
    CHECK(std::get<Coupler>(spec.elements[0]) == Coupler{0, 1, 0.5});
    CHECK(std::get<PhaseShifter>(spec.elements[1]) == PhaseShifter{2, 1.57});
    CHECK(io::circuit_from_json(io::circuit_to_json(spec)) == spec);

    CHECK_THROWS_AS(io::circuit_from_json(Json::parse(R"({"m": 2, "elements": [{"type": "mirror"}]})")), ValidationError);
    CHECK_THROWS_AS(io::circuit_from_json(Json::parse(R"({"m": 2, "elements": [{"type": "phase", "mode": 0, "phi": 0}]})")),
                    ValidationError);
    CHECK_THROWS_AS(io::circuit_from_json(Json::parse(R"({"m": 2, "elements": [{"type": "coupler", "a": 2, "b": 3, "t": 0.5}]})")),
                    ValidationError);
}

TEST_CASE("distribution CSV") {
    const UnitaryMatrix u = haar_sample(3, Seed{4});
    const Distribution d = output_distribution(u, InputSpec::single_species(3, {0, 2}), StatisticsModel::boson);
    std::ostringstream out;
    io::write_distribution_csv(out, d);
    const std::string text = out.str();
    CHECK(text.rfind("h1,h2,h3,probability\n2,0,0,", 0) == 0);

    std::istringstream in(text);
    const Distribution back = io::read_distribution_csv(in);
    CHECK(back.states() == d.states());
    CHECK(back.probabilities() == d.probabilities());

    std::istringstream bad("h1,h2,prob\n1,0,1\n");
    CHECK_THROWS_AS(io::read_distribution_csv(bad), ValidationError);
}

TEST_CASE("number formatting") {
    CHECK(io::format_shortest(0.5) == "0.5");
    CHECK(io::format_shortest(2.0) == "2");
    CHECK(io::format_17(0.1) == "0.10000000000000001");
    CHECK(std::stod(io::format_shortest(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("report and ensemble serialization") {
    BunchingReport report;
    report.statistics = {StatisticsModel::mixed, 0.25};
    report.p_bunch = 0.75;
    report.collision_free = 0.25;
    report.full_bunch = {0.5, 0.25};
    report.r_fb = {2.0, std::nullopt};
    const Json doc = io::report_to_json(report);
    CHECK(doc["model"] == "mixed");
    CHECK(doc["weight"] == 0.25);
    CHECK(doc["r_fb"][1].is_null());
    CHECK(doc["r_fb"][0] == 2.0);
    CHECK(doc["full_bunch"].size() == 2);

    const EnsembleReport ens = haar_ensemble_scan(EnsembleRequest{InputSpec::single_species(3, {0, 1}), 5, Seed{1}, {}, 1});
    std::ostringstream csv;
    io::write_ensemble_csv(csv, ens);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "index,p_b");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        CHECK(std::stod(line.substr(line.find(',') + 1)) == ens.per_sample[rows]);
        ++rows;
    }
    CHECK(rows == 5);

    const Json summary = io::ensemble_summary_json(ens);
    for (const char* key : {"n", "m", "samples", "model", "mean", "std", "band_low", "band_high", "histogram"}) {
        CHECK(summary.contains(key));
    }
    CHECK(summary["histogram"]["counts"].size() == kHistogramBins);
}

TEST_CASE("mode and label lists") {
    CHECK(io::parse_mode_list("1,2,3", 3) == std::vector<std::size_t>{0, 1, 2});
    CHECK(io::parse_mode_list(" 2, 2 ", 3) == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(io::parse_mode_list("0,1", 3), ValidationError);
    CHECK_THROWS_AS(io::parse_mode_list("1,4", 3), ValidationError);
    CHECK_THROWS_AS(io::parse_mode_list("1,,2", 3), ValidationError);
    CHECK_THROWS_AS(io::parse_mode_list("1.5", 3), ValidationError);
    CHECK(io::parse_label_list("a,a,b") == std::vector<std::string>{"a", "a", "b"});
    CHECK_THROWS_AS(io::parse_label_list("a,,b"), ValidationError);
}
