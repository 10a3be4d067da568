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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bunching/circuit.hpp"
#include "bunching/photonic.hpp"
#include "bunching/verify.hpp"
#include "oracles.hpp"

using namespace bunching;

namespace {

OccupationState occ(std::vector<std::uint32_t> counts) { return OccupationState(std::move(counts)); }

InputSpec bosons(std::size_t m, std::vector<std::size_t> modes) { return InputSpec::single_species(m, modes); }

std::vector<std::size_t> modes_of(const InputSpec& input) {
    std::vector<std::size_t> out;
    for (const Particle& p : input.particles()) out.push_back(p.mode);
    return out;
}

}  // namespace

TEST_CASE("InputSpec derived quantities") {
    const InputSpec input(4, {{3, "x"}, {0, "y"}, {0, "x"}, {1, "x"}});
    CHECK(input.occupations() == occ({2, 1, 0, 1}));
    CHECK(input.r_tuple() == std::vector<std::size_t>{0, 0, 1, 3});
    const auto groups = input.by_species();
    REQUIRE(groups.size() == 2);
    CHECK(groups.at("x").occupations() == occ({1, 1, 0, 1}));
    CHECK(groups.at("y").occupations() == occ({1, 0, 0, 0}));
    CHECK_THROWS_AS(InputSpec(3, {{3, "a"}}), ValidationError);
    CHECK_THROWS_AS(InputSpec(3, {}), ValidationError);
}

TEST_CASE("scattering_submatrix") {
    const UnitaryMatrix u = haar_sample(3, Seed{1});

    // No repetition: U_{G,H} is U^T, which has the same permanent as U.
    const ComplexMatrix plain = scattering_submatrix(u, occ({1, 1, 1}), occ({1, 1, 1}));
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) CHECK(plain(a, b) == u(b, a));
    }

    // g = (2,1,0), h = (1,1,1): input particles from modes (1,1,2), i.e.
    // rows (1,1,2) of U^T.
    const ComplexMatrix rep = scattering_submatrix(u, occ({2, 1, 0}), occ({1, 1, 1}));
    const std::size_t in_modes[] = {0, 0, 1};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) CHECK(rep(a, b) == u(b, in_modes[a]));
    }

    // Everything leaves in mode j: entry (k, .) is U(j, r_k) for every column.
    const ComplexMatrix full = scattering_submatrix(u, occ({1, 1, 1}), occ({0, 3, 0}));
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t b = 0; b < 3; ++b) CHECK(full(k, b) == u(1, k));
    }

    CHECK_THROWS_AS(scattering_submatrix(u, occ({1, 1, 0}), occ({1, 1, 1})), ValidationError);
}

TEST_CASE("single-particle transitions are |U_ij|^2 in every model") {
    const UnitaryMatrix u = haar_sample(4, Seed{2});
    for (StatisticsModel model :
         {StatisticsModel::boson, StatisticsModel::classical, StatisticsModel::fermion, StatisticsModel::mixed}) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t i = 0; i < 4; ++i) {
                std::vector<std::uint32_t> h(4, 0);
                h[i] = 1;
                CHECK(transition_probability(u, bosons(4, {j}), occ(h), model) ==
                      doctest::Approx(std::norm(u(i, j))).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("Hong-Ou-Mandel and the ideal tritter") {
    const UnitaryMatrix bs = balanced_coupler();
    CHECK(transition_probability(bs, bosons(2, {0, 1}), occ({1, 1}), StatisticsModel::boson) < 1e-30);
    CHECK(transition_probability(bs, bosons(2, {0, 1}), occ({2, 0}), StatisticsModel::boson) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(transition_probability(bs, bosons(2, {0, 1}), occ({2, 0}), StatisticsModel::classical) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(transition_probability(bs, bosons(2, {0, 1}), occ({1, 1}), StatisticsModel::classical) ==
          doctest::Approx(0.5).epsilon(1e-14));

    // |per(F3 / sqrt 3)|^2 = |-3 / 3^{3/2}|^2 = 1/3.
    const UnitaryMatrix tritter = qft_tritter();
    CHECK(transition_probability(tritter, bosons(3, {0, 1, 2}), occ({1, 1, 1}), StatisticsModel::boson) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("fermion model rejects shared input modes and never bunches") {
    const UnitaryMatrix u = haar_sample(3, Seed{3});
    CHECK_THROWS_AS(transition_probability(u, bosons(3, {0, 0}), occ({1, 1, 0}), StatisticsModel::fermion), ModelError);
    CHECK(transition_probability(u, bosons(3, {0, 1}), occ({2, 0, 0}), StatisticsModel::fermion) == 0.0);
    CHECK_THROWS_AS(output_distribution(u, bosons(3, {2, 2}), StatisticsModel::fermion), ModelError);
}

TEST_CASE("enumerate_outputs") {
    CHECK(enumerate_outputs(1, 2) == std::vector<OccupationState>{occ({1, 0}), occ({0, 1})});
    CHECK(enumerate_outputs(2, 2) == std::vector<OccupationState>{occ({2, 0}), occ({1, 1}), occ({0, 2})});
    CHECK(enumerate_outputs(3, 5).size() == 35);
    CHECK(output_state_count(3, 5) == 35);
    CHECK(enumerate_outputs(0, 3) == std::vector<OccupationState>{occ({0, 0, 0})});

    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t m = 1; m <= 6; ++m) {
            const auto states = enumerate_outputs(n, m);
            CHECK(states.size() == output_state_count(n, m));
            CHECK(std::set<OccupationState>(states.begin(), states.end()).size() == states.size());
            CHECK(std::is_sorted(states.begin(), states.end(), colex_less));
            for (const auto& s : states) CHECK(s.total() == n);
        }
    }
    CHECK_THROWS_AS(enumerate_outputs(20, 20), ResourceError);
    CHECK_THROWS_AS(enumerate_outputs(1, 0), DomainError);
}

TEST_CASE("distributions match the Fock-space expansion oracle") {
    Engine engine = make_engine(Seed{10});
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 2 + trial % 4;
        const std::size_t n = 1 + trial % 3;
        const UnitaryMatrix u = haar_sample(m, derive_seed(Seed{10}, trial));
        const InputSpec input = random_input(engine, n, m, trial % 2 == 0);
        const auto inputs = modes_of(input);

        const Distribution boson = output_distribution(u, input, StatisticsModel::boson);
        const Distribution classical = output_distribution(u, input, StatisticsModel::classical);
        const auto boson_ref = oracle::boson_distribution(u, inputs);
        const auto classical_ref = oracle::classical_distribution(u, inputs);
        for (std::size_t i = 0; i < boson.size(); ++i) {
            const auto& h = boson.states()[i].counts();
            REQUIRE(boson.probabilities()[i] == doctest::Approx(boson_ref.at(h)).epsilon(1e-12).scale(1.0));
            REQUIRE(classical.probabilities()[i] == doctest::Approx(classical_ref.at(h)).epsilon(1e-12).scale(1.0));
        }

        if (input.occupations().collision_free() && n <= m) {
            const Distribution fermion = output_distribution(u, input, StatisticsModel::fermion);
            const auto fermion_ref = oracle::fermion_distribution(u, inputs);
            for (std::size_t i = 0; i < fermion.size(); ++i) {
                const auto it = fermion_ref.find(fermion.states()[i].counts());
                const double want = it == fermion_ref.end() ? 0.0 : it->second;
                REQUIRE(std::abs(fermion.probabilities()[i] - want) <= 1e-12);
            }
        }
    }
}

TEST_CASE("normalization of every model on random instances") {
    Engine engine = make_engine(Seed{11});
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 8)(engine);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, m))(engine);
        const UnitaryMatrix u = haar_sample(m, derive_seed(Seed{11}, trial));
        const InputSpec input = random_input(engine, n, m, false);
        std::vector<Particle> labelled = input.particles();
        for (std::size_t p = 0; p < labelled.size(); ++p) labelled[p].species = p % 2 ? "b" : "a";

        REQUIRE(std::abs(output_distribution(u, input, StatisticsModel::boson).total() - 1.0) <= 1e-9);
        REQUIRE(std::abs(output_distribution(u, input, StatisticsModel::classical).total() - 1.0) <= 1e-9);
        REQUIRE(std::abs(output_distribution(u, InputSpec(m, labelled), StatisticsModel::mixed).total() - 1.0) <= 1e-9);
        if (input.occupations().collision_free()) {
            REQUIRE(std::abs(output_distribution(u, input, StatisticsModel::fermion).total() - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("mixed model limits and relabelling") {
    Engine engine = make_engine(Seed{12});
    for (int trial = 0; trial < 40; ++trial) {
        const UnitaryMatrix u = haar_sample(4, derive_seed(Seed{12}, trial));
        const InputSpec input = random_input(engine, 3, 4, trial % 3 == 0);

        const Distribution boson = output_distribution(u, input, StatisticsModel::boson);
        const Distribution classical = output_distribution(u, input, StatisticsModel::classical);
        const Distribution same = output_distribution(u, input.as_single_species(), StatisticsModel::mixed);
        const Distribution apart = output_distribution(u, input.as_all_distinct(), StatisticsModel::mixed);
        for (std::size_t i = 0; i < boson.size(); ++i) {
            REQUIRE(std::abs(same.probabilities()[i] - boson.probabilities()[i]) <= 1e-12);
            REQUIRE(std::abs(apart.probabilities()[i] - classical.probabilities()[i]) <= 1e-12);
        }

        std::vector<Particle> ab = input.particles();
        std::vector<Particle> ba = input.particles();
        const char* labels[] = {"a", "a", "b"};
        for (std::size_t p = 0; p < 3; ++p) {
            ab[p].species = labels[p];
            ba[p].species = std::string(labels[p]) == "a" ? "zz" : "q";
        }
        const Distribution d1 = output_distribution(u, InputSpec(4, ab), StatisticsModel::mixed);
        const Distribution d2 = output_distribution(u, InputSpec(4, ba), StatisticsModel::mixed);
        for (std::size_t i = 0; i < d1.size(); ++i) REQUIRE(std::abs(d1.probabilities()[i] - d2.probabilities()[i]) <= 1e-14);
    }
}

TEST_CASE("boson and classical coincide for one particle") {
    const UnitaryMatrix u = haar_sample(5, Seed{13});
    const Distribution b = output_distribution(u, bosons(5, {2}), StatisticsModel::boson);
    const Distribution c = output_distribution(u, bosons(5, {2}), StatisticsModel::classical);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.probabilities()[i] == doctest::Approx(c.probabilities()[i]).epsilon(1e-14));
    // n = 1, m = 3: the three entries of column 1.
    const UnitaryMatrix v = haar_sample(3, Seed{14});
    const Distribution d = output_distribution(v, bosons(3, {0}), StatisticsModel::boson);
    for (std::size_t i = 0; i < 3; ++i) CHECK(d.probabilities()[i] == doctest::Approx(std::norm(v(i, 0))).epsilon(1e-14));
}

TEST_CASE("fermionic exclusion is exact") {
    Engine engine = make_engine(Seed{15});
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 3 + trial % 5;
        std::vector<std::size_t> modes(m);
        std::iota(modes.begin(), modes.end(), 0);
        std::shuffle(modes.begin(), modes.end(), engine);
        modes.resize(3);
        const Distribution d = output_distribution(haar_sample(m, derive_seed(Seed{15}, trial)), bosons(m, modes),
                                                   StatisticsModel::fermion);
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (!d.states()[i].collision_free()) REQUIRE(d.probabilities()[i] == 0.0);
        }
    }
}

TEST_CASE("classical distribution matches independent routing by Monte Carlo") {
    const UnitaryMatrix u = haar_sample(4, Seed{16});
    const InputSpec input = bosons(4, {0, 1, 1});
    const Distribution exact = output_distribution(u, input, StatisticsModel::classical);
    const std::uint64_t trials = 1'000'000;
    const auto freq = oracle::classical_monte_carlo(u, modes_of(input), trials, 16);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const double p = exact.probabilities()[i];
        const auto it = freq.find(exact.states()[i].counts());
        const double observed = it == freq.end() ? 0.0 : static_cast<double>(it->second) / trials;
        const double sigma = std::sqrt(p * (1.0 - p) / trials);
        REQUIRE(std::abs(observed - p) <= 5.0 * sigma + 1e-12);
    }
}

TEST_CASE("Distribution lookup and mixing") {
    const UnitaryMatrix u = haar_sample(3, Seed{17});
    const Distribution b = output_distribution(u, bosons(3, {0, 1}), StatisticsModel::boson);
    const Distribution c = output_distribution(u, bosons(3, {0, 1}), StatisticsModel::classical);
    CHECK(b.probability(occ({1, 0, 1})) == b.probabilities()[3]);
    CHECK(b.probability(occ({3, 0, 0})) == 0.0);
    const Distribution half = mix(b, c, 0.25);
    for (std::size_t i = 0; i < half.size(); ++i) {
        CHECK(half.probabilities()[i] == doctest::Approx(0.25 * b.probabilities()[i] + 0.75 * c.probabilities()[i]));
    }
    CHECK_THROWS_AS(mix(b, c, 1.5), DomainError);
    CHECK_THROWS_AS(Distribution(2, 1, {occ({0, 1}), occ({1, 0})}, {0.5, 0.5}), ValidationError);
}
