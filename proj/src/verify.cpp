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

#include "bunching/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bunching/analysis.hpp"
#include "bunching/permanent.hpp"

namespace bunching {
namespace {

constexpr double kRatioTol = 1e-9;
constexpr double kPermanentTol = 1e-9;
constexpr double kNormalizationTol = 1e-9;
constexpr double kReductionTol = 1e-12;

std::size_t uniform_index(Engine& engine, std::size_t low, std::size_t high) {
    return std::uniform_int_distribution<std::size_t>(low, high)(engine);
}

double relative_error(Complex got, Complex want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

}  // namespace

InputSpec random_input(Engine& engine, std::size_t n, std::size_t m, bool force_repeat) {
    std::vector<std::size_t> modes(n);
    for (auto& mode : modes) mode = uniform_index(engine, 0, m - 1);
    if (force_repeat && n >= 2) modes[1] = modes[0];
    return InputSpec::single_species(m, modes);
}

ComplexMatrix random_complex_matrix(Engine& engine, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    std::vector<Complex> entries(rows * cols);
    for (auto& z : entries) {
        const double re = gauss(engine);
        z = Complex(re, gauss(engine));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

CheckResult check_full_bunching_law(Seed seed, std::size_t instances) {
    Engine engine = make_engine(seed);
    double worst = 0.0;
    std::size_t ratios = 0;
    std::size_t failures = 0;
    std::size_t repeated_inputs = 0;
    for (std::size_t k = 0; k < instances; ++k) {
        const std::size_t m = uniform_index(engine, 2, 8);
        const std::size_t n = uniform_index(engine, 2, 4);
        const InputSpec input = random_input(engine, n, m, k % 2 == 1);
        const UnitaryMatrix u = haar_sample(m, derive_seed(seed, k));
        const double law = full_bunching_law(input.occupations());
        if (!input.occupations().collision_free()) ++repeated_inputs;
        for (std::size_t j = 0; j < m; ++j) {
            const auto ratio = full_bunching_ratio(u, input, j);
            if (!ratio) continue;
            ++ratios;
            const double err = std::abs(*ratio - law) / law;
            worst = std::max(worst, err);
            if (!(err <= kRatioTol)) ++failures;
        }
    }
    std::ostringstream detail;
    detail << ratios << " ratios over " << instances << " unitaries (" << repeated_inputs
           << " inputs with a repeated mode), worst relative error " << worst;
    return {"full-bunching ratio equals n!/prod g_k!", failures == 0 && ratios > 0, detail.str()};
}

CheckResult check_permanent_oracles(Seed seed, std::size_t instances) {
    Engine engine = make_engine(seed);
    double worst = 0.0;
    for (std::size_t k = 0; k < instances; ++k) {
        const std::size_t n = 1 + k % 9;
        const ComplexMatrix a = random_complex_matrix(engine, n, n);
        const Complex oracle = permanent_naive(a);
        worst = std::max({worst, relative_error(permanent_ryser(a), oracle), relative_error(permanent_glynn(a), oracle)});
    }

    ComplexMatrix fourier(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) fourier(j, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((j * k) % 3) / 3.0);
    }
    const double fourier_err = std::abs(permanent_ryser(fourier) - Complex(-3.0, 0.0));

    std::ostringstream detail;
    detail << instances << " random matrices n <= 9, worst relative error " << worst
           << "; |per(F3) + 3| = " << fourier_err;
    return {"Ryser and Glynn match the brute-force permanent", worst <= kPermanentTol && fourier_err <= 1e-12,
            detail.str()};
}

CheckResult check_normalization(Seed seed, std::size_t instances) {
    Engine engine = make_engine(seed);
    double worst_total = 0.0;
    double worst_reduction = 0.0;
    for (std::size_t k = 0; k < instances; ++k) {
        const std::size_t m = uniform_index(engine, 2, 8);
        const std::size_t n = uniform_index(engine, 1, std::min<std::size_t>(4, m));
        const UnitaryMatrix u = haar_sample(m, derive_seed(seed, k));

        // Fermions need distinct input modes; the other models get an
        // arbitrary input with mixed species labels.
        std::vector<std::size_t> modes(m);
        for (std::size_t i = 0; i < m; ++i) modes[i] = i;
        std::shuffle(modes.begin(), modes.end(), engine);
        modes.resize(n);
        const InputSpec distinct = InputSpec::single_species(m, modes);
        const InputSpec general = random_input(engine, n, m, false);
        std::vector<Particle> labelled = general.particles();
        for (auto& p : labelled) p.species = uniform_index(engine, 0, 1) == 0 ? "a" : "b";
        const InputSpec species(m, labelled);

        const Distribution boson = output_distribution(u, general, StatisticsModel::boson);
        const Distribution classical = output_distribution(u, general, StatisticsModel::classical);
        const Distribution fermion = output_distribution(u, distinct, StatisticsModel::fermion);
        const Distribution mixed = output_distribution(u, species, StatisticsModel::mixed);
        for (const Distribution* d : {&boson, &classical, &fermion, &mixed}) {
            worst_total = std::max(worst_total, std::abs(d->total() - 1.0));
        }

        const Distribution same = output_distribution(u, general.as_single_species(), StatisticsModel::mixed);
        const Distribution apart = output_distribution(u, general.as_all_distinct(), StatisticsModel::mixed);
        for (std::size_t i = 0; i < same.size(); ++i) {
            worst_reduction = std::max({worst_reduction, std::abs(same.probabilities()[i] - boson.probabilities()[i]),
                                        std::abs(apart.probabilities()[i] - classical.probabilities()[i])});
        }
    }
    std::ostringstream detail;
    detail << instances << " instances, worst |sum - 1| = " << worst_total
           << ", worst mixed-model reduction error = " << worst_reduction;
    return {"distributions normalize and mixed reduces to boson/classical",
            worst_total <= kNormalizationTol && worst_reduction <= kReductionTol, detail.str()};
}

CheckResult check_fermion_exclusion(Seed seed, std::size_t instances) {
    Engine engine = make_engine(seed);
    std::size_t violations = 0;
    double worst_total = 0.0;
    for (std::size_t k = 0; k < instances; ++k) {
        const std::size_t n = uniform_index(engine, 2, 3);
        const std::size_t m = uniform_index(engine, n, 8);
        std::vector<std::size_t> modes(m);
        for (std::size_t i = 0; i < m; ++i) modes[i] = i;
        std::shuffle(modes.begin(), modes.end(), engine);
        modes.resize(n);
        const UnitaryMatrix u = haar_sample(m, derive_seed(seed, k));
        const Distribution dist = output_distribution(u, InputSpec::single_species(m, modes), StatisticsModel::fermion);
        if (bunching_probability(dist) != 0.0) ++violations;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if (!dist.states()[i].collision_free() && dist.probabilities()[i] != 0.0) ++violations;
        }
        worst_total = std::max(worst_total, std::abs(collision_free_mass(dist) - 1.0));
    }
    std::ostringstream detail;
    detail << instances << " unitaries, " << violations << " nonzero bunching outputs, worst |collision-free - 1| = "
           << worst_total;
    return {"fermions never bunch", violations == 0 && worst_total <= kNormalizationTol, detail.str()};
}

std::vector<CheckResult> run_verification(Seed seed) {
    return {
        check_full_bunching_law(derive_seed(seed, 1)),
        check_permanent_oracles(derive_seed(seed, 2)),
        check_normalization(derive_seed(seed, 3)),
        check_fermion_exclusion(derive_seed(seed, 4)),
    };
}

}  // namespace bunching
