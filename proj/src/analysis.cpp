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

#include "bunching/analysis.hpp"

#include <cmath>
#include <string>

namespace bunching {
namespace {

constexpr double kNormalizationTol = 1e-6;

double factorial(std::size_t k) {
    double out = 1.0;
    for (std::size_t i = 2; i <= k; ++i) out *= static_cast<double>(i);
    return out;
}

void require_normalized(const Distribution& dist) {
    const double total = dist.total();
    if (!(std::abs(total - 1.0) <= kNormalizationTol)) {
        throw ValidationError("distribution is not normalized: probabilities sum to " + std::to_string(total));
    }
}

}  // namespace

void validate(const Statistics& stats) {
    if (!stats.indistinguishable_weight) return;
    if (stats.model != StatisticsModel::mixed) {
        throw ValidationError("an indistinguishability weight is only valid with the mixed model");
    }
    const double w = *stats.indistinguishable_weight;
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("indistinguishability weight must lie in [0, 1]");
}

Distribution distribution_for(const UnitaryMatrix& u, const InputSpec& input, const Statistics& stats) {
    validate(stats);
    if (!stats.indistinguishable_weight) return output_distribution(u, input, stats.model);
    return mix(output_distribution(u, input.as_single_species(), StatisticsModel::boson),
               output_distribution(u, input, StatisticsModel::mixed), *stats.indistinguishable_weight);
}

double collision_free_mass(const Distribution& dist) {
    double mass = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist.states()[i].collision_free()) mass += dist.probabilities()[i];
    }
    return mass;
}

double bunching_probability(const Distribution& dist) {
    require_normalized(dist);
    // Summed over the collision states directly so that outputs with no
    // collision weight (fermions) report exactly zero.
    double mass = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (!dist.states()[i].collision_free()) mass += dist.probabilities()[i];
    }
    return mass;
}

double full_bunching_probability(const Distribution& dist, std::size_t mode) {
    require_normalized(dist);
    if (mode >= dist.modes()) {
        throw DomainError("mode " + std::to_string(mode + 1) + " is outside 1.." + std::to_string(dist.modes()));
    }
    return dist.probability(OccupationState::all_in(dist.modes(), mode, static_cast<std::uint32_t>(dist.particles())));
}

double full_bunching_law(const OccupationState& g) {
    return factorial(g.total()) / g.factorial_product();
}

std::optional<double> full_bunching_ratio(const UnitaryMatrix& u, const InputSpec& input, std::size_t mode) {
    if (mode >= u.dim()) {
        throw DomainError("mode " + std::to_string(mode + 1) + " is outside 1.." + std::to_string(u.dim()));
    }
    const InputSpec bosons = input.as_single_species();
    const OccupationState target =
        OccupationState::all_in(u.dim(), mode, static_cast<std::uint32_t>(input.particle_count()));
    const double q_classical = transition_probability(u, bosons, target, StatisticsModel::classical);
    if (q_classical == 0.0) return std::nullopt;
    return transition_probability(u, bosons, target, StatisticsModel::boson) / q_classical;
}

double hom_invert(double t, double p_classical) {
    if (!(t >= 0.0)) throw DomainError("coincidence ratio t must be non-negative");
    if (!(p_classical >= 0.0 && p_classical <= 1.0)) throw DomainError("p_c must lie in [0, 1]");
    const double p_quantum = 1.0 - t * (1.0 - p_classical);
    if (!(p_quantum >= 0.0 && p_quantum <= 1.0)) {
        throw DomainError("inconsistent inputs: t (1 - p_c) = " + std::to_string(t * (1.0 - p_classical)) +
                          " exceeds 1");
    }
    return p_quantum;
}

std::optional<double> hom_ratio(double p_quantum, double p_classical) {
    if (p_classical == 1.0) return std::nullopt;
    return (1.0 - p_quantum) / (1.0 - p_classical);
}

double predicted_ratio_mixture(std::size_t n, double w) {
    if (n < 2) throw DomainError("mixture ratio needs at least 2 particles");
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight must lie in [0, 1]");
    return w * factorial(n) + (1.0 - w) * factorial(n - 1);
}

BunchingReport bunching_report(const UnitaryMatrix& u, const InputSpec& input, const Statistics& stats) {
    const Distribution dist = distribution_for(u, input, stats);
    require_normalized(dist);

    BunchingReport report;
    report.statistics = stats;
    report.collision_free = collision_free_mass(dist);
    report.p_bunch = bunching_probability(dist);

    const InputSpec distinguishable = input.as_single_species();
    const auto n = static_cast<std::uint32_t>(input.particle_count());
    for (std::size_t j = 0; j < u.dim(); ++j) {
        const OccupationState target = OccupationState::all_in(u.dim(), j, n);
        const double q = dist.probability(target);
        report.full_bunch.push_back(q);
        const double q_classical = transition_probability(u, distinguishable, target, StatisticsModel::classical);
        report.r_fb.push_back(q_classical == 0.0 ? std::nullopt : std::optional<double>(q / q_classical));
    }
    return report;
}

}  // namespace bunching
