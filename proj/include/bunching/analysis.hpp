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

#ifndef BUNCHING_ANALYSIS_HPP
#define BUNCHING_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bunching/matrix.hpp"
#include "bunching/photonic.hpp"

namespace bunching {

/// A statistics model plus an optional partial-distinguishability weight.
///
/// With a weight w (only meaningful for the mixed model) the output is the
/// mixture w * P_boson + (1 - w) * P_mixed: with probability w every particle
/// is indistinguishable, otherwise the species labels of the input apply.
/// For two photons labelled "a,b" this is the beta-visibility model; for
/// three photons labelled "a,a,b" it is the alpha^2 model where one photon is
/// distinguishable with probability 1 - alpha^2.
struct Statistics {
    StatisticsModel model = StatisticsModel::boson;
    std::optional<double> indistinguishable_weight;
};

/// Throws ValidationError when a weight is paired with a non-mixed model and
/// DomainError when the weight is outside [0, 1].
void validate(const Statistics& stats);

Distribution distribution_for(const UnitaryMatrix& u, const InputSpec& input, const Statistics& stats);

/// Sum of probabilities over outputs with every h_j <= 1.
double collision_free_mass(const Distribution& dist);

/// Probability that some mode holds two or more particles; equals
/// 1 - collision_free_mass for a normalized distribution. Throws
/// ValidationError if the distribution total is off by more than 1e-6.
double bunching_probability(const Distribution& dist);

/// Probability that all particles leave in `mode` (0-based). Throws
/// DomainError for an out-of-range mode.
double full_bunching_probability(const Distribution& dist, std::size_t mode);

/// n! / prod_k g_k!.
double full_bunching_law(const OccupationState& g);

/// q_boson(j) / q_classical(j) evaluated through the general permanent path,
/// with every particle treated as one species. Empty when q_classical(j) is
/// exactly zero, i.e. some U(j, r_k) vanishes.
std::optional<double> full_bunching_ratio(const UnitaryMatrix& u, const InputSpec& input, std::size_t mode);

/// Recovers the bosonic bunching probability from the coincidence ratio
/// t = (1 - p_q) / (1 - p_c): p_q = 1 - t (1 - p_c). Throws DomainError for
/// negative t, p_c outside [0, 1], or a result outside [0, 1].
double hom_invert(double t, double p_classical);

/// Forward direction of hom_invert. Empty when p_classical == 1.
std::optional<double> hom_ratio(double p_quantum, double p_classical);

/// w n! + (1 - w) (n - 1)!: expected full-bunching ratio when all n
/// particles are indistinguishable with probability w and otherwise one of
/// them is distinguishable from the rest. Throws DomainError for n < 2 or w
/// outside [0, 1].
double predicted_ratio_mixture(std::size_t n, double w);

struct BunchingReport {
    Statistics statistics;
    double p_bunch = 0.0;
    double collision_free = 0.0;
    std::vector<double> full_bunch;
    std::vector<std::optional<double>> r_fb;
};

/// Observables of `input` under `stats`. r_fb[j] is q_stats(j) / q_classical(j),
/// so for the boson model it is the full_bunching_ratio.
BunchingReport bunching_report(const UnitaryMatrix& u, const InputSpec& input, const Statistics& stats);

}  // namespace bunching

#endif
