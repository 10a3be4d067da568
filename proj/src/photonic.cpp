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

#include "bunching/photonic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bunching/permanent.hpp"

namespace bunching {
namespace {

double factorial(std::uint32_t k) noexcept {
    double out = 1.0;
    for (std::uint32_t i = 2; i <= k; ++i) out *= static_cast<double>(i);
    return out;
}

/// Mode index of every particle, ascending, from occupation numbers.
std::vector<std::size_t> expand(const OccupationState& occ) {
    std::vector<std::size_t> out;
    out.reserve(occ.total());
    for (std::size_t mode = 0; mode < occ.modes(); ++mode) out.insert(out.end(), occ[mode], mode);
    return out;
}

double boson_probability(const UnitaryMatrix& u, const OccupationState& g, const OccupationState& h) {
    const ComplexMatrix sub = scattering_submatrix(u, g, h);
    return std::norm(permanent_ryser(sub)) / (g.factorial_product() * h.factorial_product());
}

double classical_probability(const UnitaryMatrix& u, const OccupationState& g, const OccupationState& h) {
    const ComplexMatrix sub = scattering_submatrix(u, g, h);
    const double p = permanent_ryser(abs_squared(sub)) / h.factorial_product();
    // Inclusion-exclusion can leave a rounding-level negative on zero-weight states.
    return std::max(p, 0.0);
}

double fermion_probability(const UnitaryMatrix& u, const OccupationState& g, const OccupationState& h) {
    for (std::size_t k = 0; k < g.modes(); ++k) {
        if (g[k] > 1) {
            throw ModelError("fermion model: input mode " + std::to_string(k + 1) + " holds " +
                             std::to_string(g[k]) + " particles; the exclusion principle allows at most 1");
        }
    }
    if (h.total() != g.total()) throw ValidationError("output occupation sum does not match particle count");
    if (!h.collision_free()) return 0.0;
    return std::norm(determinant(scattering_submatrix(u, g, h)));
}

/// Calls `visit(part)` for every part <= budget (componentwise) whose entries
/// sum to `count`.
template <typename Visit>
void for_each_sub_occupation(const OccupationState& budget, std::uint32_t count, Visit&& visit) {
    OccupationState part(std::vector<std::uint32_t>(budget.modes(), 0));
    std::vector<std::uint32_t> suffix(budget.modes() + 1, 0);
    for (std::size_t k = budget.modes(); k-- > 0;) suffix[k] = suffix[k + 1] + budget[k];

    auto recurse = [&](auto&& self, std::size_t mode, std::uint32_t left) -> void {
        if (mode == budget.modes()) {
            if (left == 0) visit(part);
            return;
        }
        // Keep enough room in later modes for what is left.
        const std::uint32_t low = left > suffix[mode + 1] ? left - suffix[mode + 1] : 0;
        const std::uint32_t high = std::min(left, budget[mode]);
        for (std::uint32_t take = low; take <= high; ++take) {
            part[mode] = take;
            self(self, mode + 1, left - take);
        }
        part[mode] = 0;
    };
    recurse(recurse, 0, count);
}

double mixed_probability(const UnitaryMatrix& u, const std::vector<OccupationState>& species_inputs,
                         std::size_t index, const OccupationState& remaining) {
    if (index + 1 == species_inputs.size()) return boson_probability(u, species_inputs[index], remaining);
    const OccupationState& g = species_inputs[index];
    double total = 0.0;
    for_each_sub_occupation(remaining, g.total(), [&](const OccupationState& part) {
        const double here = boson_probability(u, g, part);
        if (here == 0.0) return;
        OccupationState rest = remaining;
        for (std::size_t k = 0; k < rest.modes(); ++k) rest[k] -= part[k];
        total += here * mixed_probability(u, species_inputs, index + 1, rest);
    });
    return total;
}

}  // namespace

OccupationState OccupationState::all_in(std::size_t modes, std::size_t mode, std::uint32_t n) {
    std::vector<std::uint32_t> counts(modes, 0);
    counts.at(mode) = n;
    return OccupationState(std::move(counts));
}

std::uint32_t OccupationState::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint32_t{0});
}

bool OccupationState::collision_free() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [](std::uint32_t c) { return c <= 1; });
}

double OccupationState::factorial_product() const noexcept {
    double out = 1.0;
    for (std::uint32_t c : counts_) out *= factorial(c);
    return out;
}

bool colex_less(const OccupationState& a, const OccupationState& b) noexcept {
    return std::lexicographical_compare(a.counts().rbegin(), a.counts().rend(), b.counts().rbegin(),
                                        b.counts().rend());
}

InputSpec::InputSpec(std::size_t modes, std::vector<Particle> particles)
    : modes_(modes), particles_(std::move(particles)) {
    if (modes_ == 0) throw ValidationError("input must have at least one mode");
    if (particles_.empty()) throw ValidationError("input must contain at least one particle");
    for (const Particle& p : particles_) {
        if (p.mode >= modes_) {
            throw ValidationError("input mode " + std::to_string(p.mode + 1) + " is outside 1.." +
                                  std::to_string(modes_));
        }
        if (p.species.empty()) throw ValidationError("species labels must be non-empty");
    }
}

InputSpec InputSpec::single_species(std::size_t modes, const std::vector<std::size_t>& input_modes) {
    std::vector<Particle> particles;
    particles.reserve(input_modes.size());
    for (std::size_t mode : input_modes) particles.push_back(Particle{mode, "a"});
    return InputSpec(modes, std::move(particles));
}

OccupationState InputSpec::occupations() const {
    std::vector<std::uint32_t> counts(modes_, 0);
    for (const Particle& p : particles_) ++counts[p.mode];
    return OccupationState(std::move(counts));
}

std::vector<std::size_t> InputSpec::r_tuple() const { return expand(occupations()); }

std::map<std::string, InputSpec> InputSpec::by_species() const {
    std::map<std::string, std::vector<Particle>> groups;
    for (const Particle& p : particles_) groups[p.species].push_back(p);
    std::map<std::string, InputSpec> out;
    for (auto& [label, members] : groups) out.emplace(label, InputSpec(modes_, std::move(members)));
    return out;
}

InputSpec InputSpec::as_single_species() const {
    std::vector<Particle> out = particles_;
    for (Particle& p : out) p.species = "a";
    return InputSpec(modes_, std::move(out));
}

InputSpec InputSpec::as_all_distinct() const {
    std::vector<Particle> out = particles_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i].species = "p" + std::to_string(i + 1);
    return InputSpec(modes_, std::move(out));
}

std::string_view to_string(StatisticsModel model) noexcept {
    switch (model) {
        case StatisticsModel::boson:
            return "boson";
        case StatisticsModel::classical:
            return "classical";
        case StatisticsModel::fermion:
            return "fermion";
        case StatisticsModel::mixed:
            return "mixed";
    }
    return "unknown";
}

StatisticsModel parse_model(std::string_view text) {
    for (StatisticsModel model :
         {StatisticsModel::boson, StatisticsModel::classical, StatisticsModel::fermion, StatisticsModel::mixed}) {
        if (text == to_string(model)) return model;
    }
    throw ValidationError("unknown statistics model '" + std::string(text) +
                          "' (expected boson, classical, fermion or mixed)");
}

ComplexMatrix scattering_submatrix(const UnitaryMatrix& u, const OccupationState& g, const OccupationState& h) {
    if (g.modes() != u.dim() || h.modes() != u.dim()) {
        throw ValidationError("occupation vectors must have " + std::to_string(u.dim()) + " entries");
    }
    if (g.total() != h.total()) {
        throw ValidationError("input holds " + std::to_string(g.total()) + " particles but output holds " +
                              std::to_string(h.total()));
    }
    const std::vector<std::size_t> in = expand(g);
    const std::vector<std::size_t> out = expand(h);
    const std::size_t n = in.size();
    ComplexMatrix sub(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) sub(a, b) = u(out[b], in[a]);
    }
    return sub;
}

double transition_probability(const UnitaryMatrix& u, const InputSpec& input, const OccupationState& h,
                              StatisticsModel model) {
    if (input.modes() != u.dim()) {
        throw DimensionError("input is defined on " + std::to_string(input.modes()) + " modes but U is " +
                             std::to_string(u.dim()) + "x" + std::to_string(u.dim()));
    }
    const OccupationState g = input.occupations();
    switch (model) {
        case StatisticsModel::boson:
            return boson_probability(u, g, h);
        case StatisticsModel::classical:
            return classical_probability(u, g, h);
        case StatisticsModel::fermion:
            return fermion_probability(u, g, h);
        case StatisticsModel::mixed:
            break;
    }
    if (h.modes() != u.dim()) throw ValidationError("output occupation has the wrong number of modes");
    if (h.total() != g.total()) throw ValidationError("output occupation sum does not match particle count");
    std::vector<OccupationState> species_inputs;
    for (const auto& [label, group] : input.by_species()) species_inputs.push_back(group.occupations());
    return mixed_probability(u, species_inputs, 0, h);
}

std::uint64_t output_state_count(std::size_t n, std::size_t m) noexcept {
    if (m == 0) return n == 0 ? 1 : 0;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    // C(m-1+i, i) = C(m-2+i, i-1) * (m-1+i) / i, exact at every step.
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint64_t factor = m - 1 + i;
        if (result > kMax / factor) return kMax;
        result = result * factor / i;
    }
    return result;
}

std::vector<OccupationState> enumerate_outputs(std::size_t n, std::size_t m) {
    if (m == 0) throw DomainError("enumerate_outputs: need at least one mode");
    const std::uint64_t count = output_state_count(n, m);
    if (count > kMaxOutputStates) {
        throw ResourceError(std::to_string(n) + " particles in " + std::to_string(m) + " modes give " +
                            std::to_string(count) + " output states, above the guard of " +
                            std::to_string(kMaxOutputStates));
    }
    std::vector<OccupationState> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint32_t> h(m, 0);
    h[0] = static_cast<std::uint32_t>(n);
    while (true) {
        out.emplace_back(h);
        std::size_t first = 0;
        while (first < m && h[first] == 0) ++first;
        if (first + 1 >= m) break;
        const std::uint32_t moved = h[first];
        h[first] = 0;
        h[first + 1] += 1;
        h[0] = moved - 1;
    }
    return out;
}

Distribution::Distribution(std::size_t modes, std::size_t particles, std::vector<OccupationState> states,
                           std::vector<double> probabilities)
    : modes_(modes), particles_(particles), states_(std::move(states)), probabilities_(std::move(probabilities)) {
    if (states_.size() != probabilities_.size()) throw DimensionError("one probability per state required");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (states_[i].modes() != modes_ || states_[i].total() != particles_) {
            throw ValidationError("distribution state #" + std::to_string(i + 1) + " has the wrong shape");
        }
        if (i > 0 && !colex_less(states_[i - 1], states_[i])) {
            throw ValidationError("distribution states must be strictly increasing in colex order");
        }
        if (!std::isfinite(probabilities_[i])) throw ValidationError("probabilities must be finite");
    }
}

double Distribution::probability(const OccupationState& h) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), h, colex_less);
    if (it == states_.end() || *it != h) return 0.0;
    return probabilities_[static_cast<std::size_t>(it - states_.begin())];
}

double Distribution::total() const noexcept { return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0); }

Distribution output_distribution(const UnitaryMatrix& u, const InputSpec& input, StatisticsModel model) {
    std::vector<OccupationState> states = enumerate_outputs(input.particle_count(), u.dim());
    std::vector<double> probs;
    probs.reserve(states.size());
    for (const OccupationState& h : states) probs.push_back(transition_probability(u, input, h, model));
    return Distribution(u.dim(), input.particle_count(), std::move(states), std::move(probs));
}

Distribution mix(const Distribution& a, const Distribution& b, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight must lie in [0, 1]");
    if (a.states() != b.states()) throw DimensionError("cannot mix distributions over different state lists");
    std::vector<double> probs(a.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = w * a.probabilities()[i] + (1.0 - w) * b.probabilities()[i];
    }
    return Distribution(a.modes(), a.particles(), a.states(), std::move(probs));
}

}  // namespace bunching
