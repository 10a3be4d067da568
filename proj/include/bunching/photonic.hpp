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

#ifndef BUNCHING_PHOTONIC_HPP
#define BUNCHING_PHOTONIC_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bunching/matrix.hpp"

namespace bunching {

/// Occupation numbers h_1..h_m of an m-mode Fock state (0-based storage).
class OccupationState {
public:
    OccupationState() = default;
    explicit OccupationState(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}

    /// n * e_mode on `modes` modes.
    static OccupationState all_in(std::size_t modes, std::size_t mode, std::uint32_t n);

    std::size_t modes() const noexcept { return counts_.size(); }
    std::uint32_t total() const noexcept;
    std::uint32_t operator[](std::size_t mode) const noexcept { return counts_[mode]; }
    std::uint32_t& operator[](std::size_t mode) noexcept { return counts_[mode]; }
    const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

    /// No mode holds more than one particle.
    bool collision_free() const noexcept;

    /// Product of h_j!.
    double factorial_product() const noexcept;

    friend bool operator==(const OccupationState&, const OccupationState&) = default;
    friend auto operator<=>(const OccupationState&, const OccupationState&) = default;

private:
    std::vector<std::uint32_t> counts_;
};

/// Colexicographic comparison: the last mode is most significant.
bool colex_less(const OccupationState& a, const OccupationState& b) noexcept;

struct Particle {
    std::size_t mode = 0;  // 0-based input mode
    std::string species = "a";

    friend bool operator==(const Particle&, const Particle&) = default;
};

/// n particles injected into an m-mode interferometer. Particles sharing a
/// species label are mutually indistinguishable; different labels never
/// interfere.
class InputSpec {
public:
    /// Throws ValidationError if a mode is out of range or there are no
    /// particles.
    InputSpec(std::size_t modes, std::vector<Particle> particles);

    /// All particles of one species, one per listed mode.
    static InputSpec single_species(std::size_t modes, const std::vector<std::size_t>& input_modes);

    std::size_t modes() const noexcept { return modes_; }
    std::size_t particle_count() const noexcept { return particles_.size(); }
    const std::vector<Particle>& particles() const noexcept { return particles_; }

    /// g_k: number of particles in input mode k.
    OccupationState occupations() const;

    /// Input modes of all particles in nondecreasing order.
    std::vector<std::size_t> r_tuple() const;

    /// Particles grouped by species label, labels in sorted order.
    std::map<std::string, InputSpec> by_species() const;

    /// Same modes, every particle relabelled to one species.
    InputSpec as_single_species() const;

    /// Same modes, every particle given its own species.
    InputSpec as_all_distinct() const;

    bool operator==(const InputSpec&) const = default;

private:
    std::size_t modes_;
    std::vector<Particle> particles_;
};

enum class StatisticsModel { boson, classical, fermion, mixed };

std::string_view to_string(StatisticsModel model) noexcept;

/// Parses "boson", "classical", "fermion" or "mixed"; throws ValidationError.
StatisticsModel parse_model(std::string_view text);

/// Builds U_{G,H}: row a belongs to the a-th input particle (mode k repeated
/// g_k times, ascending) and column b to the b-th output slot (mode j repeated
/// h_j times, ascending); the entry is the amplitude U(out_b, in_a).
///
/// With this orientation a full-bunching matrix has constant rows, so every
/// Ryser term is an exact multiple of prod_k U(j, r_k) and the full-bunching
/// probabilities keep full relative precision even when some amplitudes are
/// small.
/// Throws ValidationError when sum(g) != sum(h) or lengths differ from U.
ComplexMatrix scattering_submatrix(const UnitaryMatrix& u, const OccupationState& g, const OccupationState& h);

/// Probability of detecting `h` at the output.
///   boson:     |per U_GH|^2 / (prod g! prod h!)
///   classical: per(|U_GH|^2) / prod h!
///   fermion:   0 if some h_j >= 2, otherwise |det U_GH|^2
///   mixed:     sum over splits h = sum_s h^(s) of prod_s boson(species s, h^(s))
/// Throws ModelError for fermions sharing an input mode.
double transition_probability(const UnitaryMatrix& u, const InputSpec& input, const OccupationState& h,
                              StatisticsModel model);

/// Refuses enumerations with more states than this.
inline constexpr std::uint64_t kMaxOutputStates = 10'000'000;

/// C(n + m - 1, n), saturating at UINT64_MAX.
std::uint64_t output_state_count(std::size_t n, std::size_t m) noexcept;

/// All occupation states of n particles in m modes, in colex order:
/// (n,0,..,0), (n-1,1,0,..), ..., (0,..,0,n). Throws ResourceError beyond
/// kMaxOutputStates and DomainError for m == 0.
std::vector<OccupationState> enumerate_outputs(std::size_t n, std::size_t m);

/// Probabilities over every output state, stored in colex order.
class Distribution {
public:
    Distribution(std::size_t modes, std::size_t particles, std::vector<OccupationState> states,
                 std::vector<double> probabilities);

    std::size_t modes() const noexcept { return modes_; }
    std::size_t particles() const noexcept { return particles_; }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<OccupationState>& states() const noexcept { return states_; }
    const std::vector<double>& probabilities() const noexcept { return probabilities_; }

    /// Probability of `h`; 0 for states that are not in the support.
    double probability(const OccupationState& h) const;

    double total() const noexcept;

private:
    std::size_t modes_;
    std::size_t particles_;
    std::vector<OccupationState> states_;
    std::vector<double> probabilities_;
};

Distribution output_distribution(const UnitaryMatrix& u, const InputSpec& input, StatisticsModel model);

/// w * a + (1 - w) * b over the same state list. Throws DomainError for w
/// outside [0, 1] and DimensionError when the state lists differ.
Distribution mix(const Distribution& a, const Distribution& b, double w);

}  // namespace bunching

#endif
