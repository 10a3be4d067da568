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

#ifndef BUNCHING_CIRCUIT_HPP
#define BUNCHING_CIRCUIT_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "bunching/matrix.hpp"
#include "bunching/random.hpp"

namespace bunching {

// Mode indices in this header are 0-based. The JSON circuit format and the
// CLI use 1-based mode numbers; the io layer converts.

/// Directional coupler between adjacent modes a and b = a + 1. The
/// transmissivity is the bar (same-mode) probability; the 2x2 block is
///   [[ sqrt(T),      i sqrt(1-T) ],
///    [ i sqrt(1-T),  sqrt(T)     ]].
struct Coupler {
    std::size_t mode_a = 0;
    std::size_t mode_b = 1;
    double transmissivity = 0.5;

    friend bool operator==(const Coupler&, const Coupler&) = default;
};

/// Multiplies the amplitude in `mode` by exp(i * phase).
struct PhaseShifter {
    std::size_t mode = 0;
    double phase = 0.0;

    friend bool operator==(const PhaseShifter&, const PhaseShifter&) = default;
};

using CircuitElement = std::variant<Coupler, PhaseShifter>;

/// Elements listed in propagation order: the compiled unitary is
/// element_N * ... * element_1.
struct CircuitSpec {
    std::size_t modes = 0;
    std::vector<CircuitElement> elements;

    friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;
};

/// Throws ValidationError naming the first offending element.
void validate(const CircuitSpec& spec);

/// 2x2 coupler block embedded in the identity on `modes` modes.
UnitaryMatrix element_unitary(std::size_t modes, const CircuitElement& element);

UnitaryMatrix build_unitary(const CircuitSpec& spec);

/// Concatenation in propagation order: `first` then `second`.
CircuitSpec concatenate(const CircuitSpec& first, const CircuitSpec& second);

// Presets -------------------------------------------------------------------

struct BalancedCouplerPreset {};

/// Ideal three-mode tritter: U_jk = w^(j k) / sqrt(3), w = exp(2 pi i / 3).
struct QftTritterPreset {};

/// Layered nearest-neighbour network. Layer 1, 3, ... couples (0,1),(2,3),...
/// and layer 2, 4, ... couples (1,2),(3,4),...; a mode with no partner at the
/// boundary is left uncoupled. Each layer is followed by one phase shifter per
/// mode: zero phases when `phase_seed` is empty, otherwise uniform on
/// [0, 2 pi) drawn from `phase_seed`.
struct BrickwallPreset {
    std::size_t modes = 0;
    std::size_t layers = 0;
    double transmissivity = 0.5;
    std::optional<Seed> phase_seed;
};

/// Brickwall with balanced couplers and seeded random phases.
struct RandomPhaseNetworkPreset {
    std::size_t modes = 0;
    std::size_t layers = 0;
    Seed seed;
};

using PresetId = std::variant<BalancedCouplerPreset, QftTritterPreset, BrickwallPreset, RandomPhaseNetworkPreset>;

/// Circuit-backed presets yield a CircuitSpec; the tritter is defined
/// directly as a matrix. Throws DomainError for invalid modes/layers/T.
std::variant<CircuitSpec, UnitaryMatrix> make_preset(const PresetId& preset);

/// make_preset followed by build_unitary where needed.
UnitaryMatrix preset_unitary(const PresetId& preset);

UnitaryMatrix balanced_coupler();
UnitaryMatrix qft_tritter();

}  // namespace bunching

#endif
