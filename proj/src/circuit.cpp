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

#include "bunching/circuit.hpp"

#include <numbers>
#include <random>
#include <sstream>

namespace bunching {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

std::string describe(std::size_t index, const CircuitElement& element) {
    std::ostringstream out;
    out << "element #" << index + 1 << " ";
    std::visit(Overloaded{
                   [&](const Coupler& c) {
                       out << "coupler(a=" << c.mode_a + 1 << ", b=" << c.mode_b + 1 << ", t=" << c.transmissivity
                           << ")";
                   },
                   [&](const PhaseShifter& p) { out << "phase(mode=" << p.mode + 1 << ", phi=" << p.phase << ")"; },
               },
               element);
    return out.str();
}

std::optional<std::string> element_problem(std::size_t modes, const CircuitElement& element) {
    return std::visit(
        Overloaded{
            [&](const Coupler& c) -> std::optional<std::string> {
                if (c.mode_b >= modes) return "mode out of range for " + std::to_string(modes) + " modes";
                if (c.mode_b != c.mode_a + 1) return "coupler must act on adjacent modes a, a+1";
                if (!(c.transmissivity >= 0.0 && c.transmissivity <= 1.0)) return "transmissivity outside [0, 1]";
                return std::nullopt;
            },
            [&](const PhaseShifter& p) -> std::optional<std::string> {
                if (p.mode >= modes) return "mode out of range for " + std::to_string(modes) + " modes";
                if (!std::isfinite(p.phase)) return "phase must be finite";
                return std::nullopt;
            },
        },
        element);
}

void check_layout(std::size_t modes, std::size_t layers) {
    if (modes < 2) throw DomainError("layered presets need at least 2 modes");
    if (layers < 1) throw DomainError("layered presets need at least 1 layer");
}

}  // namespace

void validate(const CircuitSpec& spec) {
    if (spec.modes == 0) throw ValidationError("circuit must have at least one mode");
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
        if (auto problem = element_problem(spec.modes, spec.elements[i])) {
            throw ValidationError("invalid " + describe(i, spec.elements[i]) + ": " + *problem);
        }
    }
}

UnitaryMatrix element_unitary(std::size_t modes, const CircuitElement& element) {
    if (auto problem = element_problem(modes, element)) throw ValidationError(*problem);
    ComplexMatrix mat = ComplexMatrix::identity(modes);
    std::visit(Overloaded{
                   [&](const Coupler& c) {
                       const double bar = std::sqrt(c.transmissivity);
                       const Complex cross(0.0, std::sqrt(1.0 - c.transmissivity));
                       mat(c.mode_a, c.mode_a) = bar;
                       mat(c.mode_a, c.mode_b) = cross;
                       mat(c.mode_b, c.mode_a) = cross;
                       mat(c.mode_b, c.mode_b) = bar;
                   },
                   [&](const PhaseShifter& p) { mat(p.mode, p.mode) = std::polar(1.0, p.phase); },
               },
               element);
    return UnitaryMatrix(std::move(mat));
}

UnitaryMatrix build_unitary(const CircuitSpec& spec) {
    validate(spec);
    ComplexMatrix acc = ComplexMatrix::identity(spec.modes);
    // Each element acts on at most two rows, so left-multiplying in place is
    // O(m) per element and avoids rounding from full dense products.
    for (const CircuitElement& element : spec.elements) {
        std::visit(Overloaded{
                       [&](const Coupler& c) {
                           const double bar = std::sqrt(c.transmissivity);
                           const Complex cross(0.0, std::sqrt(1.0 - c.transmissivity));
                           for (std::size_t col = 0; col < spec.modes; ++col) {
                               const Complex top = acc(c.mode_a, col);
                               const Complex bottom = acc(c.mode_b, col);
                               acc(c.mode_a, col) = bar * top + cross * bottom;
                               acc(c.mode_b, col) = cross * top + bar * bottom;
                           }
                       },
                       [&](const PhaseShifter& p) {
                           const Complex phase = std::polar(1.0, p.phase);
                           for (std::size_t col = 0; col < spec.modes; ++col) acc(p.mode, col) *= phase;
                       },
                   },
                   element);
    }
    return UnitaryMatrix(std::move(acc));
}

CircuitSpec concatenate(const CircuitSpec& first, const CircuitSpec& second) {
    if (first.modes != second.modes) throw DimensionError("cannot concatenate circuits on different mode counts");
    CircuitSpec out = first;
    out.elements.insert(out.elements.end(), second.elements.begin(), second.elements.end());
    return out;
}

UnitaryMatrix balanced_coupler() { return build_unitary(CircuitSpec{2, {Coupler{0, 1, 0.5}}}); }

UnitaryMatrix qft_tritter() {
    ComplexMatrix mat(3, 3);
    const double norm = 1.0 / std::sqrt(3.0);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
            // Reduce the exponent mod 3 so every entry is one of three exact
            // phases rather than accumulating angle error.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % 3) / 3.0;
            mat(j, k) = std::polar(norm, angle);
        }
    }
    return UnitaryMatrix(std::move(mat));
}

namespace {

CircuitSpec brickwall(std::size_t modes, std::size_t layers, double transmissivity, std::optional<Seed> phase_seed) {
    check_layout(modes, layers);
    if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) throw DomainError("transmissivity outside [0, 1]");

    std::optional<Engine> engine;
    if (phase_seed) engine.emplace(make_engine(*phase_seed));
    std::uniform_real_distribution<double> uniform_phase(0.0, 2.0 * std::numbers::pi);

    CircuitSpec spec{modes, {}};
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (std::size_t a = layer % 2; a + 1 < modes; a += 2) {
            spec.elements.emplace_back(Coupler{a, a + 1, transmissivity});
        }
        for (std::size_t mode = 0; mode < modes; ++mode) {
            const double phase = engine ? uniform_phase(*engine) : 0.0;
            spec.elements.emplace_back(PhaseShifter{mode, phase});
        }
    }
    return spec;
}

}  // namespace

std::variant<CircuitSpec, UnitaryMatrix> make_preset(const PresetId& preset) {
    return std::visit(
        Overloaded{
            [](const BalancedCouplerPreset&) -> std::variant<CircuitSpec, UnitaryMatrix> {
                return CircuitSpec{2, {Coupler{0, 1, 0.5}}};
            },
            [](const QftTritterPreset&) -> std::variant<CircuitSpec, UnitaryMatrix> { return qft_tritter(); },
            [](const BrickwallPreset& p) -> std::variant<CircuitSpec, UnitaryMatrix> {
                return brickwall(p.modes, p.layers, p.transmissivity, p.phase_seed);
            },
            [](const RandomPhaseNetworkPreset& p) -> std::variant<CircuitSpec, UnitaryMatrix> {
                return brickwall(p.modes, p.layers, 0.5, p.seed);
            },
        },
        preset);
}

UnitaryMatrix preset_unitary(const PresetId& preset) {
    auto built = make_preset(preset);
    if (auto* spec = std::get_if<CircuitSpec>(&built)) return build_unitary(*spec);
    return std::get<UnitaryMatrix>(std::move(built));
}

}  // namespace bunching
