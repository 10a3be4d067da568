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

// Reference computations used only by the tests. None of them go through the
// permanent kernels: amplitudes come from expanding the product of creation
// operators over every particle -> output-mode assignment.

#ifndef BUNCHING_TESTS_ORACLES_HPP
#define BUNCHING_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "bunching/matrix.hpp"

namespace oracle {

using bunching::Complex;
using bunching::UnitaryMatrix;
using Counts = std::vector<std::uint32_t>;

inline double factorial(std::uint32_t k) {
    double out = 1.0;
    for (std::uint32_t i = 2; i <= k; ++i) out *= i;
    return out;
}

/// Calls visit(outputs) for each of the m^n assignments of particles to
/// output modes.
template <typename Visit>
void for_each_assignment(std::size_t n, std::size_t m, Visit&& visit) {
    std::vector<std::size_t> outputs(n, 0);
    while (true) {
        visit(outputs);
        std::size_t i = 0;
        while (i < n && ++outputs[i] == m) outputs[i++] = 0;
        if (i == n) return;
    }
}

inline Counts counts_of(const std::vector<std::size_t>& modes, std::size_t m) {
    Counts c(m, 0);
    for (std::size_t k : modes) ++c[k];
    return c;
}

/// Bosons: prod_p (sum_i U(i, in_p) a_i^dagger) |0> expanded; the coefficient
/// c_H of prod a^dagger gives probability |c_H|^2 prod h! / prod g!.
inline std::map<Counts, double> boson_distribution(const UnitaryMatrix& u, const std::vector<std::size_t>& inputs) {
    const std::size_t m = u.dim();
    std::map<Counts, Complex> coeff;
    for_each_assignment(inputs.size(), m, [&](const std::vector<std::size_t>& outs) {
        Complex term = 1.0;
        for (std::size_t p = 0; p < inputs.size(); ++p) term *= u(outs[p], inputs[p]);
        coeff[counts_of(outs, m)] += term;
    });
    double g_fact = 1.0;
    for (std::uint32_t g : counts_of(inputs, m)) g_fact *= factorial(g);
    std::map<Counts, double> out;
    for (const auto& [h, c] : coeff) {
        double h_fact = 1.0;
        for (std::uint32_t x : h) h_fact *= factorial(x);
        out[h] = std::norm(c) * h_fact / g_fact;
    }
    return out;
}

/// Fermions: same expansion with anticommuting operators; each term picks up
/// the parity of the permutation that sorts the output list.
inline std::map<Counts, double> fermion_distribution(const UnitaryMatrix& u, const std::vector<std::size_t>& inputs) {
    const std::size_t m = u.dim();
    std::map<Counts, Complex> coeff;
    for_each_assignment(inputs.size(), m, [&](const std::vector<std::size_t>& outs) {
        Counts h = counts_of(outs, m);
        if (std::any_of(h.begin(), h.end(), [](std::uint32_t x) { return x > 1; })) return;
        int inversions = 0;
        for (std::size_t a = 0; a < outs.size(); ++a) {
            for (std::size_t b = a + 1; b < outs.size(); ++b) inversions += outs[a] > outs[b];
        }
        Complex term = inversions % 2 == 0 ? 1.0 : -1.0;
        for (std::size_t p = 0; p < inputs.size(); ++p) term *= u(outs[p], inputs[p]);
        coeff[h] += term;
    });
    std::map<Counts, double> out;
    for (const auto& [h, c] : coeff) out[h] = std::norm(c);
    return out;
}

/// Independent routing: sum over labelled assignments of prod_p |U(out_p, in_p)|^2.
inline std::map<Counts, double> classical_distribution(const UnitaryMatrix& u, const std::vector<std::size_t>& inputs) {
    const std::size_t m = u.dim();
    std::map<Counts, double> out;
    for_each_assignment(inputs.size(), m, [&](const std::vector<std::size_t>& outs) {
        double term = 1.0;
        for (std::size_t p = 0; p < inputs.size(); ++p) term *= std::norm(u(outs[p], inputs[p]));
        out[counts_of(outs, m)] += term;
    });
    return out;
}

/// Monte Carlo frequencies of routing each particle independently.
inline std::map<Counts, std::uint64_t> classical_monte_carlo(const UnitaryMatrix& u,
                                                             const std::vector<std::size_t>& inputs,
                                                             std::uint64_t trials, std::uint64_t seed) {
    const std::size_t m = u.dim();
    std::mt19937_64 engine(seed);
    std::vector<std::discrete_distribution<std::size_t>> route;
    for (std::size_t in : inputs) {
        std::vector<double> w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = std::norm(u(i, in));
        route.emplace_back(w.begin(), w.end());
    }
    std::map<Counts, std::uint64_t> freq;
    std::vector<std::size_t> outs(inputs.size());
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t p = 0; p < inputs.size(); ++p) outs[p] = route[p](engine);
        ++freq[counts_of(outs, m)];
    }
    return freq;
}

}  // namespace oracle

#endif
