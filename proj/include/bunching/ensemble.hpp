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

#ifndef BUNCHING_ENSEMBLE_HPP
#define BUNCHING_ENSEMBLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bunching/analysis.hpp"
#include "bunching/photonic.hpp"
#include "bunching/random.hpp"

namespace bunching {

/// Haar-average probability that two or more of n bosons, injected one per
/// mode, share an output mode of an m-mode interferometer:
///   1 - prod_{a=0}^{n-1} (1 - a/m) / (1 + a/m).
/// Only defined here for 1 <= n <= m; throws DomainError otherwise.
double birthday_formula(std::size_t n, std::size_t m);

inline constexpr std::size_t kHistogramBins = 50;
inline constexpr double kBandHalfWidthSigmas = 1.5;

struct Histogram {
    std::vector<double> edges;            // kHistogramBins + 1 uniform edges on [0, 1]
    std::vector<std::uint64_t> counts;    // kHistogramBins entries
};

struct EnsembleRequest {
    InputSpec input;
    std::size_t samples = 10000;
    Seed seed;
    Statistics statistics;
    /// Worker threads; 0 picks std::thread::hardware_concurrency(). The
    /// report does not depend on this value.
    std::size_t threads = 0;
};

struct EnsembleReport {
    std::size_t particles = 0;
    std::size_t modes = 0;
    std::size_t samples = 0;
    Statistics statistics;
    double mean = 0.0;
    double stddev = 0.0;     // unbiased (N - 1) estimator
    double band_low = 0.0;   // mean - 1.5 stddev, unclamped
    double band_high = 0.0;  // mean + 1.5 stddev, unclamped
    Histogram histogram;
    std::vector<double> per_sample;  // p_b of sample k at index k
};

/// Bunching probability of a fixed input across Haar-random interferometers.
/// Sample k uses haar_sample(m, derive_seed(seed, k)); statistics are reduced
/// in index order after all samples finish, so the report is identical for
/// any thread count. Throws DomainError for fewer than 2 samples and
/// ResourceError when the output space is too large to enumerate.
EnsembleReport haar_ensemble_scan(const EnsembleRequest& request);

}  // namespace bunching

#endif
