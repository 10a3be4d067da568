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

#include "bunching/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace bunching {
namespace {

double sample_bunching(const EnsembleRequest& request, std::size_t index) {
    const UnitaryMatrix u = haar_sample(request.input.modes(), derive_seed(request.seed, index));
    return bunching_probability(distribution_for(u, request.input, request.statistics));
}

Histogram make_histogram(const std::vector<double>& values) {
    Histogram hist;
    hist.edges.resize(kHistogramBins + 1);
    for (std::size_t i = 0; i <= kHistogramBins; ++i) {
        hist.edges[i] = static_cast<double>(i) / static_cast<double>(kHistogramBins);
    }
    hist.counts.assign(kHistogramBins, 0);
    for (double v : values) {
        const double scaled = std::clamp(v, 0.0, 1.0) * static_cast<double>(kHistogramBins);
        const auto bin = std::min(static_cast<std::size_t>(scaled), kHistogramBins - 1);
        ++hist.counts[bin];
    }
    return hist;
}

}  // namespace

double birthday_formula(std::size_t n, std::size_t m) {
    if (n < 1) throw DomainError("birthday_formula: need at least one boson");
    if (n > m) {
        throw DomainError("birthday_formula: n = " + std::to_string(n) + " exceeds m = " + std::to_string(m) +
                          "; the average is only defined for at most one boson per mode");
    }
    const double modes = static_cast<double>(m);
    double no_collision = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
        const double ratio = static_cast<double>(a) / modes;
        no_collision *= (1.0 - ratio) / (1.0 + ratio);
    }
    return 1.0 - no_collision;
}

EnsembleReport haar_ensemble_scan(const EnsembleRequest& request) {
    if (request.samples < 2) throw DomainError("ensemble needs at least 2 samples");
    validate(request.statistics);
    const std::size_t n = request.input.particle_count();
    const std::size_t m = request.input.modes();
    if (output_state_count(n, m) > kMaxOutputStates) {
        throw ResourceError("ensemble output space exceeds " + std::to_string(kMaxOutputStates) + " states");
    }

    std::vector<double> values(request.samples, 0.0);
    std::size_t workers = request.threads != 0 ? request.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, request.samples);

    if (workers == 1) {
        for (std::size_t k = 0; k < request.samples; ++k) values[k] = sample_bunching(request, k);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t k = w; k < request.samples; k += workers) {
                            values[k] = sample_bunching(request, k);
                        }
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& failure : failures) {
            if (failure) std::rethrow_exception(failure);
        }
    }

    EnsembleReport report;
    report.particles = n;
    report.modes = m;
    report.samples = request.samples;
    report.statistics = request.statistics;

    double sum = 0.0;
    for (double v : values) sum += v;
    report.mean = sum / static_cast<double>(values.size());
    double squares = 0.0;
    for (double v : values) squares += (v - report.mean) * (v - report.mean);
    report.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
    report.band_low = report.mean - kBandHalfWidthSigmas * report.stddev;
    report.band_high = report.mean + kBandHalfWidthSigmas * report.stddev;
    report.histogram = make_histogram(values);
    report.per_sample = std::move(values);
    return report;
}

}  // namespace bunching
