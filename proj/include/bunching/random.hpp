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

#ifndef BUNCHING_RANDOM_HPP
#define BUNCHING_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bunching {

/// Master seed of a reproducible computation.
struct Seed {
    std::uint64_t master = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Sub-seed for item `index` of a stream rooted at `seed`. Depends only on
/// (seed, index), so ensemble item k draws the same numbers no matter which
/// worker evaluates it or in what order.
Seed derive_seed(Seed seed, std::uint64_t index) noexcept;

/// Engine used for every random draw in the library.
using Engine = std::mt19937_64;

Engine make_engine(Seed seed);

}  // namespace bunching

#endif
