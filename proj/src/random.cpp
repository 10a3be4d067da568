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

#include "bunching/random.hpp"

namespace bunching {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Seed derive_seed(Seed seed, std::uint64_t index) noexcept {
    return Seed{mix64(mix64(seed.master) ^ mix64(~index))};
}

Engine make_engine(Seed seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed.master),
                      static_cast<std::uint32_t>(seed.master >> 32)};
    return Engine(seq);
}

}  // namespace bunching
