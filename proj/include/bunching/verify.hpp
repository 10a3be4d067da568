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

#ifndef BUNCHING_VERIFY_HPP
#define BUNCHING_VERIFY_HPP

#include <string>
#include <vector>

#include "bunching/matrix.hpp"
#include "bunching/photonic.hpp"
#include "bunching/random.hpp"

namespace bunching {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Uniform random input of n particles on m modes. When `force_repeat` is
/// set (and n >= 2) the first two particles share a mode.
InputSpec random_input(Engine& engine, std::size_t n, std::size_t m, bool force_repeat);

/// Matrix of i.i.d. standard complex Gaussians.
ComplexMatrix random_complex_matrix(Engine& engine, std::size_t rows, std::size_t cols);

/// Full-bunching ratio law over `instances` Haar unitaries with m in [2, 8]
/// and n in [2, 4]; half the inputs repeat an input mode.
CheckResult check_full_bunching_law(Seed seed, std::size_t instances = 200);

/// Ryser and Glynn against the brute-force permanent on random complex
/// matrices of size 1..9, plus the 3x3 Fourier value -3.
CheckResult check_permanent_oracles(Seed seed, std::size_t instances = 500);

/// Every model sums to one; mixed reduces to boson and classical.
CheckResult check_normalization(Seed seed, std::size_t instances = 200);

/// Fermion outputs never bunch and the collision-free part is normalized.
CheckResult check_fermion_exclusion(Seed seed, std::size_t instances = 50);

/// All of the above.
std::vector<CheckResult> run_verification(Seed seed);

}  // namespace bunching

#endif
