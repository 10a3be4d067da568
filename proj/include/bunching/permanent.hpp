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

#ifndef BUNCHING_PERMANENT_HPP
#define BUNCHING_PERMANENT_HPP

#include <cstddef>

#include "bunching/matrix.hpp"

namespace bunching {

/// Size guard of the brute-force permanent (10! = 3.6M products).
inline constexpr std::size_t kNaivePermanentMaxSize = 10;

/// Practical bound for the O(2^n n) kernels.
inline constexpr std::size_t kRyserMaxSize = 30;

/// Ryser/Glynn switch to compensated summation at this size.
inline constexpr std::size_t kCompensatedSumMinSize = 16;

enum class PermanentMethod { naive, ryser, glynn };

/// Sum over all n! permutations of prod_i a(i, sigma(i)). Test oracle only;
/// throws ResourceError above kNaivePermanentMaxSize.
template <typename T>
T permanent_naive(const DenseMatrix<T>& a);

/// Ryser inclusion-exclusion, visiting column subsets in Gray-code order so
/// each step updates the row sums with a single column.
template <typename T>
T permanent_ryser(const DenseMatrix<T>& a);

/// Glynn's formula with Gray-code sign flips. Independent cross-check of
/// permanent_ryser; same cost.
template <typename T>
T permanent_glynn(const DenseMatrix<T>& a);

template <typename T>
T permanent(const DenseMatrix<T>& a, PermanentMethod method = PermanentMethod::ryser);

/// LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

}  // namespace bunching

#endif
