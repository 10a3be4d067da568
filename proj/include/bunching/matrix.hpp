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

#ifndef BUNCHING_MATRIX_HPP
#define BUNCHING_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bunching/errors.hpp"
#include "bunching/random.hpp"

namespace bunching {

using Complex = std::complex<double>;

/// Dense row-major matrix. Entries are always finite; constructors reject
/// NaN/Inf so downstream kernels never see them.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> entries() const noexcept { return data_; }

    /// Conjugate transpose (plain transpose for real matrices).
    DenseMatrix adjoint() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = DenseMatrix<Complex>;
using RealMatrix = DenseMatrix<double>;

/// Matrix product; throws DimensionError on inner-dimension mismatch.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Elementwise |a_ij|^2.
RealMatrix abs_squared(const ComplexMatrix& a);

/// max_ij |(A^dagger A - I)_ij|. Throws DimensionError if `mat` is not square.
double unitarity_residual(const ComplexMatrix& mat);

/// True iff unitarity_residual(mat) <= tol.
bool check_unitary(const ComplexMatrix& mat, double tol);

inline constexpr double kConstructedUnitaryTol = 1e-10;
inline constexpr double kLoadedUnitaryTol = 1e-8;
inline constexpr double kProductUnitaryTol = 1e-9;

/// Square complex matrix whose unitarity was verified on construction.
/// Entry (i, j) is the amplitude for a particle entering mode j to leave in
/// mode i (0-based in the C++ API).
class UnitaryMatrix {
public:
    /// Validates `mat` at `tol`; throws DimensionError for non-square input
    /// and ValidationError (carrying the residual) when the check fails.
    explicit UnitaryMatrix(ComplexMatrix mat, double tol = kConstructedUnitaryTol);

    static UnitaryMatrix identity(std::size_t m);

    std::size_t dim() const noexcept { return mat_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return mat_; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return mat_(i, j); }

    UnitaryMatrix adjoint() const;

    friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

private:
    ComplexMatrix mat_;
};

/// Draws an m x m unitary from the Haar measure.
///
/// An m x m matrix of i.i.d. standard complex Gaussians is QR-factorized and
/// Q is right-multiplied by diag(r_jj / |r_jj|). The phase correction is not
/// optional: Householder QR fixes the phases of R's diagonal by convention,
/// and Q alone is then biased away from Haar. Deterministic in `seed`.
///
/// Throws DomainError for m == 0.
UnitaryMatrix haar_sample(std::size_t m, Seed seed);

/// a * b, re-validated at kProductUnitaryTol.
UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b);

}  // namespace bunching

#endif
