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

#include "bunching/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <Eigen/QR>

namespace bunching {
namespace {

bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double conj_value(double x) { return x; }
Complex conj_value(const Complex& z) { return std::conj(z); }

}  // namespace

template <typename T>
DenseMatrix<T>::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

template <typename T>
DenseMatrix<T>::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (const T& x : data_) {
        if (!is_finite(x)) throw DomainError("matrix entries must be finite");
    }
}

template <typename T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (const T& x : r) {
            if (!is_finite(x)) throw DomainError("matrix entries must be finite");
            data_.push_back(x);
        }
    }
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T{1};
    return out;
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj_value((*this)(r, c));
    }
    return out;
}

template class DenseMatrix<double>;
template class DenseMatrix<Complex>;

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

RealMatrix abs_squared(const ComplexMatrix& a) {
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::norm(a(i, j));
    }
    return out;
}

double unitarity_residual(const ComplexMatrix& mat) {
    if (!mat.is_square()) {
        throw DimensionError("unitarity check needs a square matrix, got " + std::to_string(mat.rows()) + "x" +
                             std::to_string(mat.cols()));
    }
    const std::size_t n = mat.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += std::conj(mat(k, i)) * mat(k, j);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

bool check_unitary(const ComplexMatrix& mat, double tol) { return unitarity_residual(mat) <= tol; }

UnitaryMatrix::UnitaryMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
    const double residual = unitarity_residual(mat_);
    if (!(residual <= tol)) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max|U^dagger U - I| = " << residual << " exceeds tolerance " << tol;
        throw ValidationError(msg.str());
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t m) { return UnitaryMatrix(ComplexMatrix::identity(m)); }

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(mat_.adjoint()); }

UnitaryMatrix haar_sample(std::size_t m, Seed seed) {
    if (m == 0) throw DomainError("haar_sample: dimension must be at least 1");

    Engine engine = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(m, m);
    // Fill row-major so the draw order matches the storage order.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double re = gauss(engine);
            const double im = gauss(engine);
            z(i, j) = Complex(re, im);
        }
    }

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();

    ComplexMatrix out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0);
        for (std::size_t i = 0; i < m; ++i) out(i, j) = q(i, j) * phase;
    }
    return UnitaryMatrix(std::move(out));
}

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("multiply: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    return UnitaryMatrix(a.matrix() * b.matrix(), kProductUnitaryTol);
}

}  // namespace bunching
