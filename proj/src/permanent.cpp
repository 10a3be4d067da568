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

#include "bunching/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/LU>

namespace bunching {
namespace {

template <typename T>
void check_square(const DenseMatrix<T>& a, const char* who) {
    if (!a.is_square()) {
        throw DimensionError(std::string(who) + ": matrix must be square, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
    if (a.rows() == 0) throw DomainError(std::string(who) + ": matrix must be at least 1x1");
}

/// Kahan-Babuska (Neumaier) summation, componentwise for complex values.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

template <typename T>
class Accumulator;

template <>
class Accumulator<double> {
public:
    explicit Accumulator(bool compensated) : compensated_(compensated) {}
    void add(double x) {
        if (compensated_) {
            comp_.add(x);
        } else {
            plain_ += x;
        }
    }
    double value() const { return compensated_ ? comp_.value() : plain_; }

private:
    bool compensated_;
    double plain_ = 0.0;
    CompensatedSum comp_;
};

template <>
class Accumulator<Complex> {
public:
    explicit Accumulator(bool compensated) : re_(compensated), im_(compensated) {}
    void add(const Complex& x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    Accumulator<double> re_;
    Accumulator<double> im_;
};

void check_fast_size(std::size_t n, const char* who) {
    if (n > kRyserMaxSize) {
        throw ResourceError(std::string(who) + ": n = " + std::to_string(n) + " exceeds the supported bound of " +
                            std::to_string(kRyserMaxSize));
    }
}

}  // namespace

template <typename T>
T permanent_naive(const DenseMatrix<T>& a) {
    check_square(a, "permanent_naive");
    const std::size_t n = a.rows();
    if (n > kNaivePermanentMaxSize) {
        throw ResourceError("permanent_naive: n = " + std::to_string(n) + " exceeds the brute-force guard of " +
                            std::to_string(kNaivePermanentMaxSize) + "; use permanent_ryser");
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    T total{};
    do {
        T term{1};
        for (std::size_t i = 0; i < n; ++i) term *= a(i, sigma[i]);
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

template <typename T>
T permanent_ryser(const DenseMatrix<T>& a) {
    check_square(a, "permanent_ryser");
    const std::size_t n = a.rows();
    check_fast_size(n, "permanent_ryser");

    // per(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij
    std::vector<T> row_sums(n, T{});
    Accumulator<T> total(n >= kCompensatedSumMinSize);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        if (gray & bit) {
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += a(i, col);
        } else {
            for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a(i, col);
        }
        T prod{1};
        for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
        const bool odd_subset = (std::popcount(gray) & 1) != 0;
        total.add(odd_subset ? -prod : prod);
    }
    const T result = total.value();
    return (n % 2 == 0) ? result : -result;
}

template <typename T>
T permanent_glynn(const DenseMatrix<T>& a) {
    check_square(a, "permanent_glynn");
    const std::size_t n = a.rows();
    check_fast_size(n, "permanent_glynn");

    // per(A) = 2^{1-n} sum_{delta, delta_0 = +1} (prod_k delta_k) prod_j sum_i delta_i a_ij
    std::vector<T> col_sums(n, T{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) col_sums[j] += a(i, j);
    }
    auto product = [&] {
        T prod{1};
        for (const T& s : col_sums) prod *= s;
        return prod;
    };

    Accumulator<T> total(n >= kCompensatedSumMinSize);
    total.add(product());
    const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < patterns; ++k) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(k));
        gray ^= std::uint64_t{1} << flip;
        const std::size_t row = flip + 1;
        const bool now_negative = (gray >> flip) & 1;
        for (std::size_t j = 0; j < n; ++j) {
            const T twice = a(row, j) + a(row, j);
            col_sums[j] += now_negative ? -twice : twice;
        }
        const bool odd = (std::popcount(gray) & 1) != 0;
        const T prod = product();
        total.add(odd ? -prod : prod);
    }
    return total.value() / static_cast<double>(patterns);
}

template <typename T>
T permanent(const DenseMatrix<T>& a, PermanentMethod method) {
    switch (method) {
        case PermanentMethod::naive:
            return permanent_naive(a);
        case PermanentMethod::glynn:
            return permanent_glynn(a);
        case PermanentMethod::ryser:
            break;
    }
    return permanent_ryser(a);
}

template double permanent_naive(const RealMatrix&);
template Complex permanent_naive(const ComplexMatrix&);
template double permanent_ryser(const RealMatrix&);
template Complex permanent_ryser(const ComplexMatrix&);
template double permanent_glynn(const RealMatrix&);
template Complex permanent_glynn(const ComplexMatrix&);
template double permanent(const RealMatrix&, PermanentMethod);
template Complex permanent(const ComplexMatrix&, PermanentMethod);

Complex determinant(const ComplexMatrix& a) {
    check_square(a, "determinant");
    const std::size_t n = a.rows();
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    }
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

}  // namespace bunching
