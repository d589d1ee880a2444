/*
* Copyright (C) 2026 The infodiff authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "infodiff/matrix.hpp"
#include "infodiff/errors.hpp"

#include <algorithm>
#include <cmath>

namespace infodiff
{

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, fill)
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

std::vector<double> Matrix::apply(std::span<const double> x) const
{
    if (x.size() != cols_) {
        throw DomainError("matrix-vector product: dimension mismatch");
    }
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * x[c];
        }
        y[r] = acc;
    }
    return y;
}

Matrix Matrix::scaled(double factor) const
{
    Matrix out = *this;
    for (auto& v : out.data_) {
        v *= factor;
    }
    return out;
}

bool Matrix::all_finite() const
{
    return std::all_of(data_.begin(), data_.end(), [](double v) {
        return std::isfinite(v);
    });
}

bool Matrix::all_nonnegative() const
{
    return std::all_of(data_.begin(), data_.end(), [](double v) {
        return v >= 0.0;
    });
}

double Matrix::max_abs_diff(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("matrix difference: dimension mismatch");
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        diff = std::max(diff, std::abs(data_[i] - other.data_[i]));
    }
    return diff;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs)
{
    if (lhs.cols_ != rhs.rows_) {
        throw DomainError("matrix product: dimension mismatch");
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const double a = lhs(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

} // namespace infodiff
