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
#ifndef INFODIFF_MATRIX_HPP
#define INFODIFF_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace infodiff
{

/**
 * Dense row-major matrix. The model matrices are m x m with m the number of
 * groups, so nothing here is tuned for size.
 */
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> entries);

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }
    bool is_square() const
    {
        return rows_ == cols_;
    }

    double& operator()(std::size_t r, std::size_t c)
    {
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const
    {
        return data_[r * cols_ + c];
    }

    std::span<const double> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const double> data() const
    {
        return data_;
    }

    std::vector<double> apply(std::span<const double> x) const;
    Matrix scaled(double factor) const;

    bool all_finite() const;
    bool all_nonnegative() const;
    double max_abs_diff(const Matrix& other) const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace infodiff

#endif // INFODIFF_MATRIX_HPP
