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
#ifndef INFODIFF_ERRORS_HPP
#define INFODIFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infodiff
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of the operation (bad dimensions, negative rates, d_i = 0 for the DFE, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Floating point trouble during a computation (NaN/Inf, non-convergent iteration).
class NumericError : public Error
{
public:
    explicit NumericError(const std::string& what, double time = 0.0)
        : Error(what)
        , time_(time)
    {
    }

    /// Simulation time at which the problem was detected, 0 if not time dependent.
    double time() const
    {
        return time_;
    }

private:
    double time_;
};

/// The DTMC step is too large: the summed event probability exceeds one.
class StepSizeError : public Error
{
public:
    StepSizeError(const std::string& what, double total_probability)
        : Error(what)
        , total_probability_(total_probability)
    {
    }

    double total_probability() const
    {
        return total_probability_;
    }

private:
    double total_probability_;
};

/// The requested combination of mode and model is not supported.
class UnsupportedModeError : public Error
{
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error
{
public:
    using Error::Error;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public Error
{
public:
    ConfigError(const std::string& what, std::string key = {}, std::size_t line = 0)
        : Error(what)
        , key_(std::move(key))
        , line_(line)
    {
    }

    /// Offending key, empty if the error is not tied to one.
    const std::string& key() const
    {
        return key_;
    }
    /// 1-based line number, 0 if not tied to a line.
    std::size_t line() const
    {
        return line_;
    }

private:
    std::string key_;
    std::size_t line_;
};

} // namespace infodiff

#endif // INFODIFF_ERRORS_HPP
