// SPDX-License-Identifier: Apache-2.0
//
// spjc-sim: beamforming simulator for secure precise jamming and communication
// Copyright (C) 2026 The spjc-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace spjc
{
    // Base class for every error raised by the library.
    class error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A configuration value violates a documented invariant. The message names the field.
    class invalid_config : public error
    {
    public:
        invalid_config(const std::string &field, const std::string &reason)
            : error("invalid config: " + field + ": " + reason), field_(field) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    // Argument outside the mathematical domain of an operation (e.g. non-positive range).
    class domain_error : public error
    {
    public:
        using error::error;
    };

    class invalid_argument : public error
    {
    public:
        using error::error;
    };

    // Target and null channels are (numerically) parallel, so the phase alignment
    // and orthogonality constraints cannot hold simultaneously.
    class infeasible_geometry : public error
    {
    public:
        using error::error;
    };

    class numeric_error : public error
    {
    public:
        using error::error;
    };

    // Config file syntax error; carries the 1-based line number.
    class parse_error : public error
    {
    public:
        parse_error(std::size_t line, const std::string &what)
            : error("line " + std::to_string(line) + ": " + what), line_(line) {}

        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };

    class io_error : public error
    {
    public:
        using error::error;
    };
}
