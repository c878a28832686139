// Copyright 2026 The kummerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kummerlab {

enum class ErrorKind {
    NotPrime,
    NoRootOfUnity,
    UnsupportedParameters,
    DivisionByZero,
    AlgebraMismatch,
    NotInvertible,
    BudgetExceeded,
    NotKummerBase,
    WrongWeight,
    WrongDegree,
    Exhausted,
    NotWeightOne,
    HypothesisFailed,
    CertificationFailed,
    NotCovered,
    UnknownSuite,
    ParseError,
    UnknownSymbol,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the expression parser; `position` is a byte offset into the source.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, const std::string& what)
        : Error(kind, what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace kummerlab
