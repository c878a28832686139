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

#include "kummerlab/error.hpp"

namespace kummerlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NoRootOfUnity: return "NoRootOfUnity";
        case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotKummerBase: return "NotKummerBase";
        case ErrorKind::WrongWeight: return "WrongWeight";
        case ErrorKind::WrongDegree: return "WrongDegree";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::NotWeightOne: return "NotWeightOne";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::CertificationFailed: return "CertificationFailed";
        case ErrorKind::NotCovered: return "NotCovered";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    }
    return "Unknown";
}

}  // namespace kummerlab
