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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kummerlab/symalg.hpp"

namespace kummerlab {

// Element expressions:
//   expr := ['-'] term (('+' | '-') term)*
//   term := int ['*' atom ('*' atom)*] | atom ('*' atom)*
//   atom := ('x' | 'y' | 'r') ['^' ['-'] int]
// 'r' is rho. Atoms multiply in the order written. Coefficients reduce mod q and
// rho exponents mod p; x and y exponents are genuine powers, so x^p parses to alpha
// and negative powers go through the inverse.

struct Atom {
    char symbol;
    std::int64_t exponent;
    std::size_t position;
};

struct Term {
    bool negative = false;
    /// Written coefficient before reduction; 1 when omitted.
    std::int64_t coefficient = 1;
    std::vector<Atom> atoms;
};

struct ElemExpr {
    std::vector<Term> terms;
};

/// Syntax only. Throws ParseError (kinds ParseError, UnknownSymbol) carrying a byte offset.
ElemExpr parse_expr(std::string_view src);

Elem evaluate(const ElemExpr& expr, const AlgebraPtr& algebra);

Elem parse_elem(std::string_view src, const AlgebraPtr& algebra);

/// Canonical sum of c*x^a*y^b with 0 <= a, b < p and 0 < c < q, in basis order; "0" for zero.
std::string print_elem(const Elem& e);

}  // namespace kummerlab
