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

#include "kummerlab/expr.hpp"

#include <cctype>
#include <limits>

#include "kummerlab/error.hpp"

namespace kummerlab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ElemExpr run() {
        ElemExpr out;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        out.terms.push_back(term(negative));
        for (;;) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail_at(pos_, "expected '+', '-' or end of input");
            ++pos_;
            out.terms.push_back(term(c == '-'));
        }
        return out;
    }

private:
    Term term(bool negative) {
        Term t;
        t.negative = negative;
        skip_space();
        if (at_end()) fail_at(pos_, "expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = integer();
            skip_space();
            if (peek() != '*') return t;
            ++pos_;
        }
        t.atoms.push_back(atom());
        for (;;) {
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            t.atoms.push_back(atom());
        }
        return t;
    }

    Atom atom() {
        skip_space();
        if (at_end()) fail_at(pos_, "expected 'x', 'y' or 'r'");
        const std::size_t start = pos_;
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
            const std::string_view word = src_.substr(pos_, end - pos_);
            if (word != "x" && word != "y" && word != "r") {
                throw ParseError(ErrorKind::UnknownSymbol, start,
                                 "unknown symbol '" + std::string(word) + "' at position " + std::to_string(start));
            }
            pos_ = end;
        } else {
            fail_at(pos_, "expected 'x', 'y' or 'r'");
        }
        Atom a{c, 1, start};
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
                skip_space();
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(pos_, "expected an exponent");
            a.exponent = neg ? -integer() : integer();
        }
        return a;
    }

    std::int64_t integer() {
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const int d = peek() - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail_at(start, "integer too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(ErrorKind::ParseError, pos, msg + " at position " + std::to_string(pos));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ElemExpr parse_expr(std::string_view src) { return Parser(src).run(); }

Elem evaluate(const ElemExpr& expr, const AlgebraPtr& algebra) {
    const Field& f = algebra->field();
    const auto [x, y] = generators(algebra);
    Elem sum = Elem::zero(algebra);
    for (const Term& t : expr.terms) {
        Elem prod = Elem::scalar(algebra, f.from_int(t.coefficient));
        for (const Atom& a : t.atoms) {
            switch (a.symbol) {
                case 'x': prod = prod * x.pow(a.exponent); break;
                case 'y': prod = prod * y.pow(a.exponent); break;
                default: prod *= algebra->rho_pow(a.exponent); break;
            }
        }
        if (t.negative) {
            sum -= prod;
        } else {
            sum += prod;
        }
    }
    return sum;
}

Elem parse_elem(std::string_view src, const AlgebraPtr& algebra) { return evaluate(parse_expr(src), algebra); }

std::string print_elem(const Elem& e) {
    std::string out;
    const std::uint32_t p = e.degree();
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
            const Scalar c = e.coeff(a, b);
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string term;
            auto factor = [&term](const std::string& s) {
                if (!term.empty()) term += '*';
                term += s;
            };
            if (c.value != 1 || (a == 0 && b == 0)) factor(std::to_string(c.value));
            if (a == 1) factor("x");
            if (a > 1) factor("x^" + std::to_string(a));
            if (b == 1) factor("y");
            if (b > 1) factor("y^" + std::to_string(b));
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace kummerlab
