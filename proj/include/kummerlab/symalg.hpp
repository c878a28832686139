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
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kummerlab/gfp.hpp"
#include "kummerlab/label.hpp"
#include "kummerlab/rng.hpp"

namespace kummerlab {

struct AlgebraParams {
    std::uint64_t p = 5;
    std::uint64_t q = 11;
    std::int64_t alpha = 2;
    std::int64_t beta = 3;
    /// Defaults to the smallest primitive p-th root of unity.
    std::optional<std::int64_t> rho;
};

/// The symbol algebra (alpha, beta)_{p,F_q} = F_q<x, y | x^p = alpha, y^p = beta, yx = rho xy>.
///
/// Elements live in the monomial basis x^a y^b, 0 <= a, b < p, and the product
/// of two basis monomials is read off a precomputed table:
///   (x^a y^b)(x^c y^d) = rho^{bc} alpha^{[a+c >= p]} beta^{[b+d >= p]} x^{a+c mod p} y^{b+d mod p}.
class Algebra {
public:
    static constexpr std::uint32_t kMaxDegree = 31;

    struct Product {
        std::uint32_t index;
        Scalar factor;
    };

    /// Throws Error{NotPrime, NoRootOfUnity, UnsupportedParameters}.
    static std::shared_ptr<const Algebra> create(const AlgebraParams& params);

    const Field& field() const noexcept { return field_; }
    std::uint32_t degree() const noexcept { return p_; }
    std::size_t dim() const noexcept { return std::size_t{p_} * p_; }

    Scalar rho() const noexcept { return rho_pows_[1]; }
    /// rho^e for any integer e.
    Scalar rho_pow(std::int64_t e) const noexcept { return rho_pows_[reduce_exponent(e, p_)]; }
    Scalar alpha() const noexcept { return alpha_; }
    Scalar beta() const noexcept { return beta_; }
    bool alpha_is_pth_power() const noexcept { return alpha_pth_; }
    bool beta_is_pth_power() const noexcept { return beta_pth_; }

    AlgebraParams params() const;

    const Product& product(std::size_t i, std::size_t j) const noexcept { return table_[i * dim() + j]; }

    std::size_t index(std::uint32_t a, std::uint32_t b) const noexcept { return std::size_t{a} * p_ + b; }

private:
    Algebra(Field field, Scalar rho, Scalar alpha, Scalar beta);

    Field field_;
    std::uint32_t p_;
    Scalar alpha_;
    Scalar beta_;
    bool alpha_pth_;
    bool beta_pth_;
    std::vector<Scalar> rho_pows_;
    std::vector<Product> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of a symbol algebra as a p x p coefficient grid; coeff(a, b) multiplies x^a y^b.
class Elem {
public:
    explicit Elem(AlgebraPtr algebra);

    static Elem zero(const AlgebraPtr& algebra) { return Elem(algebra); }
    static Elem one(const AlgebraPtr& algebra) { return scalar(algebra, Scalar{1}); }
    static Elem scalar(const AlgebraPtr& algebra, Scalar c);
    /// c * x^a * y^b with exponents reduced mod p (no alpha/beta factors are introduced).
    static Elem monomial(const AlgebraPtr& algebra, std::int64_t a, std::int64_t b, Scalar c = Scalar{1});
    /// Rows indexed by the x exponent, columns by the y exponent; entries reduced mod q.
    static Elem from_grid(const AlgebraPtr& algebra, const std::vector<std::vector<std::int64_t>>& grid);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    std::uint32_t degree() const noexcept { return algebra_->degree(); }

    Scalar coeff(std::uint32_t a, std::uint32_t b) const { return coeffs_[algebra_->index(a, b)]; }
    void set_coeff(std::uint32_t a, std::uint32_t b, Scalar c) { coeffs_[algebra_->index(a, b)] = c; }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// True iff the element lies in F (only the x^0 y^0 coefficient may be nonzero).
    bool is_scalar() const noexcept;
    Scalar scalar_part() const noexcept { return coeffs_[0]; }

    std::vector<std::vector<std::uint32_t>> grid() const;

    Elem& operator+=(const Elem& other);
    Elem& operator-=(const Elem& other);
    Elem& operator*=(const Elem& other) { return *this = *this * other; }
    Elem& operator*=(Scalar c);

    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator*(Scalar c, Elem a) { return a *= c; }
    friend Elem operator*(Elem a, Scalar c) { return a *= c; }
    Elem operator-() const;

    friend bool operator==(const Elem& a, const Elem& b);

    /// Negative exponents go through inverse() and may throw NotInvertible.
    Elem pow(std::int64_t n) const;

private:
    AlgebraPtr algebra_;
    std::vector<Scalar> coeffs_;
};

/// (x, y) with x^p = alpha, y^p = beta and yx = rho xy.
std::pair<Elem, Elem> generators(const AlgebraPtr& algebra);

/// Two-sided inverse by Gaussian elimination on the left-regular representation.
/// Throws Error{NotInvertible}; zero divisors exist whenever the algebra is split.
Elem inverse(const Elem& u);
std::optional<Elem> try_inverse(const Elem& u);

/// Trd(u) = p * coeff(0, 0).
Scalar reduced_trace(const Elem& u);

inline bool is_scalar(const Elem& u) { return u.is_scalar(); }

/// u is not in F and u^p is a nonzero scalar.
bool is_kummer(const Elem& u);

/// [x, z]_d = z x - rho^d x z.
Elem add_commutator(const Elem& x, const Elem& z, std::int64_t d);

/// [x_1, ..., x_{k+1}]_{d_1, ..., d_k} = [x_1, ..., x_{k-1}, [x_k, x_{k+1}]_{d_1}]_{d_2, ..., d_k}.
/// Requires args.size() == ds.size() + 1 >= 2.
Elem multi_commutator(std::span<const Elem> args, std::span<const std::int64_t> ds);

struct StarFactor {
    Elem letter;
    std::uint32_t multiplicity;
};

/// Sum of all distinct words with each letter repeated its multiplicity times,
/// e.g. x^2 * y = x^2 y + x y x + y x^2. Total multiplicity is capped at p
/// (Error{BudgetExceeded}).
Elem star_product(std::span<const StarFactor> factors);

/// Applies w -> [x, w]_d for every d in `kill`. Component j of z (relative to x)
/// is multiplied by prod_d (rho^j - rho^d) and shifted by x^{|kill|}; components
/// indexed by members of `kill` vanish.
Elem component_filter(const Elem& x, const Elem& z, const Label& kill);

/// Uniform random element (every coefficient uniform in F_q).
Elem random_elem(const AlgebraPtr& algebra, Rng& rng);

/// Uniform random element that passes try_inverse; returns the pair (u, u^{-1}).
std::pair<Elem, Elem> random_invertible(const AlgebraPtr& algebra, Rng& rng);

}  // namespace kummerlab
