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

#include "kummerlab/symalg.hpp"

#include <algorithm>
#include <string>

#include "kummerlab/error.hpp"

namespace kummerlab {

namespace {

void require_same(const Elem& a, const Elem& b) {
    if (a.algebra() == b.algebra()) return;
    const Algebra& l = *a.algebra();
    const Algebra& r = *b.algebra();
    if (l.degree() != r.degree() || l.field().modulus() != r.field().modulus() || l.rho() != r.rho() ||
        l.alpha() != r.alpha() || l.beta() != r.beta()) {
        throw Error(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
    }
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::create(const AlgebraParams& params) {
    if (params.p > kMaxDegree) {
        throw Error(ErrorKind::UnsupportedParameters,
                    "degree must be at most " + std::to_string(kMaxDegree));
    }
    Field field(params.q, params.p);
    Scalar rho = field.primitive_root_of_unity();
    if (params.rho) {
        rho = field.from_int(*params.rho);
        if (!field.is_primitive_root_of_unity(rho)) {
            throw Error(ErrorKind::NoRootOfUnity, std::to_string(*params.rho) +
                                                      " is not a primitive root of unity of order " +
                                                      std::to_string(params.p));
        }
    }
    Scalar alpha = field.from_int(params.alpha);
    Scalar beta = field.from_int(params.beta);
    if (alpha.is_zero() || beta.is_zero()) {
        throw Error(ErrorKind::UnsupportedParameters, "alpha and beta must be nonzero");
    }
    return std::shared_ptr<const Algebra>(new Algebra(field, rho, alpha, beta));
}

Algebra::Algebra(Field field, Scalar rho, Scalar alpha, Scalar beta)
    : field_(field),
      p_(field.degree()),
      alpha_(alpha),
      beta_(beta),
      alpha_pth_(field.is_pth_power(alpha)),
      beta_pth_(field.is_pth_power(beta)) {
    rho_pows_.resize(p_);
    rho_pows_[0] = Scalar{1};
    for (std::uint32_t i = 1; i < p_; ++i) rho_pows_[i] = field_.mul(rho_pows_[i - 1], rho);

    const std::size_t n = dim();
    table_.resize(n * n);
    for (std::uint32_t a = 0; a < p_; ++a) {
        for (std::uint32_t b = 0; b < p_; ++b) {
            for (std::uint32_t c = 0; c < p_; ++c) {
                for (std::uint32_t d = 0; d < p_; ++d) {
                    Scalar f = rho_pow(std::int64_t{b} * c);
                    if (a + c >= p_) f = field_.mul(f, alpha_);
                    if (b + d >= p_) f = field_.mul(f, beta_);
                    table_[index(a, b) * n + index(c, d)] =
                        Product{static_cast<std::uint32_t>(index((a + c) % p_, (b + d) % p_)), f};
                }
            }
        }
    }
}

AlgebraParams Algebra::params() const {
    return AlgebraParams{p_, field_.modulus(), alpha_.value, beta_.value, rho().value};
}

Elem::Elem(AlgebraPtr algebra) : algebra_(std::move(algebra)), coeffs_(algebra_->dim()) {}

Elem Elem::scalar(const AlgebraPtr& algebra, Scalar c) {
    Elem e(algebra);
    e.coeffs_[0] = c;
    return e;
}

Elem Elem::monomial(const AlgebraPtr& algebra, std::int64_t a, std::int64_t b, Scalar c) {
    Elem e(algebra);
    const auto p = algebra->degree();
    e.set_coeff(reduce_exponent(a, p), reduce_exponent(b, p), c);
    return e;
}

Elem Elem::from_grid(const AlgebraPtr& algebra, const std::vector<std::vector<std::int64_t>>& grid) {
    const auto p = algebra->degree();
    if (grid.size() != p) {
        throw Error(ErrorKind::UnsupportedParameters, "coefficient grid must have p rows");
    }
    Elem e(algebra);
    for (std::uint32_t a = 0; a < p; ++a) {
        if (grid[a].size() != p) {
            throw Error(ErrorKind::UnsupportedParameters, "coefficient grid must have p columns");
        }
        for (std::uint32_t b = 0; b < p; ++b) e.set_coeff(a, b, algebra->field().from_int(grid[a][b]));
    }
    return e;
}

bool Elem::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Scalar c) { return c.is_zero(); });
}

bool Elem::is_scalar() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Scalar c) { return c.is_zero(); });
}

std::vector<std::vector<std::uint32_t>> Elem::grid() const {
    const auto p = degree();
    std::vector<std::vector<std::uint32_t>> out(p, std::vector<std::uint32_t>(p));
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) out[a][b] = coeff(a, b).value;
    }
    return out;
}

Elem& Elem::operator+=(const Elem& other) {
    require_same(*this, other);
    const Field& f = algebra_->field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = f.add(coeffs_[i], other.coeffs_[i]);
    return *this;
}

Elem& Elem::operator-=(const Elem& other) {
    require_same(*this, other);
    const Field& f = algebra_->field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = f.sub(coeffs_[i], other.coeffs_[i]);
    return *this;
}

Elem& Elem::operator*=(Scalar c) {
    const Field& f = algebra_->field();
    for (auto& v : coeffs_) v = f.mul(v, c);
    return *this;
}

Elem Elem::operator-() const {
    Elem out(*this);
    const Field& f = algebra_->field();
    for (auto& v : out.coeffs_) v = f.neg(v);
    return out;
}

Elem operator*(const Elem& a, const Elem& b) {
    require_same(a, b);
    const Algebra& alg = *a.algebra_;
    const std::uint64_t q = alg.field().modulus();
    const std::size_t n = alg.dim();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ai = a.coeffs_[i].value;
        if (ai == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t bj = b.coeffs_[j].value;
            if (bj == 0) continue;
            const auto& prod = alg.product(i, j);
            acc[prod.index] += ai * bj % q * prod.factor.value % q;
        }
    }
    Elem out(a.algebra_);
    for (std::size_t k = 0; k < n; ++k) out.coeffs_[k] = Scalar{static_cast<std::uint32_t>(acc[k] % q)};
    return out;
}

bool operator==(const Elem& a, const Elem& b) {
    require_same(a, b);
    return a.coeffs_ == b.coeffs_;
}

Elem Elem::pow(std::int64_t n) const {
    if (n < 0) return inverse(*this).pow(-n);
    Elem result = one(algebra_);
    Elem base = *this;
    while (n != 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return result;
}

std::pair<Elem, Elem> generators(const AlgebraPtr& algebra) {
    return {Elem::monomial(algebra, 1, 0), Elem::monomial(algebra, 0, 1)};
}

std::optional<Elem> try_inverse(const Elem& u) {
    const AlgebraPtr& alg = u.algebra();
    const Field& f = alg->field();
    const std::size_t n = alg->dim();

    // Column j of the augmented system holds the coordinates of u * e_j.
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar ui = u.coeffs()[i];
            if (ui.is_zero()) continue;
            const auto& prod = alg->product(i, j);
            m[prod.index][j] = f.add(m[prod.index][j], f.mul(ui, prod.factor));
        }
    }
    m[0][n] = Scalar{1};

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        const Scalar scale = f.inv(m[col][col]);
        for (auto& v : m[col]) v = f.mul(v, scale);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
        }
    }

    Elem v(alg);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::uint32_t>(i / alg->degree());
        const auto b = static_cast<std::uint32_t>(i % alg->degree());
        v.set_coeff(a, b, m[i][n]);
    }
    return v;
}

Elem inverse(const Elem& u) {
    if (auto v = try_inverse(u)) return *std::move(v);
    throw Error(ErrorKind::NotInvertible, "element is a zero divisor");
}

Scalar reduced_trace(const Elem& u) {
    const Field& f = u.algebra()->field();
    return f.mul(f.from_int(u.degree()), u.scalar_part());
}

bool is_kummer(const Elem& u) {
    if (u.is_scalar()) return false;
    const Elem power = u.pow(u.degree());
    return power.is_scalar() && !power.scalar_part().is_zero();
}

Elem add_commutator(const Elem& x, const Elem& z, std::int64_t d) {
    return z * x - x.algebra()->rho_pow(d) * (x * z);
}

Elem multi_commutator(std::span<const Elem> args, std::span<const std::int64_t> ds) {
    if (ds.empty() || args.size() != ds.size() + 1) {
        throw Error(ErrorKind::UnsupportedParameters,
                    "multi-commutator needs k >= 1 exponents and k + 1 arguments");
    }
    // Innermost bracket pairs the last two arguments with the first exponent.
    Elem acc = args.back();
    const std::size_t k = ds.size();
    for (std::size_t t = 0; t < k; ++t) acc = add_commutator(args[k - 1 - t], acc, ds[t]);
    return acc;
}

namespace {

void star_words(std::span<const StarFactor> factors, std::vector<std::uint32_t>& remaining,
                std::uint32_t left, const Elem& prefix, Elem& sum) {
    if (left == 0) {
        sum += prefix;
        return;
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (remaining[i] == 0) continue;
        --remaining[i];
        star_words(factors, remaining, left - 1, prefix * factors[i].letter, sum);
        ++remaining[i];
    }
}

}  // namespace

Elem star_product(std::span<const StarFactor> factors) {
    if (factors.empty()) {
        throw Error(ErrorKind::UnsupportedParameters, "star product needs at least one letter");
    }
    const AlgebraPtr& alg = factors.front().letter.algebra();
    std::vector<std::uint32_t> remaining;
    std::uint32_t total = 0;
    for (const auto& f : factors) {
        remaining.push_back(f.multiplicity);
        total += f.multiplicity;
    }
    if (total > alg->degree()) {
        throw Error(ErrorKind::BudgetExceeded,
                    "star product total multiplicity " + std::to_string(total) + " exceeds p");
    }
    Elem sum = Elem::zero(alg);
    star_words(factors, remaining, total, Elem::one(alg), sum);
    return sum;
}

Elem component_filter(const Elem& x, const Elem& z, const Label& kill) {
    Elem acc = z;
    for (auto d : kill.elements()) acc = add_commutator(x, acc, d);
    return acc;
}

Elem random_elem(const AlgebraPtr& algebra, Rng& rng) {
    Elem e(algebra);
    const auto q = algebra->field().modulus();
    const auto p = algebra->degree();
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) e.set_coeff(a, b, Scalar{static_cast<std::uint32_t>(rng.uniform(q))});
    }
    return e;
}

std::pair<Elem, Elem> random_invertible(const AlgebraPtr& algebra, Rng& rng) {
    for (;;) {
        Elem u = random_elem(algebra, rng);
        if (auto v = try_inverse(u)) return {std::move(u), *std::move(v)};
    }
}

}  // namespace kummerlab
