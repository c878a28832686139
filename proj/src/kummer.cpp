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

#include "kummerlab/kummer.hpp"

#include <string>
#include <utility>

#include "kummerlab/error.hpp"

namespace kummerlab {

namespace {

Scalar random_nonzero(const Field& f, Rng& rng) {
    return Scalar{static_cast<std::uint32_t>(1 + rng.uniform(f.modulus() - 1))};
}

Scalar random_scalar(const Field& f, Rng& rng) {
    return Scalar{static_cast<std::uint32_t>(rng.uniform(f.modulus()))};
}

struct ExponentPair {
    std::uint32_t a;
    std::uint32_t b;
};

ExponentPair random_nonzero_pair(std::uint32_t p, Rng& rng) {
    for (;;) {
        ExponentPair e{static_cast<std::uint32_t>(rng.uniform(p)), static_cast<std::uint32_t>(rng.uniform(p))};
        if (e.a != 0 || e.b != 0) return e;
    }
}

bool independent(ExponentPair u, ExponentPair v, std::uint32_t p) {
    return reduce_exponent(std::int64_t{u.a} * v.b - std::int64_t{u.b} * v.a, p) != 0;
}

Elem frame_monomial(const Elem& X, const Elem& Y, ExponentPair e, Scalar c) {
    return c * (X.pow(e.a) * Y.pow(e.b));
}

Elem family_in_frame(const Elem& X, const Elem& Y, Scalar a0, const std::array<Scalar, 4>& a) {
    Elem f = Elem::scalar(X.algebra(), a0);
    Elem xk = X;
    for (std::size_t k = 0; k < a.size(); ++k) {
        f += a[k] * xk;
        xk *= X;
    }
    return Y + f * kummer_inverse(Y);
}

// `twist` is the exponent s with YX = rho^s XY in the frame the family is built in.
std::array<Scalar, 4> random_family_coefficients(const AlgebraPtr& algebra, Rng& rng, std::int64_t twist) {
    const Field& f = algebra->field();
    const Scalar c = f.mul(f.add(Scalar{1}, algebra->rho_pow(twist)), f.add(Scalar{1}, algebra->rho_pow(-twist)));
    std::array<Scalar, 4> a{};
    if (rng.coin()) {
        a[0] = random_nonzero(f, rng);
        a[1] = random_scalar(f, rng);
    } else {
        a[0] = random_nonzero(f, rng);
        a[1] = random_nonzero(f, rng);
        a[3] = random_nonzero(f, rng);
        a[2] = f.div(f.mul(c, f.mul(a[0], a[3])), a[1]);
    }
    return a;
}

bool matches(const PairProfile& profile, const EdgeInfo& e) {
    if (profile.weight_fwd && e.weight_fwd() != *profile.weight_fwd) return false;
    if (profile.weight_bwd && e.weight_bwd() != *profile.weight_bwd) return false;
    if (profile.zero_in_fwd && e.label_fwd.contains(0) != *profile.zero_in_fwd) return false;
    if (profile.zero_in_bwd && e.label_bwd.contains(0) != *profile.zero_in_bwd) return false;
    return true;
}

}  // namespace

Elem kummer_inverse(const Elem& u) {
    const Elem top = u.pow(u.degree() - 1);
    const Elem power = top * u;
    if (u.is_scalar() || !power.is_scalar() || power.scalar_part().is_zero()) {
        throw Error(ErrorKind::NotKummerBase, "element is not Kummer");
    }
    return u.algebra()->field().inv(power.scalar_part()) * top;
}

bool generates_field(const Elem& u) {
    if (!is_kummer(u)) return false;
    return !u.algebra()->field().is_pth_power(u.pow(u.degree()).scalar_part());
}

Decomposition decompose(const Elem& x, const Elem& z) {
    const Elem x_inv = kummer_inverse(x);
    const AlgebraPtr& alg = x.algebra();
    const Field& f = alg->field();
    const std::uint32_t p = alg->degree();

    std::vector<Elem> conj;
    conj.reserve(p);
    conj.push_back(z);
    for (std::uint32_t k = 1; k < p; ++k) conj.push_back(x_inv * conj.back() * x);

    Decomposition d{x, {}, Label(p)};
    d.parts.reserve(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        Elem acc = Elem::zero(alg);
        for (std::uint32_t k = 0; k < p; ++k) acc += alg->rho_pow(-std::int64_t{i} * k) * conj[k];
        acc *= f.degree_inverse();
        if (!acc.is_zero()) d.label.insert(i);
        d.parts.push_back(std::move(acc));
    }
    return d;
}

EdgeInfo edge(const Elem& x, const Elem& z) {
    if (!is_kummer(z)) throw Error(ErrorKind::NotKummerBase, "edge target is not Kummer");
    return EdgeInfo{decompose(x, z).label, decompose(z, x).label};
}

std::optional<std::uint32_t> weight_one_witness(const Elem& x, const Elem& z) {
    const Label l = decompose(x, z).label;
    if (l.size() != 1) return std::nullopt;
    return l.front();
}

std::optional<Label> inner_label(const Elem& x, const Elem& z) {
    const Decomposition d = decompose(x, z);
    if (d.weight() != 2) return std::nullopt;
    const auto idx = d.label.elements();
    const Elem& zi = d.part(idx[0]);
    if (!is_kummer(zi)) return std::nullopt;
    return decompose(zi, d.part(idx[1])).label;
}

Elem exponentiation_form(const Elem& x, const Elem& z, Scalar u, Scalar v) {
    const Decomposition d = decompose(x, z);
    if (d.weight() != 2) {
        throw Error(ErrorKind::WrongWeight, "exponentiation form needs w(x, z) = 2, got " +
                                                std::to_string(d.weight()));
    }
    const auto idx = d.label.elements();
    return (u * d.part(idx[0]) + v * d.part(idx[1])).pow(x.degree());
}

Elem family_deg5(const AlgebraPtr& algebra, const std::array<Scalar, 4>& a) {
    return family_deg5(algebra, Scalar{0}, a);
}

Elem family_deg5(const AlgebraPtr& algebra, Scalar a0, const std::array<Scalar, 4>& a) {
    if (algebra->degree() != 5) {
        throw Error(ErrorKind::WrongDegree, "the degree-5 family needs p = 5");
    }
    const auto [x, y] = generators(algebra);
    return family_in_frame(x, y, a0, a);
}

Scalar family_constant_quoted(const AlgebraPtr& algebra) {
    return algebra->field().sub(algebra->rho_pow(4), algebra->rho());
}

Scalar family_constant_exact(const AlgebraPtr& algebra) {
    const Field& f = algebra->field();
    return f.mul(f.add(Scalar{1}, algebra->rho()), f.add(Scalar{1}, algebra->rho_pow(-1)));
}

Elem sample_kummer(const AlgebraPtr& algebra, Rng& rng) {
    const Field& f = algebra->field();
    const std::uint32_t p = algebra->degree();
    const auto [x, y] = generators(algebra);
    for (;;) {
        const auto kind = rng.uniform(p == 5 ? 3 : 2);
        Elem z = Elem::zero(algebra);
        if (kind == 0) {
            const auto e = random_nonzero_pair(p, rng);
            z = Elem::monomial(algebra, e.a, e.b, random_nonzero(f, rng));
        } else if (kind == 1) {
            const auto e1 = random_nonzero_pair(p, rng);
            const auto e2 = random_nonzero_pair(p, rng);
            if (!independent(e1, e2, p)) continue;
            z = Elem::monomial(algebra, e1.a, e1.b, random_nonzero(f, rng)) +
                Elem::monomial(algebra, e2.a, e2.b, random_nonzero(f, rng));
        } else {
            z = family_in_frame(x, y, Scalar{0}, random_family_coefficients(algebra, rng, 1));
        }
        if (!is_kummer(z)) continue;
        if (kind == 0 || rng.coin()) {
            const auto [g, g_inv] = random_invertible(algebra, rng);
            z = g * z * g_inv;
        }
        return z;
    }
}

SampledPair sample_pair(const AlgebraPtr& algebra, Rng& rng, const PairProfile& profile,
                        std::uint64_t max_attempts) {
    const Field& f = algebra->field();
    const std::uint32_t p = algebra->degree();
    std::uint64_t discarded = 0;
    const ExponentPair std_u{1, 0};
    const ExponentPair std_v{0, 1};

    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        ExponentPair u = std_u;
        ExponentPair v = std_v;
        if (rng.uniform(4) != 0) {
            u = random_nonzero_pair(p, rng);
            v = random_nonzero_pair(p, rng);
            if (!independent(u, v, p)) continue;
        }
        const Elem X = Elem::monomial(algebra, u.a, u.b, random_nonzero(f, rng));
        const Elem Y = Elem::monomial(algebra, v.a, v.b, random_nonzero(f, rng));

        std::string source;
        Elem z = Elem::zero(algebra);
        const bool want_family = p == 5 && rng.uniform(100) < profile.family_percent;
        if (want_family) {
            source = "family";
            const std::int64_t twist = std::int64_t{u.a} * v.b - std::int64_t{u.b} * v.a;
            z = family_in_frame(X, Y, Scalar{0}, random_family_coefficients(algebra, rng, twist));
        } else if (rng.uniform(5) == 0) {
            source = "monomial";
            z = frame_monomial(X, Y, random_nonzero_pair(p, rng), random_nonzero(f, rng));
        } else {
            source = "monomial-sum";
            const auto e1 = random_nonzero_pair(p, rng);
            const auto e2 = random_nonzero_pair(p, rng);
            if (!independent(e1, e2, p)) continue;
            z = frame_monomial(X, Y, e1, random_nonzero(f, rng)) + frame_monomial(X, Y, e2, random_nonzero(f, rng));
        }

        Elem x = X;
        if (!is_kummer(z)) {
            ++discarded;
            continue;
        }
        if (rng.uniform(4) == 0) {
            std::swap(x, z);
            source += "+swap";
        }
        if (profile.base_generates_field && !generates_field(x)) {
            ++discarded;
            continue;
        }
        EdgeInfo e = edge(x, z);
        if (!matches(profile, e)) {
            ++discarded;
            continue;
        }
        if (profile.inner_weight) {
            const auto inner = inner_label(x, z);
            if (!inner || inner->size() != *profile.inner_weight) {
                ++discarded;
                continue;
            }
        }
        // Simultaneous conjugation preserves every label, so it is applied after filtering.
        if (rng.coin()) {
            const auto [g, g_inv] = random_invertible(algebra, rng);
            x = g * x * g_inv;
            z = g * z * g_inv;
            source += "+conj";
        }
        return SampledPair{std::move(x), std::move(z), std::move(e), std::move(source), discarded};
    }
    throw Error(ErrorKind::Exhausted, "no pair matched the requested profile within " +
                                          std::to_string(max_attempts) + " attempts");
}

}  // namespace kummerlab
