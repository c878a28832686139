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

#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "kummerlab/error.hpp"

namespace kummerlab {
namespace {

AlgebraPtr algebra(std::uint64_t p = 5, std::uint64_t q = 11, std::int64_t alpha = 2, std::int64_t beta = 3) {
    return Algebra::create(AlgebraParams{p, q, alpha, beta, std::nullopt});
}

std::vector<AlgebraPtr> configurations() {
    return {algebra(5, 11), algebra(5, 31), algebra(5, 41), algebra(3, 7), algebra(3, 13), algebra(2, 5), algebra(7, 29)};
}

TEST(Algebra, Parameters) {
    const auto a = algebra();
    EXPECT_EQ(a->rho(), Scalar{3});
    EXPECT_FALSE(a->alpha_is_pth_power());
    EXPECT_FALSE(a->beta_is_pth_power());
    EXPECT_EQ(a->params().rho, 3);
    EXPECT_EQ(Algebra::create(AlgebraParams{5, 11, 2, 3, 9})->rho(), Scalar{9});
    EXPECT_THROW(Algebra::create(AlgebraParams{5, 11, 2, 3, 2}), Error);
    EXPECT_THROW(Algebra::create(AlgebraParams{5, 11, 0, 3, std::nullopt}), Error);
    EXPECT_THROW(Algebra::create(AlgebraParams{37, 149, 2, 3, std::nullopt}), Error);
}

TEST(Algebra, DefiningRelations) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    EXPECT_EQ(y * x, a->rho() * (x * y));
    EXPECT_EQ(x.pow(5), Elem::scalar(a, Scalar{2}));
    EXPECT_EQ(y.pow(5), Elem::scalar(a, Scalar{3}));
}

TEST(Algebra, MonomialRuleByHand) {
    // p = 3: (x^2 y^2)(x^2 y^2) = rho^4 alpha beta x y = rho alpha beta x y.
    const auto a = algebra(3, 7);
    const auto [x, y] = generators(a);
    const Elem m = x.pow(2) * y.pow(2);
    const Field& f = a->field();
    EXPECT_EQ(m * m, f.mul(a->rho(), f.mul(a->alpha(), a->beta())) * (x * y));
    EXPECT_TRUE((y + m).pow(3).is_scalar());
}

TEST(Algebra, Inverse) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Field& f = a->field();
    EXPECT_EQ(inverse(x), f.inv(a->alpha()) * x.pow(4));
    EXPECT_EQ(inverse(y) * y, Elem::one(a));
    const auto split = algebra(5, 11, 1, 3);
    const auto [sx, sy] = generators(split);
    try {
        inverse(sx - Elem::one(split));
        FAIL() << "x - 1 is a zero divisor when alpha = 1";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
    EXPECT_FALSE(try_inverse(Elem::zero(a)));
}

TEST(Algebra, ReducedTrace) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    EXPECT_EQ(reduced_trace(Elem::one(a)), Scalar{5});
    EXPECT_EQ(reduced_trace(x), Scalar{0});
    EXPECT_EQ(reduced_trace(Scalar{4} * Elem::one(a) + x.pow(3) * y), Scalar{9});
}

TEST(Algebra, KummerPredicate) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    EXPECT_TRUE(is_kummer(x));
    EXPECT_FALSE(is_kummer(Elem::one(a)));
    EXPECT_FALSE(is_kummer(Elem::zero(a)));
    const auto p3 = algebra(3, 7);
    const auto [x3, y3] = generators(p3);
    EXPECT_TRUE(is_kummer(y3 + x3.pow(2) * y3.pow(2)));
    const auto split = algebra(5, 11, 1, 3);
    const auto [sx, sy] = generators(split);
    EXPECT_FALSE(is_kummer(sx - Elem::one(split)));
    EXPECT_FALSE((sx - Elem::one(split)).pow(5).is_scalar());
}

TEST(Algebra, Commutators) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Field& f = a->field();
    EXPECT_TRUE(add_commutator(x, x, 0).is_zero());
    EXPECT_TRUE(add_commutator(x, y, 1).is_zero());
    for (std::int64_t d = 0; d < 5; ++d) {
        EXPECT_EQ(add_commutator(y, x, d), f.sub(Scalar{1}, a->rho_pow(d + 1)) * (x * y));
    }
    const std::array<Elem, 2> pair{x, y};
    const std::array<std::int64_t, 1> one{1};
    EXPECT_TRUE(multi_commutator(pair, one).is_zero());
    // [x, x, z]_{m,n} vanishes when z only has components m and n.
    const Elem z = y + x.pow(2) * y.pow(3);
    const std::array<Elem, 3> triple{x, x, z};
    EXPECT_TRUE(multi_commutator(triple, std::array<std::int64_t, 2>{1, 3}).is_zero());
    EXPECT_FALSE(multi_commutator(triple, std::array<std::int64_t, 2>{1, 2}).is_zero());
    EXPECT_EQ(multi_commutator(triple, std::array<std::int64_t, 2>{1, 2}),
              add_commutator(x, add_commutator(x, z, 1), 2));
}

TEST(Algebra, StarProduct) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const std::array<StarFactor, 2> xxy{StarFactor{x, 2}, StarFactor{y, 1}};
    EXPECT_EQ(star_product(xxy), x * x * y + x * y * x + y * x * x);
    const auto p3 = algebra(3, 7);
    const auto [x3, y3] = generators(p3);
    const std::array<StarFactor, 2> xxy3{StarFactor{x3, 2}, StarFactor{y3, 1}};
    EXPECT_TRUE(star_product(xxy3).is_zero());
    const std::array<StarFactor, 2> big{StarFactor{x, 3}, StarFactor{y, 3}};
    EXPECT_THROW(star_product(big), Error);
}

TEST(Algebra, ComponentFilter) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Elem z = x.pow(2) + y + x * y.pow(3);
    EXPECT_EQ(component_filter(x, z, Label(5)), z);
    EXPECT_TRUE(component_filter(x, z, Label(5, {0, 1, 3})).is_zero());
    // Killing index 0 leaves the other two components, rescaled and shifted by x.
    const Field& f = a->field();
    const Elem expect = f.sub(a->rho(), Scalar{1}) * (x * y) + f.sub(a->rho_pow(3), Scalar{1}) * (x * x * y.pow(3));
    EXPECT_EQ(component_filter(x, z, Label(5, {0})), expect);
}

// Properties, over several (p, q) configurations with hand-rolled random elements.

TEST(AlgebraProperty, RingAxioms) {
    for (const auto& a : configurations()) {
        Rng rng(a->field().modulus() * 100 + a->degree());
        for (int t = 0; t < 200; ++t) {
            const Elem u = random_elem(a, rng);
            const Elem v = random_elem(a, rng);
            const Elem w = random_elem(a, rng);
            ASSERT_EQ((u * v) * w, u * (v * w));
            ASSERT_EQ(u * (v + w), u * v + u * w);
            ASSERT_EQ(u * Elem::one(a), u);
            ASSERT_EQ(Elem::one(a) * u, u);
            const Scalar c{static_cast<std::uint32_t>(rng.uniform(a->field().modulus()))};
            ASSERT_EQ(Elem::scalar(a, c) * u, u * Elem::scalar(a, c));
            ASSERT_EQ(Elem::scalar(a, c) * u, c * u);
        }
    }
}

TEST(AlgebraProperty, ReducedTrace) {
    for (const auto& a : configurations()) {
        Rng rng(a->field().modulus() + 7);
        const Field& f = a->field();
        for (int t = 0; t < 200; ++t) {
            const Elem u = random_elem(a, rng);
            const Elem v = random_elem(a, rng);
            const Scalar c{static_cast<std::uint32_t>(rng.uniform(f.modulus()))};
            ASSERT_EQ(reduced_trace(c * u + v), f.add(f.mul(c, reduced_trace(u)), reduced_trace(v)));
            ASSERT_EQ(reduced_trace(u * v), reduced_trace(v * u));
        }
    }
}

TEST(AlgebraProperty, InverseIsTwoSided) {
    for (const auto& a : configurations()) {
        Rng rng(a->field().modulus() + 11);
        for (int t = 0; t < 100; ++t) {
            const Elem u = random_elem(a, rng);
            if (const auto inv = try_inverse(u)) {
                ASSERT_EQ(u * *inv, Elem::one(a));
                ASSERT_EQ(*inv * u, Elem::one(a));
                ASSERT_EQ(u.pow(-2) * u.pow(2), Elem::one(a));
            }
        }
    }
}

TEST(AlgebraProperty, MultinomialStarIdentity) {
    for (const auto& a : configurations()) {
        Rng rng(a->field().modulus() + 13);
        const std::uint32_t p = a->degree();
        for (int t = 0; t < 100; ++t) {
            const Elem u = random_elem(a, rng);
            const Elem v = random_elem(a, rng);
            Elem sum = Elem::zero(a);
            for (std::uint32_t k = 0; k <= p; ++k) {
                const std::array<StarFactor, 2> f{StarFactor{u, k}, StarFactor{v, p - k}};
                sum += star_product(f);
            }
            ASSERT_EQ(sum, (u + v).pow(p));
            const std::array<StarFactor, 2> fwd{StarFactor{u, 1}, StarFactor{v, p - 1}};
            const std::array<StarFactor, 2> bwd{StarFactor{v, p - 1}, StarFactor{u, 1}};
            ASSERT_EQ(star_product(fwd), star_product(bwd));
        }
    }
}

TEST(AlgebraProperty, ConjugationPreservesKummer) {
    for (const auto& a : configurations()) {
        Rng rng(a->field().modulus() + 17);
        const auto [x, y] = generators(a);
        for (int t = 0; t < 50; ++t) {
            const auto [g, g_inv] = random_invertible(a, rng);
            const Elem cx = g * x * g_inv;
            const Elem cy = g * y * g_inv;
            ASSERT_TRUE(is_kummer(cx));
            ASSERT_EQ(cy * cx, a->rho() * (cx * cy));
        }
    }
}

}  // namespace
}  // namespace kummerlab
