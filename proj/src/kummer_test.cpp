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

#include <gtest/gtest.h>

#include "kummerlab/error.hpp"

namespace kummerlab {
namespace {

AlgebraPtr algebra(std::uint64_t p = 5, std::uint64_t q = 11) {
    return Algebra::create(AlgebraParams{p, q, 2, 3, std::nullopt});
}

TEST(Decompose, Generators) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Decomposition d = decompose(x, y);
    EXPECT_EQ(d.label, Label(5, {1}));
    EXPECT_EQ(d.part(1), y);
    EXPECT_EQ(decompose(x, x.pow(3)).label, Label(5, {0}));
    EXPECT_THROW(decompose(Elem::one(a), y), Error);
}

TEST(Decompose, SmallExample) {
    const auto a = algebra(3, 7);
    const auto [x, y] = generators(a);
    const Elem z = y + x.pow(2) * y.pow(2);
    const Decomposition d = decompose(x, z);
    EXPECT_EQ(d.label, Label(3, {1, 2}));
    EXPECT_EQ(d.part(1), y);
    EXPECT_EQ(d.part(2), x.pow(2) * y.pow(2));
    const EdgeInfo e = edge(x, z);
    EXPECT_EQ(e.weight_fwd(), 2U);
    EXPECT_EQ(e.weight_bwd(), 3U);
    EXPECT_EQ(e.label_bwd, Label(3, {0, 1, 2}));
    EXPECT_FALSE(weight_one_witness(x, z));
}

TEST(Decompose, Witness) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    EXPECT_EQ(weight_one_witness(x, y), 1U);
    EXPECT_EQ(weight_one_witness(x, x.pow(2)), 0U);
    EXPECT_EQ(weight_one_witness(y, x), 4U);
    const EdgeInfo e = edge(x, y);
    EXPECT_EQ(e.weight_fwd(), 1U);
    EXPECT_EQ(e.weight_bwd(), 1U);
}

TEST(Kummer, InverseAndFieldTest) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Elem u = x * y.pow(2);
    EXPECT_EQ(kummer_inverse(u) * u, Elem::one(a));
    EXPECT_EQ(kummer_inverse(u), inverse(u));
    EXPECT_THROW(kummer_inverse(x + Elem::one(a)), Error);
    EXPECT_TRUE(generates_field(x));
    // At q = 41 the element 3 is a fifth power, so F[y] is not a field.
    const auto b = Algebra::create(AlgebraParams{5, 41, 2, 3, std::nullopt});
    const auto [bx, by] = generators(b);
    EXPECT_TRUE(generates_field(bx));
    EXPECT_FALSE(generates_field(by));
}

TEST(Kummer, ExponentiationForm) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Elem z = family_deg5(a, {Scalar{1}, Scalar{4}, Scalar{0}, Scalar{0}});
    const Decomposition d = decompose(x, z);
    ASSERT_EQ(d.label, Label(5, {1, 4}));
    EXPECT_EQ(exponentiation_form(x, z, Scalar{1}, Scalar{0}), d.part(1).pow(5));
    EXPECT_EQ(exponentiation_form(x, z, Scalar{1}, Scalar{1}), z.pow(5));
    EXPECT_THROW(exponentiation_form(x, y, Scalar{1}, Scalar{1}), Error);
}

TEST(Family, Instances) {
    const auto a = algebra();
    const auto [x, y] = generators(a);
    const Field& f = a->field();
    const Scalar quoted = family_constant_quoted(a);
    EXPECT_EQ(quoted, f.sub(f.pow(Scalar{3}, 4), Scalar{3}));
    EXPECT_EQ(quoted, Scalar{1});
    // (1, c, 0, 0): inner weight 2 whenever Kummer.
    for (std::uint32_t c = 1; c < 11; ++c) {
        const Elem z = family_deg5(a, {Scalar{1}, Scalar{c}, Scalar{0}, Scalar{0}});
        ASSERT_TRUE(z.pow(5).is_scalar());
        EXPECT_EQ(decompose(x, z).label, Label(5, {1, 4}));
        if (is_kummer(z)) EXPECT_EQ(inner_label(x, z)->size(), 2U) << c;
    }
    // With the quoted constant, (1, rho^4 - rho, 1, 1) = (1, 1, 1, 1) has non-central fifth power.
    const Elem bad = family_deg5(a, {Scalar{1}, quoted, Scalar{1}, Scalar{1}});
    EXPECT_FALSE(bad.pow(5).is_scalar());
    EXPECT_FALSE(is_kummer(bad));
    // The governing constant makes the same shape Kummer, with inner weight 4.
    const Elem good = family_deg5(a, {Scalar{1}, family_constant_exact(a), Scalar{1}, Scalar{1}});
    EXPECT_TRUE(is_kummer(good));
    EXPECT_EQ(inner_label(x, good)->size(), 4U);
    EXPECT_THROW(family_deg5(algebra(3, 7), {}), Error);
}

TEST(Family, ExhaustiveRelationAtSmallModulus) {
    // Over all 11^4 coefficient tuples: z^5 is central exactly when a2 a3 = (2 + rho + rho^4) a1 a4.
    const auto a = algebra();
    const Field& f = a->field();
    const Scalar c = family_constant_exact(a);
    EXPECT_EQ(c, f.add(Scalar{2}, f.add(a->rho(), a->rho_pow(4))));
    int central = 0;
    for (std::uint32_t i = 0; i < 14641; i += 7) {
        const std::array<Scalar, 4> t{Scalar{i % 11}, Scalar{i / 11 % 11}, Scalar{i / 121 % 11}, Scalar{i / 1331}};
        const bool relation = f.mul(t[1], t[2]) == f.mul(c, f.mul(t[0], t[3]));
        const bool is_central = family_deg5(a, t).pow(5).is_scalar();
        ASSERT_EQ(is_central, relation) << i;
        central += is_central;
    }
    EXPECT_GT(central, 0);
}

TEST(Sampler, ProfilesAreHonoured) {
    const auto a = algebra();
    Rng rng(5);
    PairProfile w1;
    w1.weight_fwd = 1;
    PairProfile zero;
    zero.weight_fwd = 2;
    zero.zero_in_fwd = true;
    PairProfile inner;
    inner.weight_fwd = 2;
    inner.inner_weight = 2;
    PairProfile b24;
    b24.weight_fwd = 2;
    b24.weight_bwd = 4;
    b24.zero_in_fwd = false;
    b24.base_generates_field = true;
    for (const auto& pr : {w1, zero, inner, b24}) {
        for (int t = 0; t < 10; ++t) {
            const SampledPair s = sample_pair(a, rng, pr);
            ASSERT_TRUE(is_kummer(s.x));
            ASSERT_TRUE(is_kummer(s.z));
            const EdgeInfo e = edge(s.x, s.z);
            ASSERT_EQ(e.label_fwd, s.edge.label_fwd);
            ASSERT_EQ(e.label_bwd, s.edge.label_bwd);
            if (pr.weight_fwd) ASSERT_EQ(e.weight_fwd(), *pr.weight_fwd);
            if (pr.weight_bwd) ASSERT_EQ(e.weight_bwd(), *pr.weight_bwd);
            if (pr.zero_in_fwd) ASSERT_EQ(e.label_fwd.contains(0), *pr.zero_in_fwd);
            if (pr.inner_weight) ASSERT_EQ(inner_label(s.x, s.z)->size(), *pr.inner_weight);
            if (pr.base_generates_field) ASSERT_TRUE(generates_field(s.x));
        }
    }
}

TEST(Sampler, SmallDegreeBucket) {
    const auto a = algebra(3, 7);
    Rng rng(9);
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.weight_bwd = 3;
    const SampledPair s = sample_pair(a, rng, pr);
    EXPECT_EQ(edge(s.x, s.z).weight_bwd(), 3U);
    PairProfile impossible;
    impossible.weight_fwd = 4;
    EXPECT_THROW(sample_pair(a, rng, impossible, 200), Error);
}

// Properties.

TEST(KummerProperty, DecompositionRoundTrip) {
    for (auto [p, q] : {std::pair{5u, 11u}, std::pair{5u, 31u}, std::pair{3u, 13u}, std::pair{7u, 29u}}) {
        const auto a = algebra(p, q);
        Rng rng(q);
        for (int t = 0; t < 60; ++t) {
            const Elem x = sample_kummer(a, rng);
            const Elem z = random_elem(a, rng);
            const Decomposition d = decompose(x, z);
            Elem sum = Elem::zero(a);
            for (std::uint32_t i = 0; i < p; ++i) {
                sum += d.part(i);
                ASSERT_EQ(d.part(i) * x, a->rho_pow(i) * (x * d.part(i)));
                ASSERT_EQ(decompose(x, d.part(i)).part(i), d.part(i));
            }
            ASSERT_EQ(sum, z);
        }
    }
}

TEST(KummerProperty, WeightOneIsSymmetric) {
    const auto a = algebra();
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const Elem x = sample_kummer(a, rng);
        const Elem z = sample_kummer(a, rng);
        const EdgeInfo e = edge(x, z);
        ASSERT_EQ(e.weight_fwd() == 1, e.weight_bwd() == 1);
        if (e.weight_fwd() == 1) {
            const auto i = weight_one_witness(x, z);
            ASSERT_TRUE(i);
            ASSERT_EQ(z * x, a->rho_pow(*i) * (x * z));
            ASSERT_EQ(weight_one_witness(z, x), reduce_exponent(-std::int64_t{*i}, 5));
        }
    }
}

TEST(KummerProperty, FilterAnnihilatesLabel) {
    const auto a = algebra();
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const Elem x = sample_kummer(a, rng);
        const Elem z = random_elem(a, rng);
        ASSERT_TRUE(component_filter(x, z, decompose(x, z).label).is_zero());
    }
}

}  // namespace
}  // namespace kummerlab
