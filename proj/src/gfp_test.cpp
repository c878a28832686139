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

#include "kummerlab/gfp.hpp"

#include <gtest/gtest.h>

#include "kummerlab/error.hpp"
#include "kummerlab/rng.hpp"

namespace kummerlab {
namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

TEST(IsPrime, SmallValues) {
    const bool expected[] = {false, false, true, true, false, true, false, true, false, false, false, true};
    for (std::uint64_t n = 0; n < 12; ++n) EXPECT_EQ(is_prime(n), expected[n]) << n;
}

TEST(IsPrime, AgreesWithTrialDivision) {
    auto slow = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (std::uint64_t n = 0; n < 5000; ++n) ASSERT_EQ(is_prime(n), slow(n)) << n;
    EXPECT_TRUE(is_prime(2147483647));
    EXPECT_FALSE(is_prime(2147483647ULL * 3));
    EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Field, Construction) {
    EXPECT_NO_THROW(Field(11, 5));
    EXPECT_NO_THROW(Field(7, 3));
    EXPECT_EQ(kind_of([] { Field(7, 5); }), ErrorKind::NoRootOfUnity);
    EXPECT_EQ(kind_of([] { Field(12, 5); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { Field(11, 4); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { Field(4294967291ULL, 5); }), ErrorKind::UnsupportedParameters);
}

TEST(Field, PrimitiveRoots) {
    EXPECT_EQ(Field(11, 5).primitive_root_of_unity(), Scalar{3});
    EXPECT_EQ(Field(7, 3).primitive_root_of_unity(), Scalar{2});
    EXPECT_EQ(Field(3, 2).primitive_root_of_unity(), Scalar{2});
    const Field f(31, 5);
    const Scalar r = f.primitive_root_of_unity();
    EXPECT_EQ(f.pow(r, 5), Scalar{1});
    EXPECT_NE(r, Scalar{1});
    for (std::uint32_t c = 2; c < r.value; ++c) EXPECT_FALSE(f.is_primitive_root_of_unity(Scalar{c}));
}

TEST(Field, ScalarOps) {
    const Field f(11, 5);
    EXPECT_EQ(f.inv(Scalar{3}), Scalar{4});
    EXPECT_EQ(f.pow(Scalar{3}, 5), Scalar{1});
    EXPECT_EQ(kind_of([&] { f.inv(Scalar{0}); }), ErrorKind::DivisionByZero);
    EXPECT_EQ(f.from_int(-1), Scalar{10});
    EXPECT_EQ(f.from_int(25), Scalar{3});
    EXPECT_EQ(f.pow(Scalar{2}, -1), Scalar{6});
    EXPECT_EQ(f.degree_inverse(), Scalar{9});
}

TEST(Field, PthPowers) {
    // Fifth powers in F_11^x are {1, 10}.
    const Field f(11, 5);
    for (std::uint32_t a = 1; a < 11; ++a) EXPECT_EQ(f.is_pth_power(Scalar{a}), a == 1 || a == 10) << a;
    EXPECT_FALSE(f.is_pth_power(Scalar{0}));
    const Field g(41, 5);
    EXPECT_TRUE(g.is_pth_power(Scalar{3}));
    EXPECT_FALSE(g.is_pth_power(Scalar{2}));
}

TEST(FieldProperty, FieldAxioms) {
    for (auto [q, p] : {std::pair{11u, 5u}, std::pair{31u, 5u}, std::pair{13u, 3u}, std::pair{2147483647u, 2u}}) {
        const Field f(q, p);
        Rng rng(q);
        for (int t = 0; t < 300; ++t) {
            const Scalar a{static_cast<std::uint32_t>(rng.uniform(q))};
            const Scalar b{static_cast<std::uint32_t>(rng.uniform(q))};
            const Scalar c{static_cast<std::uint32_t>(rng.uniform(q))};
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.add(f.sub(a, b), b), a);
            ASSERT_EQ(f.add(a, f.neg(a)), Scalar{0});
            if (!a.is_zero()) {
                ASSERT_EQ(f.mul(a, f.inv(a)), Scalar{1});
                ASSERT_EQ(f.pow(a, q - 1), Scalar{1});
                ASSERT_EQ(f.mul(f.pow(a, -3), f.pow(a, 3)), Scalar{1});
            }
        }
    }
}

}  // namespace
}  // namespace kummerlab
