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

#include <compare>
#include <cstdint>

namespace kummerlab {

/// Residue class in a prime field F_q, always stored reduced to [0, q).
struct Scalar {
    std::uint32_t value = 0;

    constexpr Scalar() = default;
    constexpr explicit Scalar(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const noexcept { return value == 0; }

    friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// Exact primality test for n < 2^32 (deterministic Miller-Rabin).
bool is_prime(std::uint64_t n) noexcept;

/// Prime field F_q together with the degree p of the algebras built over it.
///
/// Construction checks that q is prime, q != p, and q = 1 (mod p) so that F_q
/// holds a primitive p-th root of unity. The modulus is capped below 2^31 so
/// every product fits a 64-bit intermediate. Immutable once built.
class Field {
public:
    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

    /// Throws Error{NotPrime} or Error{NoRootOfUnity}.
    Field(std::uint64_t q, std::uint64_t p);

    std::uint32_t modulus() const noexcept { return q_; }
    std::uint32_t degree() const noexcept { return p_; }

    /// Reduces any signed integer into [0, q).
    Scalar from_int(std::int64_t v) const noexcept;

    Scalar add(Scalar a, Scalar b) const noexcept {
        std::uint32_t s = a.value + b.value;
        return Scalar{s >= q_ ? s - q_ : s};
    }
    Scalar sub(Scalar a, Scalar b) const noexcept {
        return Scalar{a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
    }
    Scalar neg(Scalar a) const noexcept { return Scalar{a.value == 0 ? 0 : q_ - a.value}; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return Scalar{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % q_)};
    }
    /// Throws Error{DivisionByZero} for a = 0.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first.
    Scalar pow(Scalar a, std::int64_t e) const;

    /// p^{-1} mod q.
    Scalar degree_inverse() const noexcept { return p_inv_; }

    /// Smallest residue of multiplicative order exactly p.
    Scalar primitive_root_of_unity() const noexcept { return rho_; }

    /// True iff a has multiplicative order exactly p.
    bool is_primitive_root_of_unity(Scalar a) const;

    /// True iff a is a nonzero p-th power in F_q.
    bool is_pth_power(Scalar a) const;

private:
    std::uint32_t q_;
    std::uint32_t p_;
    Scalar p_inv_;
    Scalar rho_;
};

}  // namespace kummerlab
