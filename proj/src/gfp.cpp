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

#include <string>

#include "kummerlab/error.hpp"

namespace kummerlab {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases 2, 3, 5, 7 are a complete witness set below 3.2e9; extra bases are cheap.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field::Field(std::uint64_t q, std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "degree " + std::to_string(p) + " is not prime");
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(q) + " is not prime");
    if (q > kMaxModulus) {
        throw Error(ErrorKind::UnsupportedParameters, "modulus must be below 2^31");
    }
    if (q == p || (q - 1) % p != 0) {
        throw Error(ErrorKind::NoRootOfUnity, "F_" + std::to_string(q) +
                                                  " has no primitive root of unity of order " +
                                                  std::to_string(p));
    }
    q_ = static_cast<std::uint32_t>(q);
    p_ = static_cast<std::uint32_t>(p);
    p_inv_ = inv(Scalar{p_ % q_});
    for (std::uint32_t r = 2; r < q_; ++r) {
        if (powmod(r, p_, q_) == 1) {
            rho_ = Scalar{r};
            break;
        }
    }
}

Scalar Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return Scalar{static_cast<std::uint32_t>(r)};
}

Scalar Field::inv(Scalar a) const {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Scalar{static_cast<std::uint32_t>(powmod(a.value, q_ - 2, q_))};
}

Scalar Field::pow(Scalar a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    return Scalar{static_cast<std::uint32_t>(powmod(a.value, static_cast<std::uint64_t>(e), q_))};
}

bool Field::is_primitive_root_of_unity(Scalar a) const {
    // p is prime, so order p means a != 1 and a^p = 1.
    return a.value != 1 && !a.is_zero() && powmod(a.value, p_, q_) == 1;
}

bool Field::is_pth_power(Scalar a) const {
    if (a.is_zero()) return false;
    return powmod(a.value, (q_ - 1) / p_, q_) == 1;
}

}  // namespace kummerlab
