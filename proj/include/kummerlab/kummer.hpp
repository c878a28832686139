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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/label.hpp"
#include "kummerlab/rng.hpp"
#include "kummerlab/symalg.hpp"

namespace kummerlab {

/// z = parts[0] + ... + parts[p-1] with parts[i] * base = rho^i * base * parts[i].
struct Decomposition {
    Elem base;
    std::vector<Elem> parts;
    Label label;

    const Elem& part(std::int64_t i) const { return parts[reduce_exponent(i, base.degree())]; }
    std::uint32_t weight() const noexcept { return label.size(); }
};

/// Labels and weights of both directed edges between two Kummer elements.
struct EdgeInfo {
    Label label_fwd;  // l(x, z)
    Label label_bwd;  // l(z, x)

    std::uint32_t weight_fwd() const noexcept { return label_fwd.size(); }
    std::uint32_t weight_bwd() const noexcept { return label_bwd.size(); }
};

/// u^{-1} = (u^p)^{-1} u^{p-1} for a Kummer element u. Throws Error{NotKummerBase}.
Elem kummer_inverse(const Elem& u);

/// True iff u is Kummer and u^p is not a p-th power in F, so F[u] is a field.
bool generates_field(const Elem& u);

/// Eigencomponents of z under w -> x^{-1} w x:
///   parts[i] = p^{-1} sum_k rho^{-ik} x^{-k} z x^k.
/// Throws Error{NotKummerBase} when x is not Kummer.
Decomposition decompose(const Elem& x, const Elem& z);

/// Throws Error{NotKummerBase} unless both x and z are Kummer.
EdgeInfo edge(const Elem& x, const Elem& z);

/// The exponent i with z x = rho^i x z when w(x, z) = 1.
std::optional<std::uint32_t> weight_one_witness(const Elem& x, const Elem& z);

/// w(z_i, z_j) for l(x, z) = {i < j}; empty unless w(x, z) = 2 and z_i is Kummer.
std::optional<Label> inner_label(const Elem& x, const Elem& z);

/// (u z_i + v z_j)^p where l(x, z) = {i < j}. Throws Error{WrongWeight} unless w(x, z) = 2.
Elem exponentiation_form(const Elem& x, const Elem& z, Scalar u, Scalar v);

/// y + (a_1 x + a_2 x^2 + a_3 x^3 + a_4 x^4) y^{-1} in a degree-5 algebra.
/// Throws Error{WrongDegree} for p != 5.
Elem family_deg5(const AlgebraPtr& algebra, const std::array<Scalar, 4>& a);

/// Variant with a constant term: y + (a_0 + a_1 x + ... + a_4 x^4) y^{-1}.
Elem family_deg5(const AlgebraPtr& algebra, Scalar a0, const std::array<Scalar, 4>& a);

/// The constant c in the family relation a_2 a_3 = c a_1 a_4 as usually quoted: rho^4 - rho.
Scalar family_constant_quoted(const AlgebraPtr& algebra);

/// The constant that actually governs the family: (1 + rho)(1 + rho^{-1}) = 2 + rho + rho^4.
/// Obtained by cancelling the central term of y^3 * w^2 in the star-relation expansion.
Scalar family_constant_exact(const AlgebraPtr& algebra);

/// Kummer element drawn from one of: a conjugated monomial u (c x^a y^b) u^{-1};
/// a sum of two rho-commuting monomials; a degree-5 family member. Always passes is_kummer.
Elem sample_kummer(const AlgebraPtr& algebra, Rng& rng);

/// Filters for sample_pair; unset fields accept anything.
struct PairProfile {
    std::optional<std::uint32_t> weight_fwd;
    std::optional<std::uint32_t> weight_bwd;
    std::optional<bool> zero_in_fwd;
    std::optional<bool> zero_in_bwd;
    /// w(z_i, z_j); implies weight_fwd = 2.
    std::optional<std::uint32_t> inner_weight;
    /// Require x^p to be a non-p-th power.
    bool base_generates_field = false;
    /// Draw z from the degree-5 family this often (percent, p = 5 only).
    std::uint32_t family_percent = 15;
};

struct SampledPair {
    Elem x;
    Elem z;
    EdgeInfo edge;
    std::string source;
    std::uint64_t discarded = 0;
};

/// Draws (x, z) from a random monomial frame (X, Y) = (c x^a y^b, c' x^c y^d) with
/// YX = rho^s XY, builds z from monomials in X, Y (or the degree-5 family in X, Y),
/// optionally conjugates both by a random unit, and keeps the first pair matching
/// `profile`. Rejected draws count toward `discarded`. Throws Error{Exhausted}.
SampledPair sample_pair(const AlgebraPtr& algebra, Rng& rng, const PairProfile& profile,
                        std::uint64_t max_attempts = 20000);

}  // namespace kummerlab
