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
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/kummer.hpp"
#include "kummerlab/symalg.hpp"

namespace kummerlab {

/// A path of Kummer elements in which consecutive nodes rho-commute:
///   nodes[t+1] * nodes[t] = rho^{certs[t]} * nodes[t] * nodes[t+1].
/// provenance[t] names the construction that produced edge t.
struct Chain {
    std::vector<Elem> nodes;
    std::vector<std::uint32_t> certs;
    std::vector<std::string> provenance;

    std::size_t edges() const noexcept { return certs.size(); }
};

/// The exponent i with v u = rho^i u v, computed from the decomposition of v relative to u.
/// Throws Error{NotWeightOne}.
std::uint32_t certify_edge(const Elem& u, const Elem& v);

/// Same exponent found by comparing v u against u v directly; no decomposition involved.
std::optional<std::uint32_t> commutation_exponent(const Elem& u, const Elem& v);

/// Re-checks every node (Kummer) and every certificate by direct multiplication.
bool verify_chain(const Chain& chain);

/// The same path walked from the other end (certificates negate).
Chain reversed(const Chain& chain);

enum class CommutatorIndex { Smaller, Larger };

/// w(x, z) = w(z, x) = 2: x <-> y <-> z with y = x z - rho^i z x, i taken from l(z, x).
/// Also checks y = (rho^j - rho^i) z x_j.
Chain chain_twotwo(const Elem& x, const Elem& z, CommutatorIndex pick = CommutatorIndex::Smaller);

/// w(x, z) = 2 with 0 in l(x, z): x <-> z_0 z_j^{-1} <-> z. Needs z_0 to be a scalar
/// multiple of a power of x, which always holds when x^p is not a p-th power.
Chain chain_zero_in_label(const Elem& x, const Elem& z);

/// w(x, z) = 2, w(z, x) = 3. With x = x_i + x_j + x_k relative to z and {i, j} = -l(x, z),
/// the middle node is z^2 x_k (a multiple of z_{-j} z_{-i}). When k = -i-j = 0 that node is
/// central and the ratio z_a z_b^{-1} of the two components of z is used instead.
Chain chain_two_three(const Elem& x, const Elem& z);

/// p = 5, w(x, z) = 2, w(z, x) = 4, 0 in neither label. Labels are read against rho^s, s in
/// l(x, z), so that l(x, z) becomes {1, 4} or {1, 3}:
///   {1, 4}: x <-> x_s z^3 <-> z;
///   {1, 3}: x ~ x_{4s} (two edges, zero-in-label construction) <-> z.
Chain chain_deg5_two_four(const Elem& x, const Elem& z);

/// p = 5, l(x, z) = {i, j}, w(z_i, z_j) = 2 with l(z_i, z_j) = {m, n}: tries
///   x <-> z_{j,m} <-> z_{j,m}^{-1}(z_i + z_{j,n}) <-> z
/// and then the same with m and n swapped and with i and j swapped (tag "inner2/alt").
Chain chain_deg5_inner2(const Elem& x, const Elem& z);

/// Dispatches on computed labels: direct edge, zero-in-label, (2,2), (2,3), degree-5 (2,4),
/// degree-5 inner weight 2; pairs with w(z, x) = 2 but w(x, z) != 2 are handled from the
/// other end. Throws Error{NotCovered} or Error{CertificationFailed}.
Chain connect(const Elem& x, const Elem& z);

/// Breadth-first search through at most `budget` candidate nodes built from powers,
/// eigencomponents, and their products and quotients. Returns a shortest chain found.
std::optional<Chain> search_chain(const Elem& x, const Elem& z, std::size_t budget);

}  // namespace kummerlab
