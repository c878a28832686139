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

#include "kummerlab/chains.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "kummerlab/error.hpp"

namespace kummerlab {

namespace {

/// Builds a chain from explicit nodes, certifying each edge; any failure is a CertificationFailed.
Chain certified(std::vector<Elem> nodes, const std::vector<std::string>& tags) {
    Chain c;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (!is_kummer(nodes[t])) {
            throw Error(ErrorKind::CertificationFailed,
                        "node " + std::to_string(t) + " of a " + tags.front() + " chain is not Kummer");
        }
    }
    for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
        const auto w = weight_one_witness(nodes[t], nodes[t + 1]);
        if (!w) {
            throw Error(ErrorKind::CertificationFailed,
                        "edge " + std::to_string(t) + " (" + tags[t] + ") does not have weight 1");
        }
        c.certs.push_back(*w);
        c.provenance.push_back(tags[t]);
    }
    c.nodes = std::move(nodes);
    return c;
}

std::optional<Elem> unit_inverse(const Elem& u) {
    if (is_kummer(u)) return kummer_inverse(u);
    return try_inverse(u);
}

Chain concat(Chain a, const Chain& b) {
    a.nodes.insert(a.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
    a.certs.insert(a.certs.end(), b.certs.begin(), b.certs.end());
    a.provenance.insert(a.provenance.end(), b.provenance.begin(), b.provenance.end());
    return a;
}

/// Some k and c with u = c x^k.
bool is_multiple_of_power(const Elem& u, const Elem& x) {
    if (u.is_zero()) return false;
    const Field& f = u.algebra()->field();
    Elem xk = Elem::one(u.algebra());
    for (std::uint32_t k = 0; k < x.degree(); ++k, xk *= x) {
        const auto coeffs = xk.coeffs();
        const auto it = std::find_if(coeffs.begin(), coeffs.end(), [](Scalar s) { return !s.is_zero(); });
        if (it == coeffs.end()) continue;
        const Scalar ratio = f.div(u.coeffs()[static_cast<std::size_t>(it - coeffs.begin())], *it);
        if (ratio * xk == u) return true;
    }
    return false;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::HypothesisFailed, what);
}

}  // namespace

std::uint32_t certify_edge(const Elem& u, const Elem& v) {
    if (!is_kummer(u) || !is_kummer(v)) throw Error(ErrorKind::NotWeightOne, "edge endpoint is not Kummer");
    const auto w = weight_one_witness(u, v);
    if (!w) throw Error(ErrorKind::NotWeightOne, "w(u, v) = " + std::to_string(decompose(u, v).weight()));
    return *w;
}

std::optional<std::uint32_t> commutation_exponent(const Elem& u, const Elem& v) {
    const Elem uv = u * v;
    const Elem vu = v * u;
    const auto coeffs = uv.coeffs();
    const auto it = std::find_if(coeffs.begin(), coeffs.end(), [](Scalar s) { return !s.is_zero(); });
    if (it == coeffs.end()) return std::nullopt;
    const std::size_t idx = static_cast<std::size_t>(it - coeffs.begin());
    const AlgebraPtr& alg = u.algebra();
    for (std::uint32_t i = 0; i < u.degree(); ++i) {
        if (alg->field().mul(alg->rho_pow(i), *it) != vu.coeffs()[idx]) continue;
        if (alg->rho_pow(i) * uv == vu) return i;
    }
    return std::nullopt;
}

bool verify_chain(const Chain& chain) {
    if (chain.nodes.empty()) return chain.certs.empty();
    if (chain.certs.size() + 1 != chain.nodes.size()) return false;
    for (const auto& n : chain.nodes) {
        if (!is_kummer(n)) return false;
    }
    for (std::size_t t = 0; t < chain.certs.size(); ++t) {
        const Elem& u = chain.nodes[t];
        const Elem& v = chain.nodes[t + 1];
        if (!(v * u == u.algebra()->rho_pow(chain.certs[t]) * (u * v))) return false;
    }
    return true;
}

Chain reversed(const Chain& chain) {
    Chain out;
    out.nodes.assign(chain.nodes.rbegin(), chain.nodes.rend());
    out.provenance.assign(chain.provenance.rbegin(), chain.provenance.rend());
    for (auto it = chain.certs.rbegin(); it != chain.certs.rend(); ++it) {
        out.certs.push_back(reduce_exponent(-std::int64_t{*it}, chain.nodes.front().degree()));
    }
    return out;
}

Chain chain_twotwo(const Elem& x, const Elem& z, CommutatorIndex pick) {
    const EdgeInfo e = edge(x, z);
    require(e.weight_fwd() == 2 && e.weight_bwd() == 2, "chain_twotwo needs w(x, z) = w(z, x) = 2");
    const auto idx = e.label_bwd.elements();
    const std::uint32_t i = pick == CommutatorIndex::Smaller ? idx[0] : idx[1];
    const std::uint32_t j = pick == CommutatorIndex::Smaller ? idx[1] : idx[0];
    const AlgebraPtr& alg = x.algebra();

    const Elem y = x * z - alg->rho_pow(i) * (z * x);
    const Elem x_j = decompose(z, x).part(j);
    if (!(y == alg->field().sub(alg->rho_pow(j), alg->rho_pow(i)) * (z * x_j))) {
        throw Error(ErrorKind::CertificationFailed, "x z - rho^i z x differs from (rho^j - rho^i) z x_j");
    }
    return certified({x, y, z}, {"twotwo", "twotwo"});
}

Chain chain_zero_in_label(const Elem& x, const Elem& z) {
    const Decomposition d = decompose(x, z);
    require(d.weight() == 2 && d.label.contains(0), "chain_zero_in_label needs l(x, z) = {0, j}");
    const std::uint32_t j = d.label.elements()[1];
    require(generates_field(x) || is_multiple_of_power(d.part(0), x),
            "z_0 is not a multiple of a power of x");
    const auto zj_inv = unit_inverse(d.part(j));
    if (!zj_inv) throw Error(ErrorKind::NotInvertible, "component z_j is a zero divisor");
    return certified({x, d.part(0) * *zj_inv, z}, {"zero-in-label", "zero-in-label"});
}

Chain chain_two_three(const Elem& x, const Elem& z) {
    const EdgeInfo e = edge(x, z);
    require(e.weight_fwd() == 2 && e.weight_bwd() == 3, "chain_two_three needs w(x, z) = 2, w(z, x) = 3");
    const Label opposite = e.label_fwd.negated();
    if (!opposite.subset_of(e.label_bwd)) {
        throw Error(ErrorKind::CertificationFailed, "-l(x, z) is not contained in l(z, x)");
    }
    std::uint32_t k = 0;
    for (auto idx : e.label_bwd.elements()) {
        if (!opposite.contains(idx)) k = idx;
    }
    const Elem x_k = decompose(z, x).part(k);
    const Elem middle = z * z * x_k;
    if (is_kummer(middle)) {
        try {
            return certified({x, middle, z}, {"two-three", "two-three"});
        } catch (const Error&) {
        }
    }
    const Decomposition dz = decompose(x, z);
    const auto idx = e.label_fwd.elements();
    const auto zb_inv = unit_inverse(dz.part(idx[1]));
    if (!zb_inv) throw Error(ErrorKind::CertificationFailed, "neither middle node candidate is usable");
    return certified({x, dz.part(idx[0]) * *zb_inv, z}, {"two-three/ratio", "two-three/ratio"});
}

Chain chain_deg5_two_four(const Elem& x, const Elem& z) {
    require(x.degree() == 5, "chain_deg5_two_four needs p = 5");
    const EdgeInfo e = edge(x, z);
    // 0 in l(z, x) leaves x_{4s} with a weight-3 label against x, so the {1, 3} route fails.
    require(e.weight_fwd() == 2 && !e.label_fwd.contains(0) && !e.label_bwd.contains(0) &&
                e.weight_bwd() == 4,
            "chain_deg5_two_four needs w(x, z) = 2, w(z, x) = 4, 0 in neither label");
    const std::uint32_t p = 5;
    const Label case14(p, {1, 4});
    const Label case13(p, {1, 3});
    std::uint32_t s = 0;
    Label normalized(p);
    for (auto cand : e.label_fwd.elements()) {
        std::uint32_t s_inv = 1;
        while (s_inv * cand % p != 1) ++s_inv;
        normalized = e.label_fwd.scaled(s_inv);
        if (normalized == case14 || normalized == case13) {
            s = cand;
            break;
        }
    }
    if (s == 0) throw Error(ErrorKind::HypothesisFailed, "label cannot be normalized");

    const Decomposition dx = decompose(z, x);
    const AlgebraPtr& alg = x.algebra();
    if (normalized == case14) {
        const Elem middle = dx.part(s) * z.pow(3);
        return certified({x, middle, z}, {"two-four/{1,4}", "two-four/{1,4}"});
    }

    const std::uint32_t k = reduce_exponent(4 * std::int64_t{s}, p);
    const Elem& x_k = dx.part(k);
    // [z, z, z, x]_{s, 2s, 3s} leaves every component of x outside {s, 2s, 3s}, scaled.
    const std::vector<Elem> args{z, z, z, x};
    const std::vector<std::int64_t> ds{s, 2 * s, 3 * s};
    Elem expected = Elem::zero(alg);
    const Field& f = alg->field();
    for (auto idx : dx.label.elements()) {
        Scalar c{1};
        for (auto d : ds) c = f.mul(c, f.sub(alg->rho_pow(idx), alg->rho_pow(d)));
        expected += c * (z.pow(3) * dx.part(idx));
    }
    if (!(multi_commutator(args, ds) == expected)) {
        throw Error(ErrorKind::CertificationFailed, "multi-commutator identity for x_4 failed");
    }
    if (!is_kummer(x_k)) throw Error(ErrorKind::CertificationFailed, "component x_4 is not Kummer");
    Chain head = chain_zero_in_label(x, x_k);
    for (auto& tag : head.provenance) tag = "two-four/{1,3}:" + tag;
    return concat(std::move(head), certified({x_k, z}, {"two-four/{1,3}"}));
}

Chain chain_deg5_inner2(const Elem& x, const Elem& z) {
    require(x.degree() == 5, "chain_deg5_inner2 needs p = 5");
    const Decomposition d = decompose(x, z);
    require(d.weight() == 2, "chain_deg5_inner2 needs w(x, z) = 2");
    const auto lz = d.label.elements();

    // The choice of which component is z_i and which inner index is m is arbitrary;
    // in a split algebra some choices give a nilpotent middle node, so all four are tried.
    bool first = true;
    for (const auto& [i, j] : {std::pair{lz[0], lz[1]}, std::pair{lz[1], lz[0]}}) {
        const Elem& z_i = d.part(i);
        if (!is_kummer(z_i)) continue;
        const Decomposition inner = decompose(z_i, d.part(j));
        if (inner.weight() != 2) continue;
        const auto mn = inner.label.elements();
        for (const auto& [a, b] : {std::pair{mn[0], mn[1]}, std::pair{mn[1], mn[0]}}) {
            const std::string tag = first ? "inner2" : "inner2/alt";
            first = false;
            const Elem& za = inner.part(a);
            const auto za_inv = unit_inverse(za);
            if (!za_inv) continue;
            try {
                return certified({x, za, *za_inv * (z_i + inner.part(b)), z}, {tag, tag, tag});
            } catch (const Error&) {
            }
        }
    }
    require(!first, "chain_deg5_inner2 needs w(z_i, z_j) = 2");
    throw Error(ErrorKind::CertificationFailed, "neither three-edge candidate certifies");
}

namespace {

Chain connect_oriented(const Elem& x, const Elem& z, const EdgeInfo& e) {
    using Builder = Chain (*)(const Elem&, const Elem&);
    struct Step {
        bool applies;
        Builder build;
    };
    const bool deg5 = x.degree() == 5;
    const bool two = e.weight_fwd() == 2;
    const bool inner2 = deg5 && two && [&] {
        const auto l = inner_label(x, z);
        return l && l->size() == 2;
    }();
    const Step steps[] = {
        {two && e.label_fwd.contains(0), &chain_zero_in_label},
        {two && e.weight_bwd() == 2, [](const Elem& a, const Elem& b) { return chain_twotwo(a, b); }},
        {two && e.weight_bwd() == 3, &chain_two_three},
        {deg5 && two && e.weight_bwd() == 4 && !e.label_fwd.contains(0), &chain_deg5_two_four},
        {inner2, &chain_deg5_inner2},
    };
    std::optional<Error> certification_failure;
    for (const auto& step : steps) {
        if (!step.applies) continue;
        try {
            return step.build(x, z);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::CertificationFailed && !certification_failure) certification_failure = err;
        }
    }
    if (certification_failure) throw *certification_failure;
    throw Error(ErrorKind::NotCovered, "no construction applies to labels l(x, z) = " +
                                           e.label_fwd.to_string() + ", l(z, x) = " + e.label_bwd.to_string());
}

}  // namespace

Chain connect(const Elem& x, const Elem& z) {
    if (!is_kummer(x) || !is_kummer(z)) throw Error(ErrorKind::NotKummerBase, "connect needs Kummer endpoints");
    const EdgeInfo e = edge(x, z);
    if (e.weight_fwd() == 1) return certified({x, z}, {"direct"});
    if (e.weight_fwd() != 2 && e.weight_bwd() == 2) {
        return reversed(connect_oriented(z, x, EdgeInfo{e.label_bwd, e.label_fwd}));
    }
    return connect_oriented(x, z, e);
}

std::optional<Chain> search_chain(const Elem& x, const Elem& z, std::size_t budget) {
    if (commutation_exponent(x, z)) return certified({x, z}, {"search"});

    std::vector<Elem> pool;
    auto add = [&](const Elem& u) {
        if (pool.size() >= budget || u.is_zero() || u.is_scalar()) return;
        if (std::find(pool.begin(), pool.end(), u) != pool.end()) return;
        if (u == x || u == z || !is_kummer(u)) return;
        pool.push_back(u);
    };
    const std::uint32_t p = x.degree();
    std::vector<Elem> comps;
    for (const auto& d : {decompose(x, z), decompose(z, x)}) {
        for (const auto& part : d.parts) {
            if (!part.is_zero()) comps.push_back(part);
        }
    }
    for (std::uint32_t k = 2; k < p; ++k) {
        add(x.pow(k));
        add(z.pow(k));
    }
    for (const auto& c : comps) add(c);
    std::vector<std::optional<Elem>> inverses;
    for (const auto& c : comps) inverses.push_back(unit_inverse(c));
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = 0; b < comps.size(); ++b) {
            if (a == b) continue;
            add(comps[a] * comps[b]);
            if (inverses[b]) add(comps[a] * *inverses[b]);
        }
    }
    for (const auto& c : comps) {
        for (std::uint32_t m = 1; m < p; ++m) {
            add(c * z.pow(m));
            add(c * x.pow(m));
        }
    }

    // Nodes: 0 = x, 1..n = pool, n+1 = z.
    std::vector<const Elem*> nodes{&x};
    for (const auto& u : pool) nodes.push_back(&u);
    nodes.push_back(&z);
    const std::size_t target = nodes.size() - 1;
    std::vector<std::optional<std::size_t>> parent(nodes.size());
    std::vector<std::uint32_t> via(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    std::deque<std::size_t> frontier{0};
    seen[0] = true;
    while (!frontier.empty() && !seen[target]) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t next = 1; next < nodes.size(); ++next) {
            if (seen[next]) continue;
            if (const auto w = commutation_exponent(*nodes[cur], *nodes[next])) {
                seen[next] = true;
                parent[next] = cur;
                via[next] = *w;
                frontier.push_back(next);
            }
        }
    }
    if (!seen[target]) return std::nullopt;
    std::vector<std::size_t> path{target};
    while (parent[path.back()]) path.push_back(*parent[path.back()]);
    std::reverse(path.begin(), path.end());
    Chain c;
    for (std::size_t t = 0; t < path.size(); ++t) {
        c.nodes.push_back(*nodes[path[t]]);
        if (t > 0) {
            c.certs.push_back(via[path[t]]);
            c.provenance.emplace_back("search");
        }
    }
    return c;
}

}  // namespace kummerlab
