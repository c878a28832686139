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

#include "kummerlab/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>
#include <utility>

#include "kummerlab/chains.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/kummer.hpp"

namespace kummerlab {

namespace {

struct TrialResult {
    bool pass = true;
    /// Degenerate case (split-algebra artifact): neither a pass nor a failure.
    bool degenerate = false;
    std::uint64_t discarded = 0;
    Json counterexample;
    std::map<std::string, std::int64_t> tally;

    void fail(Json why) {
        if (pass) counterexample = std::move(why);
        pass = false;
    }
    void count(const std::string& key, std::int64_t n = 1) { tally[key] += n; }
};

struct TrialContext {
    const SuiteSpec& spec;
    const AlgebraPtr& alg;
    std::uint64_t index;
    Rng& rng;
};

using TrialFn = void (*)(TrialContext&, TrialResult&);
using CaseCount = std::uint64_t (*)(const SuiteSpec&, const Algebra&);

struct SuiteDef {
    std::string_view name;
    bool asserting;
    std::uint64_t default_trials;
    std::uint32_t min_degree;
    std::uint32_t only_degree;  // 0: any degree >= min_degree
    CaseCount cases;            // overrides the trial count when set
    TrialFn run;
};

Json pair_json(std::string_view reason, const Elem& x, const Elem& z) {
    Json j;
    j["reason"] = reason;
    j["x"] = grid_json(x);
    j["z"] = grid_json(z);
    return j;
}

SampledPair draw(TrialContext& ctx, TrialResult& res, const PairProfile& profile) {
    SampledPair s = sample_pair(ctx.alg, ctx.rng, profile);
    res.discarded += s.discarded;
    return s;
}

/// Resamples weight-2 pairs until every component of z relative to x is invertible.
/// A component with zero p-th power only occurs because the algebra is split; a
/// component whose p-th power is not central is returned so the caller's check fails on it.
SampledPair draw_weight2(TrialContext& ctx, TrialResult& res, const PairProfile& profile) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        SampledPair s = draw(ctx, res, profile);
        bool nilpotent = false;
        const Decomposition d = decompose(s.x, s.z);
        for (auto i : d.label.elements()) {
            const Elem power = d.part(i).pow(s.x.degree());
            if (!power.is_scalar()) return s;
            nilpotent = nilpotent || power.is_zero();
        }
        if (!nilpotent) return s;
        ++res.discarded;
        res.count("nilpotent_component_resamples");
    }
    throw Error(ErrorKind::Exhausted, "no weight-2 pair with invertible components");
}

PairProfile weight2_profile(std::uint32_t family_percent = 15) {
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.family_percent = family_percent;
    return pr;
}

/// Draws pairs and runs a chain builder, resampling when an intermediate is a zero divisor.
template <typename Build>
void run_chain_trial(TrialContext& ctx, TrialResult& res, const PairProfile& profile, std::size_t max_edges,
                     Build build) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        const SampledPair s = draw(ctx, res, profile);
        try {
            const Chain c = build(s.x, s.z);
            if (!verify_chain(c)) return res.fail(pair_json("chain does not verify", s.x, s.z));
            if (c.nodes.front() != s.x || c.nodes.back() != s.z) {
                return res.fail(pair_json("chain endpoints differ from the pair", s.x, s.z));
            }
            if (c.edges() > max_edges) return res.fail(pair_json("chain too long", s.x, s.z));
            res.count("edges_" + std::to_string(c.edges()));
            for (const auto& tag : c.provenance) res.count("edge:" + tag);
            return;
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::NotInvertible) {
                ++res.discarded;
                continue;
            }
            Json j = pair_json(err.what(), s.x, s.z);
            j["error"] = to_string(err.kind());
            return res.fail(std::move(j));
        }
    }
    res.fail(Json{{"reason", "every draw hit a zero divisor"}});
}

// ---------------------------------------------------------------------------
// Suites

void decomposition_roundtrip(TrialContext& ctx, TrialResult& res) {
    const Elem x = sample_kummer(ctx.alg, ctx.rng);
    const Elem z = random_elem(ctx.alg, ctx.rng);
    const Decomposition d = decompose(x, z);
    Elem sum = Elem::zero(ctx.alg);
    for (std::uint32_t i = 0; i < x.degree(); ++i) {
        const Elem& part = d.part(i);
        sum += part;
        if (!(part * x == ctx.alg->rho_pow(i) * (x * part))) {
            return res.fail(pair_json("component " + std::to_string(i) + " does not rho^i-commute", x, z));
        }
        const Decomposition again = decompose(x, part);
        for (std::uint32_t k = 0; k < x.degree(); ++k) {
            const bool ok = k == i ? again.part(k) == part : again.part(k).is_zero();
            if (!ok) return res.fail(pair_json("projection is not idempotent", x, z));
        }
        if (d.label.contains(i) == part.is_zero()) return res.fail(pair_json("label mismatch", x, z));
    }
    if (!(sum == z)) return res.fail(pair_json("components do not sum to z", x, z));
    res.count("weight_" + std::to_string(d.weight()));
}

void weight1_symmetry(TrialContext& ctx, TrialResult& res) {
    Elem x = Elem::zero(ctx.alg);
    Elem z = Elem::zero(ctx.alg);
    switch (ctx.index % 3) {
        case 0: {
            PairProfile pr;
            pr.weight_fwd = 1;
            auto s = draw(ctx, res, pr);
            x = std::move(s.x);
            z = std::move(s.z);
            break;
        }
        case 1: {
            auto s = draw(ctx, res, PairProfile{});
            x = std::move(s.x);
            z = std::move(s.z);
            break;
        }
        default:
            x = sample_kummer(ctx.alg, ctx.rng);
            z = sample_kummer(ctx.alg, ctx.rng);
    }
    const EdgeInfo e = edge(x, z);
    if ((e.weight_fwd() == 1) != (e.weight_bwd() == 1)) {
        return res.fail(pair_json("weight-1 edge is not symmetric", x, z));
    }
    if (e.weight_fwd() == 1) res.count("weight1_pairs");
}

void example_p3(TrialContext& ctx, TrialResult& res) {
    auto [x, y] = generators(ctx.alg);
    Elem z = y + x.pow(2) * y.pow(2);
    if (ctx.index > 0) {
        const auto [g, g_inv] = random_invertible(ctx.alg, ctx.rng);
        x = g * x * g_inv;
        z = g * z * g_inv;
    }
    if (!is_kummer(z)) return res.fail(pair_json("y + x^2 y^2 is not Kummer", x, z));
    const EdgeInfo e = edge(x, z);
    if (e.label_fwd != Label(3, {1, 2}) || e.label_bwd != Label(3, {0, 1, 2})) {
        Json j = pair_json("labels differ from {1,2} / {0,1,2}", x, z);
        j["label_fwd"] = e.label_fwd.to_string();
        j["label_bwd"] = e.label_bwd.to_string();
        return res.fail(std::move(j));
    }
}

constexpr std::array<std::uint32_t, 6> kLemma3Primes{2, 3, 5, 7, 11, 13};

std::uint64_t lemma3_cases(const SuiteSpec&, const Algebra&) {
    std::uint64_t n = 0;
    for (auto p : kLemma3Primes) n += std::uint64_t{p} * (p - 1) * (p >= 2 ? p - 2 : 0);
    return n;
}

void lemma3(TrialContext& ctx, TrialResult& res) {
    std::uint64_t idx = ctx.index;
    for (auto p : kLemma3Primes) {
        const std::uint64_t block = std::uint64_t{p} * (p - 1) * (p - 2);
        if (idx >= block) {
            idx -= block;
            continue;
        }
        // idx enumerates ordered triples of distinct residues.
        const std::uint32_t i = static_cast<std::uint32_t>(idx / ((p - 1) * (p - 2)));
        std::uint64_t rest = idx % ((p - 1) * (p - 2));
        std::uint32_t j = static_cast<std::uint32_t>(rest / (p - 2));
        std::uint32_t k = static_cast<std::uint32_t>(rest % (p - 2));
        if (j >= i) ++j;
        for (std::uint32_t skip : {std::min(i, j), std::max(i, j)}) {
            if (k >= skip) ++k;
        }
        const bool both = reduce_exponent(2 * std::int64_t{i} - j - k, p) == 0 &&
                          reduce_exponent(2 * std::int64_t{j} - i - k, p) == 0;
        if (both != (p == 3)) {
            return res.fail(Json{{"reason", "lemma fails"}, {"p", p}, {"i", i}, {"j", j}, {"k", k}});
        }
        res.count("p" + std::to_string(p));
        return;
    }
}

void weight22(TrialContext& ctx, TrialResult& res) {
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.weight_bwd = 2;
    const SampledPair s = draw(ctx, res, pr);
    const EdgeInfo& e = s.edge;
    if (e.label_bwd != e.label_fwd.negated()) return res.fail(pair_json("l(z, x) != -l(x, z)", s.x, s.z));
    const auto ij = e.label_bwd.elements();
    const std::int64_t i = ij[0];
    const std::int64_t j = ij[1];
    const Decomposition dx = decompose(s.z, s.x);
    const Decomposition dz = decompose(s.x, s.z);
    const Elem& xi = dx.part(i);
    const Elem& xj = dx.part(j);
    if (!(xi * xj == ctx.alg->rho_pow(j - i) * (xj * xi))) {
        return res.fail(pair_json("x_i x_j != rho^{j-i} x_j x_i", s.x, s.z));
    }
    const Elem& zi = dz.part(-i);
    const Elem& zj = dz.part(-j);
    if (!(zi * zj == ctx.alg->rho_pow(i - j) * (zj * zi))) {
        return res.fail(pair_json("z_{-i} z_{-j} != rho^{i-j} z_{-j} z_{-i}", s.x, s.z));
    }
    res.count(e.label_fwd.contains(0) ? "zero_in_label" : "zero_free");
}

void split2cent(TrialContext& ctx, TrialResult& res) {
    const SampledPair s = draw_weight2(ctx, res, weight2_profile());
    const Decomposition d = decompose(s.x, s.z);
    for (auto i : d.label.elements()) {
        if (!is_kummer(d.part(i))) {
            return res.fail(pair_json("component " + std::to_string(i) + " is not Kummer", s.x, s.z));
        }
    }
    res.count(d.label.contains(0) ? "zero_in_label" : "zero_free");
}

void pcent_diagonal(TrialContext& ctx, TrialResult& res) {
    const SampledPair s = draw_weight2(ctx, res, weight2_profile());
    const Decomposition d = decompose(s.x, s.z);
    const auto ij = d.label.elements();
    const Elem& zi = d.part(ij[0]);
    const Elem& zj = d.part(ij[1]);
    const std::uint32_t p = s.x.degree();
    const Field& f = ctx.alg->field();
    const Elem zi_p = zi.pow(p);
    const Elem zj_p = zj.pow(p);
    for (int t = 0; t < 20; ++t) {
        const Scalar u{static_cast<std::uint32_t>(ctx.rng.uniform(f.modulus()))};
        const Scalar v{static_cast<std::uint32_t>(ctx.rng.uniform(f.modulus()))};
        const Elem form = exponentiation_form(s.x, s.z, u, v);
        if (!(form == f.pow(u, p) * zi_p + f.pow(v, p) * zj_p)) {
            Json j = pair_json("exponentiation form is not diagonal", s.x, s.z);
            j["u"] = u.value;
            j["v"] = v.value;
            return res.fail(std::move(j));
        }
    }
    for (std::uint32_t k = 1; k < p; ++k) {
        const std::array<StarFactor, 2> letters{StarFactor{zi, k}, StarFactor{zj, p - k}};
        if (!star_product(letters).is_zero()) {
            return res.fail(pair_json("z_i^k * z_j^{p-k} != 0 for k = " + std::to_string(k), s.x, s.z));
        }
    }
}

void nozero(TrialContext& ctx, TrialResult& res) {
    const SampledPair s = draw_weight2(ctx, res, weight2_profile());
    const auto inner = inner_label(s.x, s.z);
    if (!inner) return res.fail(pair_json("component z_i is not Kummer", s.x, s.z));
    if (inner->contains(0)) return res.fail(pair_json("0 in l(z_i, z_j)", s.x, s.z));
    res.count("inner_weight_" + std::to_string(inner->size()));
}

void prop2in2(TrialContext& ctx, TrialResult& res) {
    const SampledPair s = draw_weight2(ctx, res, weight2_profile(40));
    const auto inner = inner_label(s.x, s.z);
    if (!inner) return res.fail(pair_json("component z_i is not Kummer", s.x, s.z));
    res.count("inner_weight_" + std::to_string(inner->size()));
    if (s.source.starts_with("family")) res.count("family_instances");
    if (inner->size() == 2) {
        const auto mn = inner->elements();
        if (reduce_exponent(std::int64_t{mn[0]} + mn[1], 5) == 0) {
            return res.fail(pair_json("inner label {m, n} with m = -n", s.x, s.z));
        }
    }
}

void no_weight3(TrialContext& ctx, TrialResult& res) {
    const SampledPair s = draw_weight2(ctx, res, weight2_profile(40));
    const auto inner = inner_label(s.x, s.z);
    if (!inner) return res.fail(pair_json("component z_i is not Kummer", s.x, s.z));
    res.count("inner_weight_" + std::to_string(inner->size()));
    if (s.source.starts_with("family")) res.count("family_instances");
    if (inner->size() == 3) return res.fail(pair_json("w(z_i, z_j) = 3", s.x, s.z));
}

void twotwo_chain(TrialContext& ctx, TrialResult& res) {
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.weight_bwd = 2;
    run_chain_trial(ctx, res, pr, 2, [&](const Elem& x, const Elem& z) {
        // The other index choice is recorded, not asserted.
        const bool zero = decompose(z, x).label.contains(0);
        bool larger_ok = false;
        try {
            larger_ok = verify_chain(chain_twotwo(x, z, CommutatorIndex::Larger));
        } catch (const Error&) {
        }
        res.count(std::string(zero ? "zero_in_bwd" : "zero_free") + (larger_ok ? "/larger_index_ok" : "/larger_index_fails"));
        return chain_twotwo(x, z);
    });
}

void nothree_chain(TrialContext& ctx, TrialResult& res) {
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.weight_bwd = 3;
    run_chain_trial(ctx, res, pr, 2, [&](const Elem& x, const Elem& z) {
        const EdgeInfo e = edge(x, z);
        const Decomposition dx = decompose(z, x);
        const Label opposite = e.label_fwd.negated();
        if (opposite.subset_of(e.label_bwd)) {
            const auto ij = opposite.elements();
            std::uint32_t k = 0;
            for (auto idx : e.label_bwd.elements()) {
                if (!opposite.contains(idx)) k = idx;
            }
            const std::int64_t i = ij[0];
            const std::int64_t j = ij[1];
            const AlgebraPtr& alg = x.algebra();
            const Field& f = alg->field();
            const std::array<Elem, 3> args{z, z, x};
            const std::array<std::int64_t, 2> ds{i, j};
            const Elem lhs = multi_commutator(args, ds);
            const Elem zzxk = z * z * dx.part(k);
            const Scalar ki = f.sub(alg->rho_pow(k), alg->rho_pow(i));
            const Scalar corrected = f.mul(ki, f.sub(alg->rho_pow(k), alg->rho_pow(j)));
            const Scalar literal = f.mul(ki, f.sub(alg->rho_pow(k), f.mul(alg->rho(), f.from_int(i))));
            res.count(lhs == corrected * zzxk ? "identity_corrected_holds" : "identity_corrected_fails");
            res.count(lhs == literal * zzxk ? "identity_literal_holds" : "identity_literal_fails");
            const Elem& xk = dx.part(k);
            const bool literal_node = is_kummer(xk) && commutation_exponent(x, xk) && commutation_exponent(xk, z);
            res.count(literal_node ? "component_x_k_certifies" : "component_x_k_fails");
            res.count(reduce_exponent(-i - j, x.degree()) == 0 && k == 0 ? "k_zero_case" : "k_generic_case");
        }
        return chain_two_three(x, z);
    });
}

void inner2_chain(TrialContext& ctx, TrialResult& res) {
    PairProfile pr = weight2_profile(100);
    pr.inner_weight = 2;
    run_chain_trial(ctx, res, pr, 3, [](const Elem& x, const Elem& z) { return chain_deg5_inner2(x, z); });
}

void twonozero_chain(TrialContext& ctx, TrialResult& res) {
    PairProfile pr;
    pr.weight_fwd = 2;
    pr.zero_in_bwd = false;
    pr.weight_bwd = static_cast<std::uint32_t>(2 + ctx.index % 3);
    run_chain_trial(ctx, res, pr, 5, [&](const Elem& x, const Elem& z) {
        res.count("bwd_weight_" + std::to_string(*pr.weight_bwd));
        return connect(x, z);
    });
    if (ctx.index % 10 != 0) return;

    // Exploratory, never asserted: the variant read as 0 not in l(x, z) with 0 in l(z, x),
    // and pairs outside both readings.
    Rng explore(Rng::derive(ctx.spec.seed, "twonozero_chain/explore", ctx.index));
    TrialContext side{ctx.spec, ctx.alg, ctx.index, explore};
    TrialResult scratch;
    PairProfile variant;
    variant.weight_fwd = 2;
    variant.zero_in_fwd = false;
    variant.zero_in_bwd = true;
    variant.weight_bwd = 4;
    PairProfile outside;
    outside.weight_fwd = 2;
    outside.zero_in_bwd = true;
    outside.weight_bwd = 5;
    for (const auto& [tag, profile] : {std::pair{"variant_reading", variant}, std::pair{"outside", outside}}) {
        try {
            const SampledPair s = draw(side, scratch, profile);
            bool ok = false;
            try {
                ok = verify_chain(connect(s.x, s.z));
            } catch (const Error&) {
            }
            res.count(std::string(tag) + (ok ? "/connect_ok" : "/connect_fails"));
            if (!ok) {
                const auto found = search_chain(s.x, s.z, 200);
                res.count(std::string(tag) + (found ? "/search_found" : "/search_not_found"));
            }
        } catch (const Error&) {
            res.count(std::string(tag) + "/not_sampled");
        }
    }
}

void annihilation(TrialContext& ctx, TrialResult& res) {
    Elem x = Elem::zero(ctx.alg);
    Elem z = Elem::zero(ctx.alg);
    if (ctx.index % 2 == 0) {
        auto s = draw(ctx, res, PairProfile{});
        x = std::move(s.x);
        z = std::move(s.z);
    } else {
        x = sample_kummer(ctx.alg, ctx.rng);
        z = random_elem(ctx.alg, ctx.rng);
    }
    const Label l = decompose(x, z).label;
    if (!component_filter(x, z, l).is_zero()) return res.fail(pair_json("filter over l(x, z) is nonzero", x, z));
    if (!l.empty()) {
        Label all_but_one(x.degree());
        const auto elems = l.elements();
        for (std::size_t t = 1; t < elems.size(); ++t) all_but_one.insert(elems[t]);
        if (component_filter(x, z, all_but_one).is_zero()) {
            return res.fail(pair_json("filter removed a component outside the kill set", x, z));
        }
    }
}

enum class FamilyConstant { Quoted, Exact };

std::uint64_t family_cases(const SuiteSpec& spec, const Algebra& alg) {
    const std::uint64_t q = alg.field().modulus();
    return q * q + spec.trials.value_or(500) + 2;
}

template <FamilyConstant kConstant>
void remark_family(TrialContext& ctx, TrialResult& res) {
    const AlgebraPtr& alg = ctx.alg;
    const Field& f = alg->field();
    const std::uint64_t q = f.modulus();
    const std::uint64_t random_cases = ctx.spec.trials.value_or(500);
    const Scalar c = kConstant == FamilyConstant::Quoted ? family_constant_quoted(alg) : family_constant_exact(alg);
    auto coeff_json = [](const std::array<Scalar, 4>& a) {
        return Json::array({a[0].value, a[1].value, a[2].value, a[3].value});
    };

    // z^5 is zero for some members because the algebra is split; those are degenerate, not failures.
    auto degenerate = [&](const Elem& power) {
        res.degenerate = true;
        res.count(power.is_zero() ? "z5_zero" : "z5_noncentral");
    };

    if (ctx.index < q * q) {
        const std::array<Scalar, 4> a{Scalar{static_cast<std::uint32_t>(ctx.index / q)},
                                      Scalar{static_cast<std::uint32_t>(ctx.index % q)}, Scalar{0}, Scalar{0}};
        const Elem z = family_deg5(alg, a);
        const Elem power = z.pow(5);
        const auto [x, y] = generators(alg);
        if (!power.is_scalar()) {
            return res.fail(Json{{"reason", "a_3 = a_4 = 0 member has non-central z^5"}, {"a", coeff_json(a)}, {"z", grid_json(z)}});
        }
        if (!decompose(x, z).label.subset_of(Label(5, {1, 4}))) {
            return res.fail(Json{{"reason", "l(x, z) not within {1, 4}"}, {"a", coeff_json(a)}});
        }
        if (power.is_zero()) return degenerate(power);
        res.count("exhaustive_kummer");
        return;
    }

    if (ctx.index < q * q + random_cases) {
        std::array<Scalar, 4> a{};
        for (auto& v : a) v = Scalar{static_cast<std::uint32_t>(ctx.rng.uniform(q))};
        if (ctx.rng.coin() && !a[1].is_zero()) a[2] = f.div(f.mul(c, f.mul(a[0], a[3])), a[1]);
        const bool relation = f.mul(a[1], a[2]) == f.mul(c, f.mul(a[0], a[3]));
        const Elem z = family_deg5(alg, a);
        const Elem power = z.pow(5);
        res.count(relation ? "relation_holds" : "relation_fails");
        if (kConstant == FamilyConstant::Exact) {
            // Constant-term variant: is y + (a_0 + ...) y^{-1} ever Kummer with a_0 != 0?
            const Scalar a0{static_cast<std::uint32_t>(1 + ctx.rng.uniform(q - 1))};
            res.count(is_kummer(family_deg5(alg, a0, a)) ? "a0_nonzero_kummer" : "a0_nonzero_not_kummer");
        }
        if (power.is_zero()) return degenerate(power);
        // z^5 != 0 here, so Kummer is the same as z^5 central.
        const bool kummer = power.is_scalar();
        if (kummer != relation) {
            return res.fail(Json{{"reason", kummer ? "Kummer but the relation fails" : "relation holds but not Kummer"},
                                 {"a", coeff_json(a)},
                                 {"z", grid_json(z)}});
        }
        return;
    }

    // Named instances: inner weight 2 with a_3 = a_4 = 0, inner weight 4 with a_1 = a_3 = a_4 = 1.
    const bool first = ctx.index == q * q + random_cases;
    const std::array<Scalar, 4> a = first ? std::array<Scalar, 4>{Scalar{1}, Scalar{1}, Scalar{0}, Scalar{0}}
                                          : std::array<Scalar, 4>{Scalar{1}, c, Scalar{1}, Scalar{1}};
    const std::uint32_t expected_inner = first ? 2 : 4;
    const Elem z = family_deg5(alg, a);
    const auto [x, y] = generators(alg);
    if (!is_kummer(z)) {
        return res.fail(Json{{"reason", "named instance is not Kummer"}, {"a", coeff_json(a)}, {"z", grid_json(z)}});
    }
    const auto inner = inner_label(x, z);
    if (decompose(x, z).weight() != 2 || !inner || inner->size() != expected_inner) {
        return res.fail(Json{{"reason", "named instance has the wrong inner weight"},
                             {"a", coeff_json(a)},
                             {"inner_label", inner ? inner->to_string() : "none"}});
    }
}

void p3_closed_form(TrialContext& ctx, TrialResult& res) {
    const AlgebraPtr& alg = ctx.alg;
    const Field& f = alg->field();
    const auto [x, y] = generators(alg);
    const Elem z = y + x.pow(2) * y.pow(2);
    const Scalar a = alg->alpha();
    const Scalar b = alg->beta();
    const Scalar rho = alg->rho();
    const Elem u = x.pow(2) * y;
    const Decomposition d = decompose(z, x);

    auto which = [&](const Elem& e) -> std::int64_t {
        for (std::uint32_t i = 0; i < 3; ++i) {
            if (!d.part(i).is_zero() && d.part(i) == e) return i;
        }
        return -1;
    };

    // As displayed: c = -rho beta alpha - rho^2 alpha^{-1}, t = (rho^2 alpha^2 beta)^{-1}, x_1 without z.
    const Scalar c = f.sub(f.neg(f.mul(rho, f.mul(b, a))), f.mul(alg->rho_pow(2), f.inv(a)));
    const Scalar t = f.inv(f.mul(alg->rho_pow(2), f.mul(f.mul(a, a), b)));
    const Elem shown0 = c * z;
    const Elem shown1 = c * (-u);
    const Elem shown1_with_z = c * (-(u * z));
    const Elem shown2 = c * (-(t * (u * u * z)));
    const bool shown_sum = c * (z - u * z - t * (u * u * z)) == x;
    res.tally["displayed_constant"] = c.value;
    res.tally["displayed_sum_equals_x"] = shown_sum ? 1 : 0;
    res.tally["displayed_x0_component"] = which(shown0);
    res.tally["displayed_x1_component"] = which(shown1);
    res.tally["displayed_x1_with_z_component"] = which(shown1_with_z);
    res.tally["displayed_x2_component"] = which(shown2);

    // From z = (1 + u) y, u^3 = alpha^2 beta and u^{-1} y = rho^2 alpha^{-1} x:
    //   x = -rho alpha (1 + alpha^2 beta)^{-1} (z - u z - (alpha^2 beta)^{-1} u^2 z).
    const Scalar a2b = f.mul(f.mul(a, a), b);
    const Scalar denom = f.add(Scalar{1}, a2b);
    if (!denom.is_zero()) {
        const Scalar c2 = f.neg(f.div(f.mul(rho, a), denom));
        const Scalar t2 = f.inv(a2b);
        res.tally["derived_constant"] = c2.value;
        res.tally["derived_sum_equals_x"] = c2 * (z - u * z - t2 * (u * u * z)) == x ? 1 : 0;
        res.tally["derived_x0_component"] = which(c2 * z);
        res.tally["derived_x1_component"] = which(c2 * (-(u * z)));
        res.tally["derived_x2_component"] = which(c2 * (-(t2 * (u * u * z))));
    } else {
        res.tally["derived_constant"] = -1;
    }

    const bool holds = shown_sum && which(shown0) == 0 && which(shown1) == 1 && which(shown2) == 2;
    if (!holds) {
        Json j;
        j["reason"] = "displayed formulas do not reproduce the components of x";
        for (std::uint32_t i = 0; i < 3; ++i) j["component_" + std::to_string(i)] = grid_json(d.part(i));
        res.fail(std::move(j));
    }
}

constexpr std::array<SuiteDef, 18> kSuites{{
    {"decomposition_roundtrip", true, 500, 2, 0, nullptr, &decomposition_roundtrip},
    {"weight1_symmetry", true, 500, 2, 0, nullptr, &weight1_symmetry},
    {"example_p3", true, 20, 3, 3, nullptr, &example_p3},
    {"lemma3", true, 0, 2, 0, &lemma3_cases, &lemma3},
    {"weight22", true, 100, 3, 0, nullptr, &weight22},
    {"split2cent", true, 200, 3, 0, nullptr, &split2cent},
    {"pcent_diagonal", true, 200, 3, 0, nullptr, &pcent_diagonal},
    {"nozero", true, 200, 3, 0, nullptr, &nozero},
    {"prop2in2", true, 500, 5, 5, nullptr, &prop2in2},
    {"twotwo_chain", true, 100, 3, 0, nullptr, &twotwo_chain},
    {"nothree_chain", true, 100, 3, 0, nullptr, &nothree_chain},
    {"no_weight3", true, 500, 5, 5, nullptr, &no_weight3},
    {"inner2_chain", true, 100, 5, 5, nullptr, &inner2_chain},
    {"remark_family", true, 500, 5, 5, &family_cases, &remark_family<FamilyConstant::Quoted>},
    {"remark_family_exact", true, 500, 5, 5, &family_cases, &remark_family<FamilyConstant::Exact>},
    {"twonozero_chain", true, 100, 5, 5, nullptr, &twonozero_chain},
    {"annihilation", true, 500, 2, 0, nullptr, &annihilation},
    {"p3_closed_form", false, 1, 3, 3, nullptr, &p3_closed_form},
}};

constexpr auto kSuiteNames = [] {
    std::array<std::string_view, kSuites.size()> names{};
    for (std::size_t i = 0; i < kSuites.size(); ++i) names[i] = kSuites[i].name;
    return names;
}();

const SuiteDef& find_suite(std::string_view name) {
    for (const auto& s : kSuites) {
        if (s.name == name) return s;
    }
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(name) + "'");
}

TrialResult run_trial(const SuiteDef& def, const SuiteSpec& spec, const AlgebraPtr& alg, std::uint64_t index) {
    Rng rng(Rng::derive(spec.seed, def.name, index));
    TrialContext ctx{spec, alg, index, rng};
    TrialResult res;
    try {
        def.run(ctx, res);
    } catch (const Error& err) {
        res.fail(Json{{"reason", err.what()}, {"error", to_string(err.kind())}});
    }
    return res;
}

}  // namespace

std::string_view to_string(SuiteStatus status) noexcept {
    switch (status) {
        case SuiteStatus::Passed: return "passed";
        case SuiteStatus::Failed: return "failed";
        case SuiteStatus::Skipped: return "skipped";
        case SuiteStatus::Recorded: return "recorded";
    }
    return "unknown";
}

std::span<const std::string_view> suite_names() { return kSuiteNames; }

bool is_known_suite(std::string_view name) {
    return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

SuiteReport run_suite(const SuiteSpec& spec) {
    const SuiteDef& def = find_suite(spec.name);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.spec = spec;
    report.asserting = def.asserting;
    const AlgebraPtr alg = Algebra::create(spec.params);
    report.spec.params = alg->params();

    const std::uint32_t p = alg->degree();
    if (p < def.min_degree || (def.only_degree != 0 && p != def.only_degree)) {
        report.status = SuiteStatus::Skipped;
        report.skip_reason = def.only_degree != 0 ? "needs p = " + std::to_string(def.only_degree)
                                                  : "needs p >= " + std::to_string(def.min_degree);
        return report;
    }

    const std::uint64_t n = def.cases ? def.cases(spec, *alg) : spec.trials.value_or(def.default_trials);
    std::vector<TrialResult> results(n);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < n; i = next++) results[i] = run_trial(def, spec, alg, i);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    if (threads == 1 || n < 8) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, std::int64_t> tally;
    report.trials = n;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto& r = results[i];
        report.discarded += r.discarded;
        for (const auto& [k, v] : r.tally) tally[k] += v;
        if (r.pass && r.degenerate) {
            ++report.discarded;
        } else if (r.pass) {
            ++report.passed;
        } else {
            ++report.failed;
            if (report.counterexamples.size() < SuiteReport::kMaxCounterexamples) {
                Json ce;
                ce["trial"] = i;
                for (auto& [k, v] : r.counterexample.items()) ce[k] = v;
                report.counterexamples.push_back(std::move(ce));
            }
        }
    }
    for (const auto& [k, v] : tally) report.notes[k] = v;
    if (!def.asserting) {
        report.status = SuiteStatus::Recorded;
    } else {
        report.status = report.failed == 0 ? SuiteStatus::Passed : SuiteStatus::Failed;
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SuiteReport> run_all(const AlgebraParams& params, std::uint64_t seed) {
    std::vector<SuiteReport> out;
    for (const auto& def : kSuites) out.push_back(run_suite(SuiteSpec{std::string(def.name), params, std::nullopt, seed}));
    return out;
}

bool replay_trial(const SuiteSpec& spec, std::uint64_t trial) {
    const SuiteDef& def = find_suite(spec.name);
    const AlgebraPtr alg = Algebra::create(spec.params);
    return run_trial(def, spec, alg, trial).pass;
}

Json grid_json(const Elem& e) {
    Json rows = Json::array();
    for (const auto& row : e.grid()) rows.push_back(row);
    return rows;
}

Json params_json(const AlgebraParams& params) {
    Json j;
    j["p"] = params.p;
    j["q"] = params.q;
    j["alpha"] = params.alpha;
    j["beta"] = params.beta;
    j["rho"] = params.rho ? Json(*params.rho) : Json(nullptr);
    return j;
}

Json to_json(const SuiteReport& report, bool include_timing) {
    Json j;
    j["suite"] = report.spec.name;
    j["asserting"] = report.asserting;
    j["status"] = to_string(report.status);
    j["params"] = params_json(report.spec.params);
    j["seed"] = report.spec.seed;
    j["requested_trials"] = report.spec.trials ? Json(*report.spec.trials) : Json(nullptr);
    j["trials"] = report.trials;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["discarded"] = report.discarded;
    if (!report.skip_reason.empty()) j["skip_reason"] = report.skip_reason;
    j["notes"] = report.notes;
    j["counterexamples"] = report.counterexamples;
    if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
    return j;
}

}  // namespace kummerlab
