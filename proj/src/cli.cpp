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

#include "kummerlab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kummerlab/chains.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/expr.hpp"
#include "kummerlab/kummer.hpp"

namespace kummerlab::cli {

namespace {

std::string_view verb_name(Verb v) {
    switch (v) {
        case Verb::Check: return "check";
        case Verb::Decompose: return "decompose";
        case Verb::Label: return "label";
        case Verb::Chain: return "chain";
        case Verb::Suite: return "suite";
        case Verb::All: return "all";
    }
    return "?";
}

Json elem_json(const Elem& e) {
    Json j;
    j["expr"] = print_elem(e);
    j["grid"] = grid_json(e);
    return j;
}

Json labels_json(const Elem& x, const Elem& z) {
    const EdgeInfo e = edge(x, z);
    Json j;
    j["label_xz"] = e.label_fwd.elements();
    j["label_zx"] = e.label_bwd.elements();
    j["weight_xz"] = e.weight_fwd();
    j["weight_zx"] = e.weight_bwd();
    return j;
}

Json chain_json(const Chain& c) {
    Json j;
    j["edges"] = c.edges();
    Json nodes = Json::array();
    for (const auto& n : c.nodes) nodes.push_back(elem_json(n));
    j["nodes"] = std::move(nodes);
    j["certs"] = c.certs;
    j["provenance"] = c.provenance;
    j["verified"] = verify_chain(c);
    return j;
}

void print_text(const Json& doc, std::ostream& out) {
    const Json& a = doc["algebra"];
    out << "kummerlab " << doc["version"].get<std::string>() << "  p=" << a["p"] << " q=" << a["q"]
        << " alpha=" << a["alpha"] << " beta=" << a["beta"] << " rho=" << a["rho"] << "\n";
    const Json& r = doc["result"];
    if (!r.is_null()) {
        for (const auto& [k, v] : r.items()) {
            if (k == "nodes" || k == "parts") {
                for (const auto& item : v) {
                    out << "  " << k << ": ";
                    if (item.contains("index")) out << "[" << item["index"] << "] ";
                    out << item["expr"].get<std::string>() << "\n";
                }
            } else if (v.is_object() && v.contains("expr")) {
                out << "  " << k << ": " << v["expr"].get<std::string>() << "\n";
            } else {
                out << "  " << k << ": " << v.dump() << "\n";
            }
        }
    }
    for (const auto& rep : doc["reports"]) {
        out << rep["suite"].get<std::string>() << ": " << rep["status"].get<std::string>();
        if (rep["status"] == "skipped") {
            out << " (" << rep["skip_reason"].get<std::string>() << ")\n";
            continue;
        }
        out << "  " << rep["passed"] << "/" << rep["trials"] << " passed, " << rep["discarded"] << " discarded\n";
        for (const auto& [k, v] : rep["notes"].items()) out << "    " << k << " = " << v.dump() << "\n";
        for (const auto& ce : rep["counterexamples"]) {
            out << "    counterexample trial " << ce["trial"] << ": " << ce.value("reason", "") << "\n";
        }
    }
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
    Json doc;
    doc["tool"] = "kummerlab";
    doc["version"] = KUMMERLAB_VERSION;
    AlgebraPtr alg;
    try {
        alg = Algebra::create(cmd.params);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    doc["algebra"] = params_json(alg->params());
    doc["command"] = verb_name(cmd.verb);
    doc["result"] = nullptr;
    doc["reports"] = Json::array();

    int code = kExitOk;
    try {
        auto elem = [&](const std::string& src, const char* flag) {
            if (src.empty()) throw CLI::ValidationError(std::string(flag) + " is required");
            return parse_elem(src, alg);
        };
        switch (cmd.verb) {
            case Verb::Check: {
                const Elem z = elem(cmd.z, "--z");
                const Elem zp = z.pow(z.degree());
                Json r;
                r["kummer"] = is_kummer(z);
                r["z_pow_p"] = elem_json(zp);
                r["z_pow_p_scalar"] = zp.is_scalar() ? Json(zp.scalar_part().value) : Json(nullptr);
                doc["result"] = std::move(r);
                break;
            }
            case Verb::Decompose: {
                const Elem x = elem(cmd.x, "--x");
                const Elem z = elem(cmd.z, "--z");
                const Decomposition d = decompose(x, z);
                Json r;
                r["label"] = d.label.elements();
                r["weight"] = d.weight();
                Json parts = Json::array();
                for (auto i : d.label.elements()) {
                    Json pj = elem_json(d.part(i));
                    pj["index"] = i;
                    parts.push_back(std::move(pj));
                }
                r["parts"] = std::move(parts);
                doc["result"] = std::move(r);
                break;
            }
            case Verb::Label: {
                const Elem x = elem(cmd.x, "--x");
                const Elem z = elem(cmd.z, "--z");
                if (!is_kummer(x) || !is_kummer(z)) {
                    throw Error(ErrorKind::NotKummerBase, "labels are defined for Kummer elements only");
                }
                doc["result"] = labels_json(x, z);
                break;
            }
            case Verb::Chain: {
                const Elem x = elem(cmd.x, "--x");
                const Elem z = elem(cmd.z, "--z");
                const Chain c = connect(x, z);
                doc["result"] = chain_json(c);
                if (!doc["result"]["verified"].get<bool>()) code = kExitFailure;
                break;
            }
            case Verb::Suite:
            case Verb::All: {
                std::vector<SuiteReport> reports;
                if (cmd.verb == Verb::All || cmd.suite == "all") {
                    for (auto name : suite_names()) {
                        reports.push_back(run_suite(SuiteSpec{std::string(name), cmd.params, cmd.trials, cmd.seed}));
                    }
                } else {
                    reports.push_back(run_suite(SuiteSpec{cmd.suite, cmd.params, cmd.trials, cmd.seed}));
                }
                for (const auto& rep : reports) {
                    if (rep.status == SuiteStatus::Failed) code = kExitFailure;
                    doc["reports"].push_back(to_json(rep));
                }
                break;
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownSuite) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        doc["result"] = Json{{"error", to_string(e.kind())}, {"message", e.what()}};
        code = kExitFailure;
    }

    if (cmd.format == Format::Json) {
        out << doc.dump(2) << "\n";
    } else {
        print_text(doc, out);
    }
    return code;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbol algebras of prime degree, Kummer elements and weight-1 chains", "kummerlab"};
    app.fallthrough();
    app.require_subcommand(1);

    Command cmd;
    std::int64_t rho = 0;
    std::string format = "json";
    if (const char* env = std::getenv("KUMMERLAB_SEED")) {
        try {
            cmd.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: KUMMERLAB_SEED must be a non-negative integer\n";
            return kExitUsage;
        }
    }
    std::uint64_t trials = 0;

    app.add_option("--p", cmd.params.p, "Degree (prime)")->capture_default_str();
    app.add_option("--q", cmd.params.q, "Field size (prime, q = 1 mod p)")->capture_default_str();
    app.add_option("--alpha", cmd.params.alpha, "x^p")->capture_default_str();
    app.add_option("--beta", cmd.params.beta, "y^p")->capture_default_str();
    auto* rho_opt = app.add_option("--rho", rho, "Primitive p-th root of unity (default: smallest)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cmd.seed, "Base seed (default: $KUMMERLAB_SEED or 0)");
    auto* trials_opt = app.add_option("--trials", trials, "Trial count override")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Is z a Kummer element; z^p");
    check->add_option("--z", cmd.z)->required();
    auto* decomp = app.add_subcommand("decompose", "Components of z relative to x");
    decomp->add_option("--x", cmd.x)->required();
    decomp->add_option("--z", cmd.z)->required();
    auto* label = app.add_subcommand("label", "l(x, z) and l(z, x)");
    label->add_option("--x", cmd.x)->required();
    label->add_option("--z", cmd.z)->required();
    auto* chain = app.add_subcommand("chain", "Certified weight-1 chain from x to z");
    chain->add_option("--x", cmd.x)->required();
    chain->add_option("--z", cmd.z)->required();
    auto* suite = app.add_subcommand("suite", "Run one suite, or 'all'");
    suite->add_option("name", cmd.suite)->required();
    auto* all = app.add_subcommand("all", "Run every suite");

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (*rho_opt) cmd.params.rho = rho;
    if (*trials_opt) cmd.trials = trials;
    cmd.format = format == "text" ? Format::Text : Format::Json;
    if (*check) cmd.verb = Verb::Check;
    if (*decomp) cmd.verb = Verb::Decompose;
    if (*label) cmd.verb = Verb::Label;
    if (*chain) cmd.verb = Verb::Chain;
    if (*suite) cmd.verb = Verb::Suite;
    if (*all) cmd.verb = Verb::All;
    if (cmd.verb == Verb::Suite && cmd.suite != "all" && !is_known_suite(cmd.suite)) {
        err << "error: unknown suite '" << cmd.suite << "'\n";
        return kExitUsage;
    }
    return execute(cmd, out, err);
}

}  // namespace kummerlab::cli
