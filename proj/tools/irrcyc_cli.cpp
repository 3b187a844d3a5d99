/*
   Copyright 2026 The irrcyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "irrcyc/arith.hpp"
#include "irrcyc/authcodes.hpp"
#include "irrcyc/example_fields.hpp"
#include "irrcyc/report.hpp"
#include "irrcyc/verify.hpp"

namespace {

using namespace irrcyc;
using report::Json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct FieldOptions {
    std::optional<std::uint32_t> p;
    std::uint32_t m = 1;
    std::vector<std::int64_t> fq_poly;
    std::uint64_t seed = 0;
    std::optional<std::uint32_t> example;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldContext make_field(const FieldOptions& o) {
    FieldSpec spec;
    if (o.example) {
        if (o.p || !o.fq_poly.empty()) throw UsageError("--paper-field excludes --p, --m and --fq-poly");
        auto s = example_field_spec(*o.example);
        if (!s) throw UsageError("--paper-field accepts 8, 9, 11 or 16");
        spec = *s;
    } else {
        if (!o.p) throw UsageError("a field is required: --p [--m] or --paper-field");
        spec.p = *o.p;
        spec.m = o.m;
        if (!o.fq_poly.empty()) spec.fq_min_poly = parse_prime_poly(o.fq_poly, spec.p);
    }
    spec.seed = o.seed;
    return build_field(spec);
}

void emit(bool json, std::string_view command, const FieldContext* ctx, Json payload, const std::string& text) {
    if (json)
        std::cout << report::dump(report::envelope(command, ctx, std::move(payload)));
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducible cyclic codes of dimension two: factorizations, weight enumerators, authentication codes"};
    app.require_subcommand(1);
    app.fallthrough();

    FieldOptions fo;
    bool json = false;
    unsigned threads = 1;
    app.add_option("--p", fo.p, "characteristic");
    app.add_option("--m", fo.m, "q = p^m")->check(CLI::PositiveNumber);
    app.add_option("--fq-poly", fo.fq_poly, "minimal polynomial of alpha over GF(p), low degree first")
        ->delimiter(',');
    app.add_option("--seed", fo.seed, "selects among the primitive gamma over the same alpha");
    app.add_option("--paper-field", fo.example, "preset field q in {8, 9, 11, 16}");
    app.add_flag("--json", json, "structured output");
    app.add_option("--threads", threads, "worker threads for enumeration")->check(CLI::Range(1u, 64u));

    auto* sets = app.add_subcommand("sets", "irreducibility index sets");

    auto* factor = app.add_subcommand("factor", "factor x^(q+1) - c");
    std::optional<std::uint32_t> c_exp;
    bool all = false;
    factor->add_option("c-exp", c_exp, "exponent e with c = a^e");
    factor->add_flag("--all", all, "every nonzero c");

    auto* cwe = app.add_subcommand("cwe", "complete weight enumerator");
    std::uint32_t N = 0;
    std::string method = "closed";
    bool with_zero = false;
    cwe->add_option("N", N, "code index, N | q^2 - 1")->required();
    cwe->add_option("--method", method)->check(CLI::IsMember({"closed", "brute", "both"}));
    cwe->add_flag("--with-zero", with_zero, "show the zero-symbol count in text output");

    auto* hamming = app.add_subcommand("hamming", "Hamming weight distribution");
    hamming->add_option("N", N, "code index, N | q^2 - 1")->required();

    auto* auth = app.add_subcommand("auth", "authentication code report");
    auth->add_option("N", N, "code index, N | q^2 - 1")->required();

    auto* verify = app.add_subcommand("verify", "oracle sweep over small fields");
    std::uint32_t qmax = 64;
    verify->add_option("--qmax", qmax, "largest q")->check(CLI::Range(2u, 1024u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            const auto r = verify_sweep(qmax, threads);
            emit(json, "verify", nullptr, verify_json(r), verify_text(r));
            return r.ok() ? kExitOk : kExitMismatch;
        }

        const auto ctx = make_field(fo);

        if (sets->parsed()) {
            const auto s = irreducibility_sets(ctx);
            emit(json, "sets", &ctx, report::sets_json(s), report::sets(s));
        } else if (factor->parsed()) {
            if (all == c_exp.has_value()) throw UsageError("factor takes either a c exponent or --all");
            const Factorizer fz(ctx);
            Json payload = Json::array();
            std::string text;
            const std::uint32_t first = all ? 0 : *c_exp, last = all ? ctx.fq_order() : *c_exp + 1;
            if (first >= ctx.fq_order()) throw UsageError("c exponent must be below q - 1");
            for (std::uint32_t e = first; e < last; ++e) {
                const auto f = fz.factor_norm_poly(FqElem::power(e));
                payload.push_back(report::factorization_json(f));
                text += report::factorization(ctx, f) + "\n";
            }
            emit(json, "factor", &ctx, std::move(payload), text);
        } else if (cwe->parsed()) {
            Json payload;
            std::string text;
            std::optional<CWEnum> closed, brute;
            if (method != "brute") closed = cwe_closed_form(ctx, build_weight_vectors(ctx), N);
            if (method != "closed") brute = cwe_brute_force(ctx, N, threads);
            const CWEnum& shown = closed ? *closed : *brute;
            payload["method"] = method;
            payload["enumerator"] = report::cwe_json(shown);
            text = report::cwe(shown, with_zero);
            bool equal = true;
            if (closed && brute) {
                equal = *closed == *brute;
                payload["verdict"] = equal ? "EQUAL" : "DIFFERENT";
                text += std::string("verdict: ") + (equal ? "EQUAL" : "DIFFERENT") + "\n";
            }
            emit(json, "cwe", &ctx, std::move(payload), text);
            if (!equal) return kExitMismatch;
        } else if (hamming->parsed()) {
            const auto h = hamming_distribution(ctx, N);
            Json payload;
            payload["code"] = report::code_spec_json(make_code_spec(ctx, N));
            payload["distribution"] = report::hamming_json(h);
            emit(json, "hamming", &ctx, std::move(payload), report::hamming(h));
        } else if (auth->parsed()) {
            const auto r = classify(ctx, N);
            emit(json, "auth", &ctx, report::auth_json(r), report::auth(r));
        }
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
