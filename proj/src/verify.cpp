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

#include "irrcyc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "irrcyc/arith.hpp"

namespace irrcyc {

bool FieldCheck::ok() const noexcept {
    return error.empty() && factorization_failures == 0 &&
           std::all_of(divisors.begin(), divisors.end(), [](const DivisorCheck& d) { return d.ok(); });
}

bool VerifyReport::ok() const noexcept {
    return std::all_of(fields.begin(), fields.end(), [](const FieldCheck& f) { return f.ok(); });
}

FieldCheck verify_field(const FieldContext& ctx, unsigned threads) {
    FieldCheck fc{ctx.q(), ctx.p(), ctx.m(), 0, 0, {}, {}};
    const Factorizer fz(ctx);
    for (std::uint32_t e = 0; e < ctx.fq_order(); ++e) {
        const FqElem c = FqElem::power(e);
        const auto f = fz.factor_norm_poly(c);
        ++fc.factorizations;
        if (expand(ctx, f) != norm_polynomial(ctx, c) || f != fz.brute_force_factor(c)) ++fc.factorization_failures;
    }
    const auto wv = build_weight_vectors(ctx, fz.sets());
    for (const auto N64 : arith::divisors(ctx.fq_order())) {
        const auto N = static_cast<std::uint32_t>(N64);
        const auto closed = cwe_closed_form(ctx, wv, N);
        const auto brute = cwe_brute_force(ctx, N, threads);
        const auto h = hamming_distribution(ctx, N);
        DivisorCheck d;
        d.N = N;
        d.terms = closed.terms.size();
        d.cwe_equal = closed == brute;
        d.hamming_consistent = closed.collapse() == h && brute.collapse() == h;
        d.p_substitution_equal = p_substitution(closed) == p_substitution(brute);
        fc.divisors.push_back(d);
    }
    return fc;
}

VerifyReport verify_sweep(std::uint32_t qmax, unsigned threads) {
    VerifyReport r{qmax, {}};
    for (const auto q : arith::prime_powers_up_to(qmax)) {
        if (q < 2) continue;
        const auto [p, m] = *arith::prime_power(q);
        FieldSpec spec;
        spec.p = p;
        spec.m = m;
        try {
            r.fields.push_back(verify_field(build_field(spec), threads));
        } catch (const Error& e) {
            FieldCheck failed{static_cast<std::uint32_t>(q), p, m, 0, 0, {}, e.what()};
            r.fields.push_back(std::move(failed));
        }
    }
    return r;
}

report::Json verify_json(const VerifyReport& r) {
    report::Json j;
    j["qmax"] = r.qmax;
    j["ok"] = r.ok();
    j["fields"] = report::Json::array();
    for (const auto& f : r.fields) {
        report::Json fj;
        fj["q"] = f.q;
        fj["p"] = f.p;
        fj["m"] = f.m;
        fj["factorizations"] = f.factorizations;
        fj["factorization_failures"] = f.factorization_failures;
        fj["divisors"] = report::Json::array();
        for (const auto& d : f.divisors)
            fj["divisors"].push_back({{"N", d.N},
                                      {"terms", d.terms},
                                      {"cwe_equal", d.cwe_equal},
                                      {"hamming_consistent", d.hamming_consistent},
                                      {"p_substitution_equal", d.p_substitution_equal}});
        if (!f.error.empty()) fj["error"] = f.error;
        fj["ok"] = f.ok();
        j["fields"].push_back(std::move(fj));
    }
    return j;
}

std::string verify_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& f : r.fields) {
        os << "q=" << f.q << ": factorizations " << f.factorizations - f.factorization_failures << "/"
           << f.factorizations;
        for (const auto& d : f.divisors) os << (d.ok() ? "" : " FAIL") << " N=" << d.N;
        if (!f.error.empty()) os << " error: " << f.error;
        os << (f.ok() ? " ok" : " FAILED") << "\n";
    }
    os << (r.ok() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

}  // namespace irrcyc
