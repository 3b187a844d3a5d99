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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "irrcyc/report.hpp"
#include "irrcyc/verify.hpp"

using namespace irrcyc;
using testing::error_code;
using testing::field;

TEST_CASE("element and factor text") {
    CHECK(report::element(FqElem::zero()) == "0");
    CHECK(report::element(FqElem::power(3)) == "a^3");
    CHECK(report::element(Fq2Elem::power(17)) == "g^17");
    CHECK(report::factor(LinearFactor{FqElem::power(4)}) == "x + a^4");
    CHECK(report::factor(PureQuadraticFactor{FqElem::power(1)}) == "x^2 + a^1");
    CHECK(report::factor(QuadraticFactor{FqElem::power(5), FqElem::power(1)}) == "x^2 + a^5*x + a^1");
}

TEST_CASE("factorization line") {
    const auto ctx = field(8);
    const Factorizer fz(ctx);
    CHECK(report::factorization(ctx, fz.factor_norm_poly(ctx.alpha())) ==
          "x^9 - a^1 = (x + a^4) (x^2 + a^1*x + a^1) (x^2 + a^4*x + a^1) (x^2 + a^5*x + a^1) (x^2 + a^6*x + a^1)");
    const auto j = report::factorization_json(fz.factor_norm_poly(ctx.alpha()));
    CHECK(j["c"] == 1);
    CHECK(j["factors"][0]["kind"] == "linear");
    CHECK(j["factors"][1]["args"] == report::Json::array({1, 1}));
}

TEST_CASE("enumerator JSON round trip") {
    for (auto q : {8u, 9u, 11u, 16u, 25u}) {
        const auto ctx = field(q);
        const auto wv = build_weight_vectors(ctx);
        for (auto N : testing::divisors_of(q - 1)) {
            const auto e = cwe_closed_form(ctx, wv, N);
            const auto text = report::dump(report::envelope("cwe", &ctx, report::cwe_json(e)));
            const auto parsed = report::Json::parse(text);
            const auto back = report::cwe_from_json(parsed["payload"]);
            REQUIRE(back == e);
            REQUIRE(report::dump(report::envelope("cwe", &ctx, report::cwe_json(back))) == text);
        }
    }
    CHECK(error_code([] { report::cwe_from_json(report::Json::parse(R"({"terms": []})")); }) == Errc::InvalidArgument);
}

TEST_CASE("envelope layout") {
    const auto ctx = field(9);
    const auto j = report::envelope("sets", &ctx, report::sets_json(irreducibility_sets(ctx)));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"format_version", "command", "field", "payload"});
    CHECK(j["field"]["q"] == 9);
    CHECK(j["field"]["fq_min_poly"] == report::Json::array({2, 1, 1}));
    CHECK(j["payload"]["I0"] == report::Json::array({1, 3}));
    CHECK(j["payload"]["delta"] == 0);
    CHECK(report::envelope("verify", nullptr, {})["field"].is_null());
}

TEST_CASE("text renderings") {
    const auto ctx = field(9);
    const auto e = cwe_closed_form(ctx, build_weight_vectors(ctx), 4);
    CHECK(report::cwe(e) ==
          "code: q=9 N=4 n=20 dim=2\n"
          "20 x (1,4,1,4,1,4,1,4)\n"
          "40 x (2,2,2,2,2,2,2,2)\n"
          "20 x (4,1,4,1,4,1,4,1)\n"
          "total 80\n");
    CHECK(report::cwe(e, true).find("40 x (4;2,2,2,2,2,2,2,2)") != std::string::npos);
    CHECK(report::hamming(hamming_distribution(ctx, 4)) == "weight 16: 40\nweight 20: 40\n");
    CHECK(report::auth(classify(ctx, 4)).find("classification: Optimal") != std::string::npos);
    CHECK(report::sets(irreducibility_sets(field(8))) == "R = {0, 2, 3}\nI = {1, 4, 5, 6}\n");
}

TEST_CASE("verify sweep output is stable") {
    const auto a = verify_sweep(16), b = verify_sweep(16, 3);
    CHECK(a.ok());
    CHECK(report::dump(verify_json(a)) == report::dump(verify_json(b)));
    CHECK(a.fields.size() == 10);
}
