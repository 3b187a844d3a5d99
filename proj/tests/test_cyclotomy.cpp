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

#include <set>

#include "common.hpp"
#include "irrcyc/cyclotomy.hpp"

using namespace irrcyc;
using testing::error_code;
using testing::field;

TEST_CASE("class sizes and membership") {
    for (auto q : testing::orders_up_to(32)) {
        CAPTURE(q);
        const auto ctx = field(q);
        for (auto N : testing::divisors_of(ctx.order())) {
            const auto cls = cyclotomic_class(ctx, N, N - 1);
            REQUIRE(cls.size * N == ctx.order());
        }
        // classes of modulus q-1 partition GF(q^2)*
        const std::uint32_t N = q - 1;
        std::set<Fq2Elem> all;
        for (std::uint32_t i = 0; i < N; ++i) {
            std::size_t count = 0;
            for (const auto x : enumerate_class(ctx, N, i)) {
                REQUIRE(class_of(ctx, x, N) == i);
                REQUIRE(x.exp() % N == i);
                all.insert(x);
                ++count;
            }
            REQUIRE(count == q + 1);
        }
        CHECK(all.size() == ctx.order());
    }
}

TEST_CASE("class examples") {
    const auto ctx = field(8);
    CHECK(class_of(ctx, ctx.gamma_pow(7), 7) == 0);
    CHECK(class_of(ctx, ctx.gamma_pow(7), 9) == 7);
    const auto ctx16 = field(16);
    CHECK(class_of(ctx16, ctx16.gamma_pow(7), 5) == 2);

    std::vector<Fq2Elem> identity;
    for (auto x : enumerate_class(ctx, ctx.order(), 0)) identity.push_back(x);
    CHECK(identity == std::vector<Fq2Elem>{ctx.one()});

    for (auto x : enumerate_class(ctx, 7, 1)) CHECK(ctx.norm(x) == ctx.alpha());

    for (auto q : testing::orders_up_to(32)) {
        const auto c = field(q);
        for (std::uint32_t i = 0; i + 1 < q; ++i)
            REQUIRE(class_of(c, c.embed(c.alpha_pow(i)), q - 1) == (std::uint64_t{q} + 1) * i % (q - 1));
    }
}

TEST_CASE("class intersections with GF(q)") {
    const auto ctx9 = field(9);
    CHECK(class_field_intersection(ctx9, 0) == std::vector<FqElem>{ctx9.alpha_pow(0), ctx9.alpha_pow(4)});
    for (auto q : testing::orders_up_to(32)) {
        CAPTURE(q);
        const auto ctx = field(q);
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
            const auto got = class_field_intersection(ctx, i);
            // exhaustive scan of the class
            std::vector<FqElem> scan;
            for (auto x : enumerate_class(ctx, q - 1, i))
                if (ctx.in_subfield(x)) scan.push_back(ctx.project(x));
            std::sort(scan.begin(), scan.end());
            REQUIRE(got == scan);
            if (q % 2 == 0) {
                // q-1 odd: i = 2j mod q-1
                const std::uint32_t j = static_cast<std::uint32_t>(i * std::uint64_t{q / 2} % (q - 1));
                REQUIRE(got == std::vector<FqElem>{ctx.alpha_pow(j)});
            } else if (i % 2 == 1) {
                REQUIRE(got.empty());
            } else {
                REQUIRE(got.size() == 2);
                REQUIRE(std::find(got.begin(), got.end(), ctx.alpha_pow(i / 2)) != got.end());
            }
        }
    }
}

TEST_CASE("class errors") {
    const auto ctx = field(8);
    CHECK(error_code([&] { cyclotomic_class(ctx, 5, 0); }) == Errc::BadModulus);
    CHECK(error_code([&] { cyclotomic_class(ctx, 0, 0); }) == Errc::BadModulus);
    CHECK(error_code([&] { cyclotomic_class(ctx, 7, 7); }) == Errc::BadRange);
    CHECK(error_code([&] { class_of(ctx, Fq2Elem::zero(), 7); }) == Errc::ZeroElement);
    CHECK(error_code([&] { class_of(ctx, ctx.gamma(), 10); }) == Errc::BadModulus);
}
