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

#include <map>
#include <numeric>

#include "common.hpp"
#include "irrcyc/codes.hpp"
#include "oracle.hpp"

using namespace irrcyc;
using testing::error_code;
using testing::field;

namespace {

using V = std::vector<std::uint32_t>;

// Weight distribution by direct enumeration of every codeword.
std::map<std::uint64_t, std::uint64_t> enumerate_weights(const FieldContext& ctx, std::uint32_t N) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint32_t e = 0; e < ctx.order(); ++e) {
        const auto w = complete_weight(ctx, codeword(ctx, Fq2Elem::power(e), N)).hamming_weight();
        if (w) ++out[w];
    }
    return out;
}

}  // namespace

TEST_CASE("code parameters") {
    const auto ctx = field(9);
    const auto s = make_code_spec(ctx, 4);
    CHECK(s.n == 20);
    CHECK(s.dim == 2);
    CHECK(s.t == 2u);
    CHECK(s.u == 2);
    const auto s10 = make_code_spec(ctx, 10);
    CHECK(s10.n == 8);
    CHECK(s10.dim == 1);
    CHECK_FALSE(s10.t.has_value());
    CHECK(error_code([&] { make_code_spec(ctx, 3); }) == Errc::BadModulus);
    CHECK(error_code([&] { make_code_spec(ctx, 0); }) == Errc::BadModulus);
}

TEST_CASE("codewords of the example fields") {
    SUBCASE("q = 8") {
        const auto ctx = field(8);
        CHECK(complete_weight(ctx, codeword(ctx, ctx.gamma(), 7)).counts == V{0, 2, 0, 0, 2, 2, 2});
    }
    SUBCASE("q = 9") {
        const auto ctx = field(9);
        CHECK(complete_weight(ctx, codeword(ctx, ctx.one(), 8)).counts == V{1, 2, 0, 2, 1, 2, 0, 2});
        CHECK(complete_weight(ctx, codeword(ctx, ctx.gamma(), 8)).counts == V{0, 2, 2, 0, 0, 2, 2, 0});
    }
    SUBCASE("q = 11") {
        const auto ctx = field(11);
        CHECK(complete_weight(ctx, codeword(ctx, ctx.one(), 10)).counts == V{2, 1, 0, 0, 2, 2, 1, 0, 0, 2});
        CHECK(complete_weight(ctx, codeword(ctx, ctx.gamma(), 10)).counts == V{0, 2, 2, 0, 2, 0, 2, 2, 0, 2});
    }
}

TEST_CASE("codeword structure") {
    const auto ctx = field(13);
    const auto zero = codeword(ctx, Fq2Elem::zero(), 12);
    CHECK(zero.size() == 14);
    CHECK(std::all_of(zero.begin(), zero.end(), [](FqElem x) { return x.is_zero(); }));
    CHECK(complete_weight(ctx, zero).hamming_weight() == 0);
    const auto a = ctx.gamma_pow(5);
    const auto c = codeword(ctx, a, 12);
    for (std::uint32_t k = 0; k < c.size(); ++k) REQUIRE(c[k] == ctx.trace(ctx.mul(a, ctx.gamma_pow(12 * k))));
    // cyclic: shifting a by gamma^N rotates the word
    const auto shifted = codeword(ctx, ctx.mul(a, ctx.gamma_pow(12)), 12);
    CHECK(std::equal(shifted.begin(), shifted.end() - 1, c.begin() + 1));
    CHECK(shifted.back() == c.front());
}

TEST_CASE("hamming trichotomy examples") {
    using H = std::vector<HammingTerm>;
    CHECK(hamming_distribution(field(9), 4).terms == H{{16, 40}, {20, 40}});
    CHECK(hamming_distribution(field(16), 5).terms == H{{48, 255}});
    CHECK(hamming_distribution(field(11), 5).terms == H{{22, 120}});
    CHECK(min_distance(hamming_distribution(field(9), 8)) == 8);
    CHECK(min_distance(hamming_distribution(field(8), 7)) == 8);
    CHECK(min_distance(HammingDistribution{{{5, 3}}}) == 5);
    CHECK(error_code([] { min_distance(HammingDistribution{}); }) == Errc::EmptyDistribution);
    CHECK(error_code([] { min_distance(HammingDistribution{{{0, 1}, {4, 0}}}); }) == Errc::EmptyDistribution);
}

TEST_CASE("hamming trichotomy matches enumeration") {
    for (auto q : testing::orders_up_to(32)) {
        CAPTURE(q);
        const auto ctx = field(q);
        for (auto N : testing::divisors_of(ctx.order())) {
            CAPTURE(N);
            const auto spec = make_code_spec(ctx, N);
            const auto h = hamming_distribution(ctx, N);
            const auto seen = enumerate_weights(ctx, N);
            if (spec.dim == 2) {
                REQUIRE(h.total() == ctx.order());
                std::map<std::uint64_t, std::uint64_t> expect;
                for (const auto& t : h.terms) expect[t.weight] += t.frequency;
                REQUIRE(seen == expect);
            } else {
                // each nonzero codeword of a one-dimensional code comes from q values of a
                REQUIRE(h.terms == std::vector<HammingTerm>{{spec.n, q - 1}});
                REQUIRE(seen.size() == 1);
                REQUIRE(seen.begin()->first == spec.n);
                REQUIRE(seen.begin()->second == std::uint64_t{q} * (q - 1));
            }
        }
    }
}
