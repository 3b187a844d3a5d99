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

#include "irrcyc/codes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "irrcyc/arith.hpp"

namespace irrcyc {

CodeSpec make_code_spec(const FieldContext& ctx, std::uint32_t N) {
    if (N == 0 || ctx.order() % N != 0) throw Error(Errc::BadModulus, std::to_string(N) + " does not divide q^2 - 1");
    CodeSpec spec;
    spec.q = ctx.q();
    spec.N = N;
    spec.n = ctx.order() / N;
    spec.dim = static_cast<std::uint32_t>(arith::multiplicative_order(spec.q, spec.n));
    if (ctx.fq_order() % N == 0) spec.t = ctx.fq_order() / N;
    spec.u = std::gcd(spec.q + 1, N);
    return spec;
}

std::uint64_t CompleteWeight::hamming_weight() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint32_t CompleteWeight::max_count() const noexcept {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Codeword codeword(const FieldContext& ctx, Fq2Elem a, std::uint32_t N) {
    const auto spec = make_code_spec(ctx, N);
    Codeword out(spec.n, FqElem::zero());
    if (a.is_zero()) return out;
    const Fq2Elem step = ctx.gamma_pow(N);
    Fq2Elem x = a;
    for (std::uint32_t k = 0; k < spec.n; ++k, x = ctx.mul(x, step)) out[k] = ctx.trace(x);
    return out;
}

CompleteWeight complete_weight(const FieldContext& ctx, std::span<const FqElem> word) {
    CompleteWeight w{std::vector<std::uint32_t>(ctx.fq_order(), 0)};
    for (const auto s : word)
        if (!s.is_zero()) ++w.counts[s.exp()];
    return w;
}

std::uint64_t HammingDistribution::total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& t : terms) s += t.frequency;
    return s;
}

HammingDistribution hamming_distribution(const FieldContext& ctx, std::uint32_t N) {
    const auto spec = make_code_spec(ctx, N);
    const std::uint64_t q = spec.q, n = spec.n, u = spec.u, all = ctx.order();
    HammingDistribution h;
    if (u == 1) {
        h.terms.push_back({n * q / (q + 1), all});
    } else if (u < q + 1) {
        h.terms.push_back({n * (q + 1 - u) / (q + 1), all / u});
        h.terms.push_back({n, all * (u - 1) / u});
    } else {
        h.terms.push_back({n, q - 1});
    }
    return h;
}

std::uint64_t min_distance(const HammingDistribution& h) {
    std::optional<std::uint64_t> best;
    for (const auto& t : h.terms)
        if (t.frequency > 0 && t.weight > 0 && (!best || t.weight < *best)) best = t.weight;
    if (!best) throw Error(Errc::EmptyDistribution, "distribution has no nonzero weight");
    return *best;
}

}  // namespace irrcyc
