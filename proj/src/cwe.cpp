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

#include "irrcyc/cwe.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

#include "irrcyc/arith.hpp"

namespace irrcyc {

IntVec shift(std::span<const std::uint32_t> v, std::uint64_t i) {
    IntVec out(v.size());
    if (v.empty()) return out;
    const std::size_t r = static_cast<std::size_t>(i % v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[(k + r) % v.size()] = v[k];
    return out;
}

IntVec fold_sum(std::span<const std::uint32_t> v, std::size_t l) {
    if (l == 0 || v.size() % l != 0)
        throw Error(Errc::BadBlockLength, "block length " + std::to_string(l) + " does not divide " + std::to_string(v.size()));
    IntVec out(l, 0);
    for (std::size_t k = 0; k < v.size(); ++k) out[k % l] += v[k];
    return out;
}

IntVec repeat_to_k(std::span<const std::uint32_t> v, std::size_t k, std::uint32_t q) {
    const std::size_t qm1 = q - 1;
    if (v.empty() || k == 0 || k % v.size() != 0 || qm1 % k != 0)
        throw Error(Errc::BadBlockLength, "cannot repeat a block of length " + std::to_string(v.size()) + " to length " +
                                              std::to_string(k));
    IntVec out;
    out.reserve(k);
    while (out.size() < k) out.insert(out.end(), v.begin(), v.end());
    return out;
}

IntVec repeat_to_full(std::span<const std::uint32_t> v, std::uint32_t q) { return repeat_to_k(v, q - 1, q); }

IntVec concat(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    IntVec out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

IntVec add_vectors(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    if (a.size() != b.size()) throw Error(Errc::BadBlockLength, "vector lengths differ");
    IntVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

WeightVectors build_weight_vectors(const FieldContext& ctx, const IrreducibilitySets& sets) {
    WeightVectors wv;
    wv.q_even = sets.q_even;
    wv.q = ctx.q();
    if (sets.q_even) {
        wv.w.assign(ctx.fq_order(), 0);
        for (const auto i : sets.irreducible) wv.w[i] = 2;
        return wv;
    }
    const std::uint32_t half = ctx.fq_order() / 2;
    wv.w0.assign(half, 0);
    wv.w1.assign(half, 0);
    for (const auto i : sets.irreducible_odd[0]) wv.w0[i] = 2;
    for (const auto i : sets.irreducible_odd[1]) wv.w1[i] = 2;
    wv.w0[sets.two_index] = 1;
    wv.two_index = sets.two_index;
    return wv;
}

WeightVectors build_weight_vectors(const FieldContext& ctx) { return build_weight_vectors(ctx, irreducibility_sets(ctx)); }

CompleteWeight codeword_complete_weight(const FieldContext& ctx, const WeightVectors& wv, Fq2Elem b) {
    if (b.is_zero()) throw Error(Errc::ZeroElement, "the zero codeword has no class");
    const std::uint32_t qm1 = ctx.fq_order();
    const std::uint32_t i = b.exp() % qm1;
    if (wv.q_even) {
        // i = 2j + 1 (mod q-1), q-1 odd
        const std::uint64_t inv2 = *arith::inverse_mod(2 % qm1, qm1);
        const std::uint64_t j = arith::mod(static_cast<std::int64_t>(i) - 1, qm1) * inv2 % qm1;
        return {shift(wv.w, j)};
    }
    const IntVec& base = i % 2 == 0 ? wv.w0 : wv.w1;
    return {repeat_to_full(shift(base, i / 2), ctx.q())};
}

std::uint64_t CWEnum::total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& t : terms) s += t.frequency;
    return s;
}

HammingDistribution CWEnum::collapse() const {
    std::map<std::uint64_t, std::uint64_t> by_weight;
    for (const auto& t : terms) by_weight[t.weight.hamming_weight()] += t.frequency;
    HammingDistribution h;
    for (const auto& [w, f] : by_weight) h.terms.push_back({w, f});
    return h;
}

namespace {

using Tally = std::map<IntVec, std::uint64_t>;

CWEnum from_tally(CodeSpec spec, const Tally& tally) {
    CWEnum out{spec, {}};
    out.terms.reserve(tally.size());
    for (const auto& [counts, freq] : tally) out.terms.push_back({CompleteWeight{counts}, freq});
    return out;
}

}  // namespace

CWEnum cwe_closed_form(const FieldContext& ctx, const WeightVectors& wv, std::uint32_t N) {
    if (N == 0 || ctx.fq_order() % N != 0)
        throw Error(Errc::BadModulus, std::to_string(N) + " does not divide q - 1");
    const auto spec = make_code_spec(ctx, N);
    const std::uint32_t q = ctx.q();
    Tally tally;
    auto add_orbit = [&](const IntVec& folded, std::uint32_t shifts) {
        for (std::uint32_t j = 0; j < shifts; ++j) tally[repeat_to_full(shift(folded, j), q)] += spec.n;
    };
    if (wv.q_even) {
        add_orbit(fold_sum(wv.w, N), N);
    } else if (N % 2 == 0) {
        add_orbit(fold_sum(wv.w0, N / 2), N / 2);
        add_orbit(fold_sum(wv.w1, N / 2), N / 2);
    } else {
        const std::uint32_t e = (N - 1) / 2;
        add_orbit(fold_sum(add_vectors(wv.w0, shift(wv.w1, e)), N), N);
    }
    return from_tally(spec, tally);
}

CWEnum cwe_brute_force(const FieldContext& ctx, std::uint32_t N, unsigned threads) {
    const auto spec = make_code_spec(ctx, N);
    const std::uint32_t order = ctx.order(), qm1 = ctx.fq_order();

    auto run = [&](std::uint32_t begin, std::uint32_t end, Tally& tally) {
        IntVec counts(qm1);
        for (std::uint32_t e = begin; e < end; ++e) {
            std::fill(counts.begin(), counts.end(), 0);
            bool nonzero = false;
            std::uint64_t x = e;
            for (std::uint32_t k = 0; k < spec.n; ++k, x = (x + N) % order) {
                const FqElem s = ctx.trace(Fq2Elem::power(static_cast<std::uint32_t>(x)));
                if (s.is_zero()) continue;
                ++counts[s.exp()];
                nonzero = true;
            }
            if (nonzero) ++tally[counts];
        }
    };

    threads = std::clamp(threads, 1u, 64u);
    std::vector<Tally> parts(threads);
    if (threads == 1) {
        run(0, order, parts[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint32_t chunk = (order + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint32_t b = std::min(order, t * chunk), e = std::min(order, b + chunk);
            pool.emplace_back(run, b, e, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
    }
    Tally merged;
    for (const auto& part : parts)
        for (const auto& [counts, freq] : part) merged[counts] += freq;
    if (spec.dim == 1)
        for (auto& [counts, freq] : merged) freq /= spec.q;
    return from_tally(spec, merged);
}

bool check_shift_sum_identity(const FieldContext& ctx, const WeightVectors& wv, std::uint32_t N, std::uint32_t j,
                              std::uint32_t e) {
    if (N == 0 || ctx.fq_order() % N != 0)
        throw Error(Errc::BadModulus, std::to_string(N) + " does not divide q - 1");
    if (j >= (N % 2 == 0 ? N / 2 : N)) throw Error(Errc::BadRange, "shift index out of range");
    const std::uint32_t q = ctx.q(), qm1 = ctx.fq_order(), t = qm1 / N;

    if (wv.q_even) {
        IntVec lhs(qm1, 0);
        for (std::uint32_t m = 0; m < t; ++m) lhs = add_vectors(lhs, shift(wv.w, j + std::uint64_t{N} * m));
        return lhs == repeat_to_full(shift(fold_sum(wv.w, N), j), q);
    }
    if (N % 2 == 0) {
        for (const IntVec* wv_v : {&wv.w0, &wv.w1}) {
            const IntVec doubled = concat(*wv_v, *wv_v);
            IntVec lhs(qm1, 0);
            for (std::uint32_t m = 0; m < t; ++m)
                lhs = add_vectors(lhs, shift(doubled, j + std::uint64_t{N / 2} * m));
            if (lhs != repeat_to_full(shift(fold_sum(*wv_v, N / 2), j), q)) return false;
        }
        return true;
    }
    const IntVec d0 = concat(wv.w0, wv.w0), d1 = concat(wv.w1, wv.w1);
    IntVec lhs(qm1, 0);
    for (std::uint32_t m = 0; m < t / 2; ++m) {
        lhs = add_vectors(lhs, shift(d0, j + std::uint64_t{N} * m));
        lhs = add_vectors(lhs, shift(d1, j + std::uint64_t{e} + std::uint64_t{N} * m));
    }
    return lhs == repeat_to_full(shift(fold_sum(add_vectors(wv.w0, shift(wv.w1, e)), N), j), q);
}

}  // namespace irrcyc
