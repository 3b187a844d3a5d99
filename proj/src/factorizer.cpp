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

#include "irrcyc/factorizer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "irrcyc/arith.hpp"
#include "irrcyc/cyclotomy.hpp"

namespace irrcyc {

Polynomial::Polynomial(std::vector<FqElem> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::nonzero_terms() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](FqElem c) { return !c.is_zero(); }));
}

Polynomial multiply(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FqElem> out(a.coeffs().size() + b.coeffs().size() - 1, FqElem::zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = ctx.fq_add(out[i + j], ctx.fq_mul(a.coeffs()[i], b.coeffs()[j]));
    return Polynomial(std::move(out));
}

Polynomial norm_polynomial(const FieldContext& ctx, FqElem c) {
    std::vector<FqElem> coeffs(ctx.q() + 2, FqElem::zero());
    coeffs[0] = ctx.fq_neg(c);
    coeffs.back() = FqElem::power(0);
    return Polynomial(std::move(coeffs));
}

int degree(const NormFactor& f) noexcept { return std::holds_alternative<LinearFactor>(f) ? 1 : 2; }

Polynomial to_polynomial(const NormFactor& f) {
    const FqElem one = FqElem::power(0), zero = FqElem::zero();
    return std::visit(
        [&](const auto& g) -> Polynomial {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, LinearFactor>)
                return Polynomial({g.constant, one});
            else if constexpr (std::is_same_v<T, PureQuadraticFactor>)
                return Polynomial({g.constant, zero, one});
            else
                return Polynomial({g.constant, g.linear, one});
        },
        f);
}

int Factorization::total_degree() const noexcept {
    int d = 0;
    for (const auto& f : factors) d += degree(f);
    return d;
}

IrreducibilitySets irreducibility_sets(const FieldContext& ctx) {
    const std::uint32_t q = ctx.q(), qm1 = ctx.fq_order();
    IrreducibilitySets sets;
    sets.q_even = ctx.q_is_even();

    auto log_of_sum = [&](std::int64_t e1, std::int64_t e2) {
        const FqElem sum = ctx.fq_add(ctx.alpha_pow(e1), ctx.alpha_pow(e2));
        if (sum.is_zero())
            throw Error(Errc::ParadoxicalField, "vanishing sum alpha^" + std::to_string(e1) + " + alpha^" + std::to_string(e2));
        return sum.exp();
    };
    auto complement = [](const std::vector<std::uint32_t>& taken, std::uint32_t bound) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < bound; ++i)
            if (!std::binary_search(taken.begin(), taken.end(), i)) out.push_back(i);
        return out;
    };
    auto normalize = [](std::vector<std::uint32_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };

    if (sets.q_even) {
        for (std::int64_t k = 0; k + 1 < q / 2; ++k) sets.reducible.push_back(log_of_sum(k + 1, qm1 - k));
        normalize(sets.reducible);
        sets.irreducible = complement(sets.reducible, qm1);
        return sets;
    }

    const std::uint32_t half = qm1 / 2;
    const std::uint32_t ceil_quarter = (qm1 + 3) / 4, floor_quarter = qm1 / 4;
    for (std::int64_t k = 0; k < ceil_quarter; ++k) sets.reducible_odd[0].push_back(log_of_sum(k, qm1 - k) % half);
    for (std::int64_t k = 0; k < floor_quarter; ++k)
        sets.reducible_odd[1].push_back(log_of_sum(k + 1, qm1 - k) % half);
    for (int v = 0; v < 2; ++v) {
        normalize(sets.reducible_odd[v]);
        sets.irreducible_odd[v] = complement(sets.reducible_odd[v], half);
    }
    sets.two_index = ctx.fq_from_int(2).exp() % half;
    sets.minus_one_nonsquare = q % 4 == 3;
    return sets;
}

Factorizer::Factorizer(const FieldContext& ctx) : ctx_(&ctx), sets_(irreducibility_sets(ctx)) {}

bool Factorizer::in_set(const std::vector<std::uint32_t>& set, std::uint32_t i) const {
    return std::binary_search(set.begin(), set.end(), i);
}

std::uint32_t Factorizer::even_half_index(std::uint32_t e) const {
    const std::uint32_t qm1 = ctx_->fq_order();
    const std::uint64_t inv2 = *arith::inverse_mod(2 % qm1, qm1);
    return static_cast<std::uint32_t>(arith::mod(static_cast<std::int64_t>(e) - 1, qm1) * inv2 % qm1);
}

bool Factorizer::is_irreducible_quadratic(FqElem b, FqElem c) const {
    if (c.is_zero()) return false;  // x(x + b)
    const std::uint32_t qm1 = ctx_->fq_order();
    if (sets_.q_even) {
        if (b.is_zero()) return false;  // c has a square root
        const std::uint32_t j = even_half_index(c.exp());
        return in_set(sets_.irreducible, static_cast<std::uint32_t>(arith::mod(std::int64_t{b.exp()} - j, qm1)));
    }
    const std::uint32_t v = c.exp() % 2, j = c.exp() / 2;
    if (b.is_zero()) return (static_cast<std::uint32_t>(sets_.minus_one_nonsquare) ^ v) == 1;
    const auto i = arith::mod(std::int64_t{b.exp()} - j, qm1);
    return in_set(sets_.irreducible_odd[v], static_cast<std::uint32_t>(i % (qm1 / 2)));
}

Factorization Factorizer::factor_norm_poly(FqElem c) const {
    if (c.is_zero()) throw Error(Errc::ZeroElement, "x^(q+1) - 0 is not handled");
    const FieldContext& ctx = *ctx_;
    const std::uint32_t e = c.exp();
    Factorization out{c, {}};

    if (sets_.q_even) {
        const std::uint32_t j = even_half_index(e);
        out.factors.push_back(LinearFactor{ctx.alpha_pow(std::int64_t{e} * (ctx.q() / 2))});
        for (const auto i : sets_.irreducible)
            out.factors.push_back(QuadraticFactor{ctx.alpha_pow(std::int64_t{i} + j), c});
    } else {
        const std::uint32_t half = ctx.fq_order() / 2, v = e % 2, j = e / 2;
        if (v == 0) {
            out.factors.push_back(LinearFactor{ctx.alpha_pow(j)});
            out.factors.push_back(LinearFactor{ctx.alpha_pow(std::int64_t{j} + half)});
        }
        if ((static_cast<std::uint32_t>(sets_.minus_one_nonsquare) ^ v) == 1)
            out.factors.push_back(PureQuadraticFactor{c});
        for (const auto i : sets_.irreducible_odd[v]) {
            out.factors.push_back(QuadraticFactor{ctx.alpha_pow(std::int64_t{i} + j), c});
            out.factors.push_back(QuadraticFactor{ctx.alpha_pow(std::int64_t{i} + j + half), c});
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

Factorization Factorizer::brute_force_factor(FqElem c) const {
    if (c.is_zero()) throw Error(Errc::ZeroElement, "x^(q+1) - 0 is not handled");
    const FieldContext& ctx = *ctx_;
    Factorization out{c, {}};
    for (const auto r : enumerate_class(ctx, ctx.fq_order(), c.exp())) {
        if (ctx.in_subfield(r)) {
            out.factors.push_back(LinearFactor{ctx.project(ctx.neg(r))});
            continue;
        }
        const Fq2Elem conj = ctx.pow(r, ctx.q());
        if (conj.exp() < r.exp()) continue;  // pair already taken
        const FqElem minus_trace = ctx.fq_neg(ctx.trace(r));
        if (minus_trace.is_zero())
            out.factors.push_back(PureQuadraticFactor{ctx.norm(r)});
        else
            out.factors.push_back(QuadraticFactor{minus_trace, ctx.norm(r)});
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

Polynomial quadratic_from_root(const FieldContext& ctx, Fq2Elem r) {
    if (r.is_zero()) throw Error(Errc::ZeroElement, "zero is not a root of x^(q+1) - c");
    const FqElem one = FqElem::power(0);
    if (ctx.in_subfield(r)) return Polynomial({ctx.project(ctx.neg(r)), one});
    return Polynomial({ctx.norm(r), ctx.fq_neg(ctx.trace(r)), one});
}

Polynomial expand(const FieldContext& ctx, const Factorization& f) {
    Polynomial acc({FqElem::power(0)});
    for (const auto& factor : f.factors) acc = multiply(ctx, acc, to_polynomial(factor));
    return acc;
}

}  // namespace irrcyc
