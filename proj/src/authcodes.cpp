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

#include "irrcyc/authcodes.hpp"

#include <algorithm>
#include <numeric>

#include "irrcyc/arith.hpp"

namespace irrcyc {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    // denominators are positive and the operands stay far below 2^31 here
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

FqElem encode(const FieldContext& ctx, std::uint32_t N, std::uint64_t s, std::uint32_t k1, FqElem k2) {
    const auto spec = make_code_spec(ctx, N);
    const std::uint64_t states = spec.dim == 2 ? std::uint64_t{spec.q} * spec.q : spec.q;
    if (s >= states) throw Error(Errc::BadRange, "source state " + std::to_string(s) + " out of range");
    if (k1 >= spec.n) throw Error(Errc::BadRange, "key shift " + std::to_string(k1) + " out of range");
    if (s == 0) return k2;
    const Fq2Elem a = ctx.gamma_pow(static_cast<std::int64_t>(s - 1));
    return ctx.fq_add(ctx.trace(ctx.mul(a, ctx.gamma_pow(std::int64_t{N} * k1))), k2);
}

Rational p_substitution(const CWEnum& cwe) {
    if (cwe.terms.empty()) throw Error(Errc::EmptyDistribution, "no nonzero codewords");
    std::uint64_t best = 0;
    for (const auto& t : cwe.terms)
        best = std::max({best, std::uint64_t{t.weight.max_count()}, t.weight.zero_count(cwe.spec.n)});
    return {static_cast<std::int64_t>(best), cwe.spec.n};
}

Rational p_substitution(const FieldContext& ctx, std::uint32_t N) {
    const auto spec = make_code_spec(ctx, N);
    if (spec.t) return p_substitution(cwe_closed_form(ctx, build_weight_vectors(ctx), N));
    return p_substitution(cwe_brute_force(ctx, N));
}

std::string_view to_string(Optimality o) noexcept {
    switch (o) {
        case Optimality::Optimal: return "Optimal";
        case Optimality::AlmostOptimal: return "AlmostOptimal";
        case Optimality::Neither: return "Neither";
    }
    return "?";
}

AuthReport classify(const FieldContext& ctx, std::uint32_t N) {
    AuthReport r;
    r.spec = make_code_spec(ctx, N);
    const auto n = static_cast<std::int64_t>(r.spec.n);
    r.min_distance = min_distance(hamming_distribution(ctx, N));
    const auto d = static_cast<std::int64_t>(r.min_distance);
    r.p_impersonation = Rational(1, r.spec.q);
    r.p_substitution = p_substitution(ctx, N);
    r.lower_bound = Rational(n - d, n);
    if (r.p_substitution == r.lower_bound)
        r.classification = Optimality::Optimal;
    else if (r.p_substitution == Rational(n - d + 1, n))
        r.classification = Optimality::AlmostOptimal;
    return r;
}

}  // namespace irrcyc
