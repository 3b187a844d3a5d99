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

#include "irrcyc/galois.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "irrcyc/arith.hpp"

namespace irrcyc {
namespace {

constexpr std::uint32_t kZero = Fq2Elem::kZeroRaw;

PrimePoly trimmed(PrimePoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Remainder of a modulo the monic polynomial f.
PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, std::uint32_t p) {
    a = trimmed(std::move(a));
    const std::size_t d = f.size() - 1;
    while (a.size() > d) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - lead * f[i] % p) % p);
        a = trimmed(std::move(a));
    }
    return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    PrimePoly out(acc.begin(), acc.end());
    return poly_mod(std::move(out), f, p);
}

PrimePoly poly_powmod_x(std::uint64_t e, const PrimePoly& f, std::uint32_t p) {
    PrimePoly result = poly_mod({1}, f, p);
    PrimePoly base = poly_mod({0, 1}, f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_monic(const PrimePoly& f) { return !f.empty() && f.back() == 1; }

// Least monic primitive polynomial of the given degree, coefficients compared
// low degree first.
PrimePoly default_primitive(std::uint32_t p, std::uint32_t degree) {
    const std::uint64_t total = *arith::checked_pow(p, degree);
    const std::uint64_t stride = total / p;  // weight of c_0
    for (std::uint64_t idx = stride; idx < total; ++idx) {
        PrimePoly f(degree + 1, 0);
        f[degree] = 1;
        std::uint64_t weight = stride;
        for (std::uint32_t i = 0; i < degree; ++i, weight /= p) f[i] = static_cast<std::uint32_t>(idx / weight % p);
        if (prime_poly_is_primitive(f, p)) return f;
    }
    throw Error(Errc::NoSuchPrimitive, "no primitive polynomial found");  // unreachable for prime p
}

// Minimal polynomial over GF(p) of x, from the Frobenius orbit of x.
PrimePoly min_poly_of(const FieldContext& ctx, Fq2Elem x) {
    std::vector<Fq2Elem> orbit{x};
    for (Fq2Elem y = ctx.pow(x, ctx.p()); y != x; y = ctx.pow(y, ctx.p())) orbit.push_back(y);
    std::vector<Fq2Elem> prod{ctx.one()};
    for (const auto r : orbit) {
        std::vector<Fq2Elem> next(prod.size() + 1, Fq2Elem::zero());
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], prod[i]);
            next[i] = ctx.sub(next[i], ctx.mul(prod[i], r));
        }
        prod = std::move(next);
    }
    PrimePoly out;
    out.reserve(prod.size());
    for (const auto c : prod) {
        const auto coords = ctx.coordinates(c);
        if (std::any_of(coords.begin() + 1, coords.end(), [](auto v) { return v != 0; }))
            throw Error(Errc::ParadoxicalField, "minimal polynomial coefficient outside GF(p)");
        out.push_back(coords[0]);
    }
    return out;
}

}  // namespace

bool prime_poly_is_irreducible(const PrimePoly& f_in, std::uint32_t p) {
    const auto f = trimmed(f_in);
    if (f.size() < 2 || !is_monic(f)) return false;
    const std::size_t d = f.size() - 1;
    for (std::size_t k = 1; 2 * k <= d; ++k) {
        const std::uint64_t count = *arith::checked_pow(p, static_cast<std::uint32_t>(k));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(k + 1, 0);
            g[k] = 1;
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < k; ++i, rest /= p) g[i] = static_cast<std::uint32_t>(rest % p);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool prime_poly_is_primitive(const PrimePoly& f_in, std::uint32_t p) {
    const auto f = trimmed(f_in);
    if (f.size() < 2 || !is_monic(f) || f[0] == 0) return false;
    const auto size = arith::checked_pow(p, static_cast<std::uint32_t>(f.size() - 1));
    if (!size) return false;
    const std::uint64_t group = *size - 1;
    const PrimePoly one = poly_mod({1}, f, p);
    if (poly_powmod_x(group, f, p) != one) return false;
    for (const auto r : arith::prime_factors(group))
        if (poly_powmod_x(group / r, f, p) == one) return false;
    return true;
}

PrimePoly parse_prime_poly(const std::vector<std::int64_t>& coeffs, std::uint32_t p) {
    if (!arith::is_prime(p)) throw Error(Errc::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
    PrimePoly out;
    out.reserve(coeffs.size());
    for (const auto c : coeffs) out.push_back(static_cast<std::uint32_t>(arith::mod(c, p)));
    return trimmed(std::move(out));
}

FieldContext::FieldContext(std::uint32_t p, std::uint32_t m, const PrimePoly& defining)
    : p_(p), m_(m), gamma_poly_(defining) {
    q_ = static_cast<std::uint32_t>(*arith::checked_pow(p, m));
    const std::uint64_t size = std::uint64_t{q_} * q_;
    order_ = static_cast<std::uint32_t>(size - 1);
    const std::uint32_t degree = 2 * m;

    antilog_.assign(order_, 0);
    dlog_.assign(size, kZero);
    std::vector<std::uint32_t> digits(degree, 0);
    digits[0] = 1;
    for (std::uint32_t e = 0; e < order_; ++e) {
        std::uint32_t repr = 0;
        for (std::uint32_t i = degree; i-- > 0;) repr = repr * p + digits[i];
        if (dlog_[repr] != kZero) throw Error(Errc::NoSuchPrimitive, "defining polynomial is not primitive");
        antilog_[e] = repr;
        dlog_[repr] = e;
        // multiply by x modulo the monic defining polynomial
        const std::uint64_t top = digits[degree - 1];
        for (std::uint32_t i = degree - 1; i > 0; --i)
            digits[i] = static_cast<std::uint32_t>((digits[i - 1] + p - top * defining[i] % p) % p);
        digits[0] = static_cast<std::uint32_t>((p - top * defining[0] % p) % p);
    }

    zech_.assign(order_, kZero);
    for (std::uint32_t d = 0; d < order_; ++d) {
        const auto r = add_repr(1, antilog_[d]);
        zech_[d] = r == 0 ? kZero : dlog_[r];
    }

    trace_.assign(order_, kZero);
    for (std::uint32_t e = 0; e < order_; ++e) {
        const Fq2Elem x = Fq2Elem::power(e);
        const Fq2Elem t = add(x, pow(x, q_));
        trace_[e] = project(t).raw();
    }
}

std::uint32_t FieldContext::add_repr(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    while (a != 0 || b != 0) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Fq2Elem FieldContext::gamma_pow(std::int64_t e) const noexcept {
    return Fq2Elem::power(static_cast<std::uint32_t>(arith::mod(e, order_)));
}

Fq2Elem FieldContext::mul(Fq2Elem a, Fq2Elem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return Fq2Elem::zero();
    return Fq2Elem::power(static_cast<std::uint32_t>((std::uint64_t{a.raw()} + b.raw()) % order_));
}

Fq2Elem FieldContext::add(Fq2Elem a, Fq2Elem b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t d = b.raw() >= a.raw() ? b.raw() - a.raw() : b.raw() + order_ - a.raw();
    const std::uint32_t z = zech_[d];
    if (z == kZero) return Fq2Elem::zero();
    return Fq2Elem::power(static_cast<std::uint32_t>((std::uint64_t{a.raw()} + z) % order_));
}

Fq2Elem FieldContext::minus_one() const noexcept {
    return p_ == 2 ? one() : Fq2Elem::power(order_ / 2);
}

Fq2Elem FieldContext::neg(Fq2Elem a) const noexcept { return mul(a, minus_one()); }

Fq2Elem FieldContext::inv(Fq2Elem a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return Fq2Elem::power(a.raw() == 0 ? 0 : order_ - a.raw());
}

Fq2Elem FieldContext::pow(Fq2Elem a, std::int64_t k) const {
    if (a.is_zero()) {
        if (k < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
        return k == 0 ? one() : Fq2Elem::zero();
    }
    const std::uint64_t kk = arith::mod(k, order_);
    return Fq2Elem::power(static_cast<std::uint32_t>(std::uint64_t{a.raw()} * kk % order_));
}

FqElem FieldContext::trace(Fq2Elem x) const noexcept {
    if (x.is_zero()) return FqElem::zero();
    return FqElem::power(trace_[x.raw()]);  // kZeroRaw encodes zero
}

FqElem FieldContext::norm(Fq2Elem x) const noexcept {
    if (x.is_zero()) return FqElem::zero();
    return FqElem::power(x.raw() % fq_order());
}

Fq2Elem FieldContext::embed(FqElem a) const noexcept {
    if (a.is_zero()) return Fq2Elem::zero();
    return Fq2Elem::power(a.raw() * (q_ + 1));
}

bool FieldContext::in_subfield(Fq2Elem x) const noexcept { return x.is_zero() || x.raw() % (q_ + 1) == 0; }

FqElem FieldContext::project(Fq2Elem x) const {
    if (x.is_zero()) return FqElem::zero();
    if (!in_subfield(x)) throw Error(Errc::InvalidArgument, "element is not in GF(q)");
    return FqElem::power(x.raw() / (q_ + 1));
}

FqElem FieldContext::alpha_pow(std::int64_t e) const noexcept {
    return FqElem::power(static_cast<std::uint32_t>(arith::mod(e, fq_order())));
}

FqElem FieldContext::fq_add(FqElem a, FqElem b) const noexcept { return project(add(embed(a), embed(b))); }

FqElem FieldContext::fq_neg(FqElem a) const noexcept { return project(neg(embed(a))); }

FqElem FieldContext::fq_mul(FqElem a, FqElem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return FqElem::zero();
    return alpha_pow(std::int64_t{a.raw()} + b.raw());
}

FqElem FieldContext::fq_inv(FqElem a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return alpha_pow(-std::int64_t{a.raw()});
}

FqElem FieldContext::fq_pow(FqElem a, std::int64_t k) const { return project(pow(embed(a), k)); }

FqElem FieldContext::fq_from_int(std::int64_t k) const noexcept {
    const auto r = static_cast<std::uint32_t>(arith::mod(k, p_));
    if (r == 0) return FqElem::zero();
    return project(Fq2Elem::power(dlog_[r]));
}

std::vector<std::uint32_t> FieldContext::coordinates(Fq2Elem x) const {
    std::vector<std::uint32_t> out(2 * m_, 0);
    if (x.is_zero()) return out;
    auto repr = antilog_[x.raw()];
    for (auto& c : out) {
        c = repr % p_;
        repr /= p_;
    }
    return out;
}

Fq2Elem FieldContext::from_coordinates(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != 2 * m_) throw Error(Errc::InvalidArgument, "coordinate vector has wrong length");
    std::uint32_t repr = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= p_) throw Error(Errc::InvalidArgument, "coordinate outside GF(p)");
        repr = repr * p_ + coords[i];
    }
    return repr == 0 ? Fq2Elem::zero() : Fq2Elem::power(dlog_[repr]);
}

Fq2Elem FieldContext::evaluate(const PrimePoly& f, Fq2Elem x) const noexcept {
    Fq2Elem acc = Fq2Elem::zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = mul(acc, x);
        const auto c = f[i] % p_;
        if (c != 0) acc = add(acc, Fq2Elem::power(dlog_[c]));
    }
    return acc;
}

FieldContext build_field(const FieldSpec& spec) {
    if (!arith::is_prime(spec.p)) throw Error(Errc::InvalidArgument, "p = " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 1) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
    const auto size = arith::checked_pow(spec.p, 2 * spec.m);
    if (!size || *size > spec.table_cap || *size > std::uint64_t{UINT32_MAX})
        throw Error(Errc::SizeLimit, "p^(2m) exceeds the table cap of " + std::to_string(spec.table_cap));

    if (spec.fq_min_poly) {
        const auto& g = *spec.fq_min_poly;
        if (g.size() != spec.m + 1 || !is_monic(g) ||
            std::any_of(g.begin(), g.end(), [&](auto c) { return c >= spec.p; }))
            throw Error(Errc::InvalidArgument, "fq_min_poly must be monic of degree m over GF(p)");
        if (!prime_poly_is_primitive(g, spec.p)) {
            if (prime_poly_is_irreducible(g, spec.p))
                throw Error(Errc::NoSuchPrimitive, "fq_min_poly is irreducible but not primitive");
            throw Error(Errc::NotIrreducible, "fq_min_poly is reducible");
        }
    }

    FieldContext base(spec.p, spec.m, default_primitive(spec.p, 2 * spec.m));
    const std::uint32_t qm1 = base.fq_order();

    // alpha_k := base-gamma^((q+1)k); pick the least k matching the requested minimal polynomial.
    std::uint32_t k = 1 % qm1;
    if (spec.fq_min_poly) {
        k = qm1;
        for (std::uint32_t i = 0; i < qm1; ++i) {
            if (base.evaluate(*spec.fq_min_poly, base.embed(FqElem::power(i))).is_zero()) {
                k = i;
                break;
            }
        }
        if (k == qm1) throw Error(Errc::ParadoxicalField, "primitive polynomial has no root in GF(q)");
    }

    // One candidate per Frobenius orbit: conjugate generators give identical tables.
    std::vector<std::uint32_t> candidates;
    std::vector<bool> seen(base.order(), false);
    for (std::uint64_t e = k; e < base.order(); e += qm1) {
        if (std::gcd(e, std::uint64_t{base.order()}) != 1 || seen[e]) continue;
        candidates.push_back(static_cast<std::uint32_t>(e));
        for (std::uint64_t c = e, r = 0; r < 2 * spec.m; ++r, c = c * spec.p % base.order()) seen[c] = true;
    }
    const std::uint32_t chosen = candidates[spec.seed % candidates.size()];

    FieldContext ctx = chosen == 1 ? std::move(base)
                                   : FieldContext(spec.p, spec.m, min_poly_of(base, Fq2Elem::power(chosen)));
    ctx.alpha_poly_ = min_poly_of(ctx, ctx.embed(ctx.alpha()));
    ctx.seed_ = spec.seed;
    ctx.compatible_ = candidates.size();
    return ctx;
}

}  // namespace irrcyc
