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

#ifndef IRRCYC_TESTS_ORACLE_HPP
#define IRRCYC_TESTS_ORACLE_HPP

// Reference arithmetic for tests. Works on coefficient vectors modulo the
// minimal polynomial of gamma and shares no tables with the library.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "irrcyc/galois.hpp"

namespace oracle {

using Vec = std::vector<std::uint32_t>;

// GF(p)[x] / (f) with f monic of degree d.
class PolyField {
public:
    PolyField(std::uint32_t p, Vec f) : p_(p), f_(std::move(f)), d_(f_.size() - 1) {
        if (f_.back() != 1) throw std::invalid_argument("modulus must be monic");
    }

    std::size_t degree() const { return d_; }
    Vec zero() const { return Vec(d_, 0); }
    Vec one() const {
        Vec v = zero();
        v[0] = 1;
        return v;
    }
    Vec x() const {
        Vec v = zero();
        if (d_ == 1)
            v[0] = (p_ - f_[0]) % p_;
        else
            v[1] = 1;
        return v;
    }
    Vec constant(std::uint32_t k) const {
        Vec v = zero();
        v[0] = k % p_;
        return v;
    }

    Vec add(const Vec& a, const Vec& b) const {
        Vec r(d_);
        for (std::size_t i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Vec mul(const Vec& a, const Vec& b) const {
        std::vector<std::uint64_t> t(2 * d_, 0);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) t[i + j] = (t[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
        for (std::size_t k = 2 * d_ - 1; k >= d_; --k) {
            const std::uint64_t c = t[k];
            if (c == 0) continue;
            t[k] = 0;
            for (std::size_t i = 0; i < d_; ++i) t[k - d_ + i] = (t[k - d_ + i] + (p_ - f_[i]) * c) % p_;
        }
        return Vec(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(d_));
    }
    Vec pow(Vec a, std::uint64_t e) const {
        Vec r = one();
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    bool is_zero(const Vec& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }

private:
    std::uint32_t p_;
    Vec f_;
    std::size_t d_;
};

/// The tower rebuilt from (p, m, gamma_min_poly) alone.
class Tower {
public:
    explicit Tower(const irrcyc::FieldContext& ctx)
        : big_(ctx.p(), ctx.gamma_min_poly()), q_(ctx.q()), order_(ctx.order()) {
        Vec g = big_.one();
        gamma_.reserve(order_);
        for (std::uint32_t k = 0; k < order_; ++k, g = big_.mul(g, big_.x())) gamma_.push_back(g);
        if (g != big_.one()) throw std::logic_error("gamma order mismatch");
        for (std::uint32_t i = 0; i + 1 < q_; ++i) alpha_log_[gamma_[(std::uint64_t{q_} + 1) * i % order_]] = i;
    }

    std::uint32_t q() const { return q_; }
    const PolyField& field() const { return big_; }
    const Vec& gamma_pow(std::uint64_t e) const { return gamma_[e % order_]; }
    Vec alpha_pow(std::uint64_t i) const { return gamma_pow((std::uint64_t{q_} + 1) * (i % (q_ - 1))); }

    /// alpha-exponent of an element of GF(q), nullopt for zero.
    std::optional<std::uint32_t> alpha_log(const Vec& v) const {
        if (big_.is_zero(v)) return std::nullopt;
        auto it = alpha_log_.find(v);
        if (it == alpha_log_.end()) throw std::logic_error("element outside GF(q)");
        return it->second;
    }

    std::optional<std::uint32_t> trace_of_gamma_pow(std::uint64_t e) const {
        const Vec& y = gamma_pow(e);
        return alpha_log(big_.add(y, big_.pow(y, q_)));
    }

    /// Root search for x^2 + b x + c over GF(q); exponents, nullopt meaning zero.
    bool quadratic_has_root(std::optional<std::uint32_t> b, std::optional<std::uint32_t> c) const {
        const Vec bv = b ? alpha_pow(*b) : big_.zero(), cv = c ? alpha_pow(*c) : big_.zero();
        auto value = [&](const Vec& r) { return big_.add(big_.add(big_.mul(r, r), big_.mul(bv, r)), cv); };
        if (big_.is_zero(value(big_.zero()))) return true;
        for (std::uint32_t i = 0; i + 1 < q_; ++i)
            if (big_.is_zero(value(alpha_pow(i)))) return true;
        return false;
    }

    /// Complete-weight tally over all nonzero a, zero codewords dropped, one-dimensional codes deduplicated.
    std::map<Vec, std::uint64_t> cwe(std::uint32_t N, bool one_dimensional) const {
        std::vector<std::optional<std::uint32_t>> tr(order_);
        for (std::uint32_t e = 0; e < order_; ++e) tr[e] = trace_of_gamma_pow(e);
        std::map<Vec, std::uint64_t> out;
        const std::uint32_t n = order_ / N;
        for (std::uint32_t e = 0; e < order_; ++e) {
            Vec counts(q_ - 1, 0);
            bool nonzero = false;
            for (std::uint32_t k = 0; k < n; ++k)
                if (auto t = tr[(e + std::uint64_t{N} * k) % order_]) ++counts[*t], nonzero = true;
            if (nonzero) ++out[counts];
        }
        if (one_dimensional)
            for (auto& [v, f] : out) f /= q_;
        return out;
    }

private:
    PolyField big_;
    std::uint32_t q_, order_;
    std::vector<Vec> gamma_;
    std::map<Vec, std::uint32_t> alpha_log_;
};

}  // namespace oracle

#endif
