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

#ifndef IRRCYC_FACTORIZER_HPP
#define IRRCYC_FACTORIZER_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "irrcyc/galois.hpp"

namespace irrcyc {

/// Dense polynomial over GF(q), low degree first, without trailing zeros.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<FqElem> coeffs);

    const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    FqElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElem::zero(); }
    std::size_t nonzero_terms() const noexcept;

    bool operator==(const Polynomial&) const = default;

   private:
    std::vector<FqElem> coeffs_;
};

Polynomial multiply(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);

/// x^(q+1) - c.
Polynomial norm_polynomial(const FieldContext& ctx, FqElem c);

// The three factor shapes occurring in x^(q+1) - c.
struct LinearFactor {  // x + constant
    FqElem constant;
    auto operator<=>(const LinearFactor&) const = default;
};
struct PureQuadraticFactor {  // x^2 + constant
    FqElem constant;
    auto operator<=>(const PureQuadraticFactor&) const = default;
};
struct QuadraticFactor {  // x^2 + linear*x + constant, linear != 0
    FqElem linear;
    FqElem constant;
    auto operator<=>(const QuadraticFactor&) const = default;
};

/// Ordering: linears, then the pure quadratic, then quadratics by linear coefficient.
using NormFactor = std::variant<LinearFactor, PureQuadraticFactor, QuadraticFactor>;

int degree(const NormFactor& f) noexcept;
Polynomial to_polynomial(const NormFactor& f);

struct Factorization {
    FqElem c;
    std::vector<NormFactor> factors;  // canonical order

    int total_degree() const noexcept;
    bool operator==(const Factorization&) const = default;
};

/**
 * Index sets deciding irreducibility of x^2 + alpha^i x + alpha^v.
 *
 * q even: x^2 + alpha^i x + alpha is irreducible iff i is in `irreducible`
 * (complement `reducible` within [0, q-2]).
 * q odd: x^2 + alpha^i x + alpha^v is irreducible iff i mod (q-1)/2 is in
 * `irreducible_odd[v]`; `two_index` is the unique s < (q-1)/2 with
 * alpha^s = 2 or -2, and `minus_one_nonsquare` is set iff q = 3 (mod 4).
 * All sets are sorted.
 */
struct IrreducibilitySets {
    bool q_even = true;
    std::vector<std::uint32_t> reducible, irreducible;
    std::array<std::vector<std::uint32_t>, 2> reducible_odd, irreducible_odd;
    std::uint32_t two_index = 0;
    bool minus_one_nonsquare = false;
};

IrreducibilitySets irreducibility_sets(const FieldContext& ctx);

/// Closed-form factorization of x^(q+1) - c and its brute-force counterpart.
/// Holds a reference to the field, which must outlive it.
class Factorizer {
   public:
    explicit Factorizer(const FieldContext& ctx);

    const FieldContext& field() const noexcept { return *ctx_; }
    const IrreducibilitySets& sets() const noexcept { return sets_; }

    bool is_irreducible_quadratic(FqElem b, FqElem c) const;
    Factorization factor_norm_poly(FqElem c) const;
    Factorization brute_force_factor(FqElem c) const;

   private:
    bool in_set(const std::vector<std::uint32_t>& set, std::uint32_t i) const;
    /// For q even, the j with 2j+1 = e (mod q-1).
    std::uint32_t even_half_index(std::uint32_t e) const;

    const FieldContext* ctx_;
    IrreducibilitySets sets_;
};

/// x - r when r lies in GF(q), otherwise (x - r)(x - r^q) = x^2 - Tr(r)x + N(r).
Polynomial quadratic_from_root(const FieldContext& ctx, Fq2Elem r);

Polynomial expand(const FieldContext& ctx, const Factorization& f);

}  // namespace irrcyc

#endif
