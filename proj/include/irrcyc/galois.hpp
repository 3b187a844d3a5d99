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

#ifndef IRRCYC_GALOIS_HPP
#define IRRCYC_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "irrcyc/error.hpp"

namespace irrcyc {

/**
 * A nonzero field element stored by its discrete logarithm, or ZERO.
 *
 * For GF(q^2) the logarithm is taken w.r.t. the fixed primitive element gamma;
 * for GF(q) it is taken w.r.t. alpha = gamma^(q+1). The tag keeps the two
 * fields apart at compile time. Exponents are kept reduced by FieldContext;
 * ZERO orders after every power.
 */
template <class Tag>
class PowerElement {
   public:
    static constexpr std::uint32_t kZeroRaw = std::numeric_limits<std::uint32_t>::max();

    constexpr PowerElement() noexcept = default;
    static constexpr PowerElement zero() noexcept { return PowerElement(); }
    static constexpr PowerElement power(std::uint32_t exp) noexcept { return PowerElement(exp); }

    constexpr bool is_zero() const noexcept { return raw_ == kZeroRaw; }
    constexpr std::uint32_t exp() const {
        if (is_zero()) throw Error(Errc::ZeroElement, "zero has no discrete logarithm");
        return raw_;
    }
    constexpr std::uint32_t raw() const noexcept { return raw_; }

    constexpr auto operator<=>(const PowerElement&) const noexcept = default;

   private:
    constexpr explicit PowerElement(std::uint32_t exp) noexcept : raw_(exp) {}
    std::uint32_t raw_ = kZeroRaw;
};

struct FqTag;
struct Fq2Tag;
using FqElem = PowerElement<FqTag>;
using Fq2Elem = PowerElement<Fq2Tag>;

/// Coefficients over GF(p), low degree first.
using PrimePoly = std::vector<std::uint32_t>;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    /// Monic minimal polynomial of alpha over GF(p), degree m.
    std::optional<PrimePoly> fq_min_poly;
    /// Selects among the primitive gamma with gamma^(q+1) = alpha.
    std::uint64_t seed = 0;
    /// Upper bound on q^2 (number of table entries).
    std::uint64_t table_cap = std::uint64_t{1} << 20;
};

/**
 * The tower GF(p) < GF(q) < GF(q^2) with gamma primitive in GF(q^2) and
 * alpha = gamma^(q+1). Immutable after construction.
 *
 * Elements of GF(q^2) live in a polynomial basis over GF(p) modulo
 * gamma_min_poly(); a coordinate vector c_0 + c_1 x + ... is packed into the
 * integer sum c_i p^i ("repr"). Addition goes through a Zech logarithm table.
 */
class FieldContext {
   public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// q^2 - 1, the order of GF(q^2)*.
    std::uint32_t order() const noexcept { return order_; }
    /// q - 1, the order of GF(q)*.
    std::uint32_t fq_order() const noexcept { return q_ - 1; }
    bool q_is_even() const noexcept { return p_ == 2; }

    const PrimePoly& gamma_min_poly() const noexcept { return gamma_poly_; }
    const PrimePoly& fq_min_poly() const noexcept { return alpha_poly_; }
    std::uint64_t seed() const noexcept { return seed_; }
    /// Number of non-conjugate primitive gamma over alpha; the seed is reduced modulo this.
    std::uint64_t compatible_gammas() const noexcept { return compatible_; }

    Fq2Elem gamma() const noexcept { return Fq2Elem::power(1 % order_); }
    FqElem alpha() const noexcept { return FqElem::power(1 % fq_order()); }
    Fq2Elem one() const noexcept { return Fq2Elem::power(0); }

    // GF(q^2) arithmetic.
    Fq2Elem gamma_pow(std::int64_t e) const noexcept;
    Fq2Elem mul(Fq2Elem a, Fq2Elem b) const noexcept;
    Fq2Elem add(Fq2Elem a, Fq2Elem b) const noexcept;
    Fq2Elem neg(Fq2Elem a) const noexcept;
    Fq2Elem sub(Fq2Elem a, Fq2Elem b) const noexcept { return add(a, neg(b)); }
    Fq2Elem inv(Fq2Elem a) const;
    Fq2Elem pow(Fq2Elem a, std::int64_t k) const;
    Fq2Elem minus_one() const noexcept;

    /// x + x^q.
    FqElem trace(Fq2Elem x) const noexcept;
    /// x^(q+1).
    FqElem norm(Fq2Elem x) const noexcept;

    // The GF(q) embedding: alpha^k <-> gamma^((q+1)k).
    Fq2Elem embed(FqElem a) const noexcept;
    bool in_subfield(Fq2Elem x) const noexcept;
    FqElem project(Fq2Elem x) const;

    // GF(q) arithmetic.
    FqElem alpha_pow(std::int64_t e) const noexcept;
    FqElem fq_add(FqElem a, FqElem b) const noexcept;
    FqElem fq_neg(FqElem a) const noexcept;
    FqElem fq_sub(FqElem a, FqElem b) const noexcept { return fq_add(a, fq_neg(b)); }
    FqElem fq_mul(FqElem a, FqElem b) const noexcept;
    FqElem fq_inv(FqElem a) const;
    FqElem fq_pow(FqElem a, std::int64_t k) const;
    /// The image of an integer in the prime field.
    FqElem fq_from_int(std::int64_t k) const noexcept;

    /// Polynomial-basis coordinates over GF(p), length 2m.
    std::vector<std::uint32_t> coordinates(Fq2Elem x) const;
    Fq2Elem from_coordinates(const std::vector<std::uint32_t>& coords) const;

    /// Evaluates a GF(p) polynomial at an element of GF(q^2).
    Fq2Elem evaluate(const PrimePoly& f, Fq2Elem x) const noexcept;

    friend FieldContext build_field(const FieldSpec& spec);

   private:
    FieldContext(std::uint32_t p, std::uint32_t m, const PrimePoly& defining);
    std::uint32_t add_repr(std::uint32_t a, std::uint32_t b) const noexcept;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0, order_ = 0;
    PrimePoly gamma_poly_, alpha_poly_;
    std::uint64_t seed_ = 0, compatible_ = 0;
    std::vector<std::uint32_t> antilog_;  // exponent -> repr
    std::vector<std::uint32_t> dlog_;     // repr -> exponent (repr 0 unused)
    std::vector<std::uint32_t> zech_;     // e -> log(1 + gamma^e), kZeroRaw for 0
    std::vector<std::uint32_t> trace_;    // e -> raw FqElem of Tr(gamma^e)
};

FieldContext build_field(const FieldSpec& spec);

/// Reduces integer coefficients modulo p; throws unless p is prime.
PrimePoly parse_prime_poly(const std::vector<std::int64_t>& coeffs, std::uint32_t p);

// GF(p)[x] utilities, exposed for validation and testing.
bool prime_poly_is_irreducible(const PrimePoly& f, std::uint32_t p);
bool prime_poly_is_primitive(const PrimePoly& f, std::uint32_t p);

}  // namespace irrcyc

#endif
