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

#ifndef IRRCYC_AUTHCODES_HPP
#define IRRCYC_AUTHCODES_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "irrcyc/codes.hpp"
#include "irrcyc/cwe.hpp"
#include "irrcyc/galois.hpp"

namespace irrcyc {

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/**
 * Tag of source state s under key (k1, k2): symbol k1 of the s-th codeword
 * plus k2. Codewords are indexed by a = 0, gamma^0, gamma^1, ...
 * Throws BadRange unless s < q^dim and k1 < n.
 */
FqElem encode(const FieldContext& ctx, std::uint32_t N, std::uint64_t s, std::uint32_t k1, FqElem k2);

/// Largest fraction of positions taken by a single symbol (zero included) over nonzero codewords.
Rational p_substitution(const CWEnum& cwe);
/// Uses the closed form when N | q-1 and enumeration otherwise.
Rational p_substitution(const FieldContext& ctx, std::uint32_t N);

enum class Optimality { Optimal, AlmostOptimal, Neither };
std::string_view to_string(Optimality o) noexcept;

struct AuthReport {
    CodeSpec spec;
    std::uint64_t min_distance = 0;
    Rational p_impersonation;
    Rational p_substitution;
    Rational lower_bound;  // 1 - d/n
    Optimality classification = Optimality::Neither;
};

AuthReport classify(const FieldContext& ctx, std::uint32_t N);

}  // namespace irrcyc

#endif
