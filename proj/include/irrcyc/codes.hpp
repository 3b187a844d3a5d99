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

#ifndef IRRCYC_CODES_HPP
#define IRRCYC_CODES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "irrcyc/galois.hpp"

namespace irrcyc {

/// Parameters of the irreducible cyclic code C_N of length n = (q^2-1)/N.
struct CodeSpec {
    std::uint32_t q = 0;
    std::uint32_t N = 0;
    std::uint32_t n = 0;
    std::uint32_t dim = 0;             // ord_n(q), 1 or 2
    std::optional<std::uint32_t> t;    // (q-1)/N when N | q-1
    std::uint32_t u = 0;               // gcd(q+1, N)

    bool operator==(const CodeSpec&) const = default;
};

/// Throws BadModulus unless N | q^2 - 1.
CodeSpec make_code_spec(const FieldContext& ctx, std::uint32_t N);

using Codeword = std::vector<FqElem>;

/// (f_0, ..., f_{q-2}) with f_i the number of entries equal to alpha^i.
struct CompleteWeight {
    std::vector<std::uint32_t> counts;

    std::uint64_t hamming_weight() const noexcept;
    /// Occurrences of the zero symbol in a word of length n.
    std::uint64_t zero_count(std::uint64_t n) const noexcept { return n - hamming_weight(); }
    std::uint32_t max_count() const noexcept;

    auto operator<=>(const CompleteWeight&) const = default;
};

/// (Tr(a gamma^(N k)))_{k=0}^{n-1}.
Codeword codeword(const FieldContext& ctx, Fq2Elem a, std::uint32_t N);

CompleteWeight complete_weight(const FieldContext& ctx, std::span<const FqElem> word);

struct HammingTerm {
    std::uint64_t weight = 0;
    std::uint64_t frequency = 0;
    auto operator<=>(const HammingTerm&) const = default;
};

/// Nonzero-weight distribution, terms sorted by weight.
struct HammingDistribution {
    std::vector<HammingTerm> terms;

    std::uint64_t total() const noexcept;
    bool operator==(const HammingDistribution&) const = default;
};

/// Closed-form weight distribution of C_N for any N | q^2 - 1 (at most two weights).
HammingDistribution hamming_distribution(const FieldContext& ctx, std::uint32_t N);

/// Least weight with nonzero frequency; throws EmptyDistribution.
std::uint64_t min_distance(const HammingDistribution& h);

}  // namespace irrcyc

#endif
