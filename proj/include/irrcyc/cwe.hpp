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

#ifndef IRRCYC_CWE_HPP
#define IRRCYC_CWE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "irrcyc/codes.hpp"
#include "irrcyc/factorizer.hpp"
#include "irrcyc/galois.hpp"

namespace irrcyc {

using IntVec = std::vector<std::uint32_t>;

/// Circular shift to the right by i places: the last entry moves to the front.
IntVec shift(std::span<const std::uint32_t> v, std::uint64_t i);

/// Entrywise sum of the |v|/l consecutive blocks of length l. Throws BadBlockLength unless l | |v|.
IntVec fold_sum(std::span<const std::uint32_t> v, std::size_t l);

/// v repeated (q-1)/|v| times. Throws BadBlockLength unless |v| divides q-1.
IntVec repeat_to_full(std::span<const std::uint32_t> v, std::uint32_t q);

/// v repeated k/|v| times. Requires |v| | k and k | q-1.
IntVec repeat_to_k(std::span<const std::uint32_t> v, std::size_t k, std::uint32_t q);

IntVec concat(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
IntVec add_vectors(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/**
 * Complete weights of the codewords c_{q-1}(a) for a in the first cyclotomic
 * classes of order q-1.
 *
 * q even: `w` (length q-1) has 2 at the irreducible indices, 0 elsewhere.
 * q odd: `w0` and `w1` (length (q-1)/2) have 2 at the indices of the
 * respective irreducible set; `w0` additionally carries a single 1 at
 * `two_index`.
 */
struct WeightVectors {
    bool q_even = true;
    std::uint32_t q = 0;
    IntVec w;
    IntVec w0, w1;
    std::uint32_t two_index = 0;
};

WeightVectors build_weight_vectors(const FieldContext& ctx, const IrreducibilitySets& sets);
WeightVectors build_weight_vectors(const FieldContext& ctx);

/// Complete weight of c_{q-1}(b) from the shifted weight vectors.
CompleteWeight codeword_complete_weight(const FieldContext& ctx, const WeightVectors& wv, Fq2Elem b);

struct CweTerm {
    CompleteWeight weight;
    std::uint64_t frequency = 0;
    bool operator==(const CweTerm&) const = default;
};

/// Complete weight enumerator without the constant term; terms merged and
/// sorted lexicographically by count vector.
struct CWEnum {
    CodeSpec spec;
    std::vector<CweTerm> terms;

    std::uint64_t total() const noexcept;
    /// Hamming distribution obtained by summing each term's counts.
    HammingDistribution collapse() const;
    bool operator==(const CWEnum&) const = default;
};

/// Closed form for N | q-1. Throws BadModulus otherwise.
CWEnum cwe_closed_form(const FieldContext& ctx, const WeightVectors& wv, std::uint32_t N);

/**
 * Enumerates c_N(a) for every nonzero a and tallies complete weights.
 *
 * Accepts any N | q^2-1. Zero codewords are skipped; for one-dimensional
 * codes each codeword arises from q distinct a and is counted once.
 * `threads` > 1 splits the enumeration; the result does not depend on it.
 */
CWEnum cwe_brute_force(const FieldContext& ctx, std::uint32_t N, unsigned threads = 1);

/**
 * Evaluates both sides of the shift-sum identity for the weight vectors:
 * sum_m sigma^(j+Nm)(W) against R(sigma^j(G(W, N))) and its odd-q variants
 * (both v when N is even; W0 with sigma^e(W1) when N is odd).
 * j must be below N/2 for even N and below N otherwise.
 */
bool check_shift_sum_identity(const FieldContext& ctx, const WeightVectors& wv, std::uint32_t N, std::uint32_t j,
                              std::uint32_t e);

}  // namespace irrcyc

#endif
