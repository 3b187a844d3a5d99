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

#ifndef IRRCYC_CYCLOTOMY_HPP
#define IRRCYC_CYCLOTOMY_HPP

#include <cstdint>
#include <ranges>
#include <vector>

#include "irrcyc/galois.hpp"

namespace irrcyc {

/// The coset gamma^index <gamma^modulus> of GF(q^2)*.
struct CyclotomicClass {
    std::uint32_t modulus = 1;
    std::uint32_t index = 0;
    std::uint32_t size = 0;  // (q^2 - 1) / modulus
};

/// Throws BadModulus unless modulus | q^2 - 1, BadRange unless index < modulus.
CyclotomicClass cyclotomic_class(const FieldContext& ctx, std::uint32_t modulus, std::uint32_t index);

/// dlog(x) mod modulus.
std::uint32_t class_of(const FieldContext& ctx, Fq2Elem x, std::uint32_t modulus);

/// Members gamma^(index + modulus*k), k = 0, 1, ..., generated on demand.
inline auto enumerate_class(const FieldContext& ctx, std::uint32_t modulus, std::uint32_t index) {
    const auto cls = cyclotomic_class(ctx, modulus, index);
    const std::uint64_t order = ctx.order();
    return std::views::iota(std::uint32_t{0}, cls.size) |
           std::views::transform([cls, order](std::uint32_t k) {
               return Fq2Elem::power(static_cast<std::uint32_t>((cls.index + std::uint64_t{cls.modulus} * k) % order));
           });
}

/// Members of the class of order q-1 with the given index that lie in GF(q), sorted.
std::vector<FqElem> class_field_intersection(const FieldContext& ctx, std::uint32_t index);

}  // namespace irrcyc

#endif
