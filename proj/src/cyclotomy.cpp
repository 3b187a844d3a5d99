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

#include "irrcyc/cyclotomy.hpp"

#include <algorithm>
#include <string>

namespace irrcyc {

CyclotomicClass cyclotomic_class(const FieldContext& ctx, std::uint32_t modulus, std::uint32_t index) {
    if (modulus == 0 || ctx.order() % modulus != 0)
        throw Error(Errc::BadModulus, std::to_string(modulus) + " does not divide q^2 - 1");
    if (index >= modulus) throw Error(Errc::BadRange, "class index out of range");
    return {modulus, index, ctx.order() / modulus};
}

std::uint32_t class_of(const FieldContext& ctx, Fq2Elem x, std::uint32_t modulus) {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "zero lies in no cyclotomic class");
    if (modulus == 0 || ctx.order() % modulus != 0)
        throw Error(Errc::BadModulus, std::to_string(modulus) + " does not divide q^2 - 1");
    return x.exp() % modulus;
}

std::vector<FqElem> class_field_intersection(const FieldContext& ctx, std::uint32_t index) {
    std::vector<FqElem> out;
    for (const auto r : enumerate_class(ctx, ctx.fq_order(), index))
        if (ctx.in_subfield(r)) out.push_back(ctx.project(r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace irrcyc
