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

#ifndef IRRCYC_EXAMPLE_FIELDS_HPP
#define IRRCYC_EXAMPLE_FIELDS_HPP

#include <array>
#include <optional>

#include "irrcyc/galois.hpp"

namespace irrcyc {

// Fields of the worked examples, alpha fixed by its minimal polynomial.
inline std::optional<FieldSpec> example_field_spec(std::uint32_t q) {
    auto make = [](std::uint32_t p, std::uint32_t m, PrimePoly g) {
        FieldSpec s;
        s.p = p;
        s.m = m;
        s.fq_min_poly = std::move(g);
        return s;
    };
    switch (q) {
        case 8: return make(2, 3, {1, 1, 0, 1});      // a^3 + a + 1
        case 9: return make(3, 2, {2, 1, 1});         // a^2 + a + 2
        case 11: return make(11, 1, {9, 1});          // a = 2
        case 16: return make(2, 4, {1, 1, 0, 0, 1});  // a^4 + a + 1
        default: return std::nullopt;
    }
}

inline constexpr std::array<std::uint32_t, 4> kExampleFieldOrders{8, 9, 11, 16};

}  // namespace irrcyc

#endif
