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

#ifndef IRRCYC_TESTS_COMMON_HPP
#define IRRCYC_TESTS_COMMON_HPP

#include <vector>

#include "irrcyc/arith.hpp"
#include "irrcyc/example_fields.hpp"
#include "irrcyc/galois.hpp"

namespace testing {

// Example field for q in {8, 9, 11, 16}, default field otherwise.
inline irrcyc::FieldContext field(std::uint32_t q, std::uint64_t seed = 0) {
    irrcyc::FieldSpec s;
    if (auto ex = irrcyc::example_field_spec(q)) {
        s = *ex;
    } else {
        const auto [p, m] = *irrcyc::arith::prime_power(q);
        s.p = p;
        s.m = m;
    }
    s.seed = seed;
    return irrcyc::build_field(s);
}

inline std::vector<std::uint32_t> orders_up_to(std::uint32_t qmax) {
    std::vector<std::uint32_t> out;
    for (auto q : irrcyc::arith::prime_powers_up_to(qmax)) out.push_back(static_cast<std::uint32_t>(q));
    return out;
}

inline std::vector<std::uint32_t> divisors_of(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (auto d : irrcyc::arith::divisors(n)) out.push_back(static_cast<std::uint32_t>(d));
    return out;
}

template <class F>
std::optional<irrcyc::Errc> error_code(F&& f) {
    try {
        f();
    } catch (const irrcyc::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace testing

#endif
