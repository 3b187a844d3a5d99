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

#ifndef IRRCYC_VERIFY_HPP
#define IRRCYC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irrcyc/report.hpp"

namespace irrcyc {

struct DivisorCheck {
    std::uint32_t N = 0;
    std::size_t terms = 0;
    bool cwe_equal = false;
    bool hamming_consistent = false;
    bool p_substitution_equal = false;

    bool ok() const noexcept { return cwe_equal && hamming_consistent && p_substitution_equal; }
};

struct FieldCheck {
    std::uint32_t q = 0, p = 0, m = 0;
    std::uint32_t factorizations = 0;
    std::uint32_t factorization_failures = 0;
    std::vector<DivisorCheck> divisors;
    std::string error;  // set when a check threw

    bool ok() const noexcept;
};

struct VerifyReport {
    std::uint32_t qmax = 0;
    std::vector<FieldCheck> fields;

    bool ok() const noexcept;
};

/// Every prime power q <= qmax with the default field, every N | q-1.
VerifyReport verify_sweep(std::uint32_t qmax, unsigned threads = 1);

FieldCheck verify_field(const FieldContext& ctx, unsigned threads = 1);

report::Json verify_json(const VerifyReport& r);
std::string verify_text(const VerifyReport& r);

}  // namespace irrcyc

#endif
