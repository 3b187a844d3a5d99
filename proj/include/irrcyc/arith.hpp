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

#ifndef IRRCYC_ARITH_HPP
#define IRRCYC_ARITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small integer helpers shared by the field and code modules.
namespace irrcyc::arith {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Prime powers 2 <= q <= qmax in increasing order.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t qmax);

/// p^e, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t e) noexcept;

/// Multiplicative order of q modulo n (n >= 1, gcd(q, n) = 1). ord_1(q) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

/// Non-negative remainder of a modulo n.
constexpr std::uint64_t mod(std::int64_t a, std::uint64_t n) noexcept {
    const auto r = a % static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

/// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) noexcept;

}  // namespace irrcyc::arith

#endif
