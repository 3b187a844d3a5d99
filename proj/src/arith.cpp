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

#include "irrcyc/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "irrcyc/error.hpp"

namespace irrcyc {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NoSuchPrimitive: return "NoSuchPrimitive";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::SizeLimit: return "SizeLimit";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::BadModulus: return "BadModulus";
        case Errc::BadBlockLength: return "BadBlockLength";
        case Errc::BadRange: return "BadRange";
        case Errc::EmptyDistribution: return "EmptyDistribution";
        case Errc::ParadoxicalField: return "ParadoxicalField";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace arith {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto primes = prime_factors(q);
    if (primes.size() != 1) return std::nullopt;
    std::uint32_t m = 0;
    for (auto r = q; r > 1; r /= primes[0]) ++m;
    return std::pair{static_cast<std::uint32_t>(primes[0]), m};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t qmax) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= qmax; ++q)
        if (prime_power(q)) out.push_back(q);
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t e) noexcept {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (p != 0 && r > UINT64_MAX / p) return std::nullopt;
        r *= p;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "order modulo zero");
    if (n == 1) return 1;
    if (std::gcd(q, n) != 1) throw Error(Errc::InvalidArgument, "base not coprime to modulus");
    std::uint64_t x = q % n, k = 1;
    while (x != 1) {
        x = x * q % n;
        ++k;
    }
    return k;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) noexcept {
    if (n == 1) return 0;
    std::int64_t r0 = static_cast<std::int64_t>(n), r1 = static_cast<std::int64_t>(a % n);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const auto k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        t0 -= k * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) return std::nullopt;
    return mod(t0, n);
}

}  // namespace arith
}  // namespace irrcyc
