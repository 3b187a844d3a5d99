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

#ifndef IRRCYC_REPORT_HPP
#define IRRCYC_REPORT_HPP

#include <json.hpp>
#include <string>

#include "irrcyc/authcodes.hpp"
#include "irrcyc/codes.hpp"
#include "irrcyc/cwe.hpp"
#include "irrcyc/factorizer.hpp"
#include "irrcyc/galois.hpp"

namespace irrcyc::report {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// "a^i", "g^e", "0"
std::string element(FqElem x);
std::string element(Fq2Elem x);

std::string factor(const NormFactor& f);
/// "x^(q+1) - a^e = (x + a^0)(x^2 + a^1*x + a^e)..."
std::string factorization(const FieldContext& ctx, const Factorization& f);
std::string sets(const IrreducibilitySets& s);
/// One line per term: "freq x (f_0,...,f_{q-2})"; with_zero prepends f_{-1}.
std::string cwe(const CWEnum& e, bool with_zero = false);
std::string hamming(const HammingDistribution& h);
std::string auth(const AuthReport& r);

Json field_json(const FieldContext& ctx);
Json factor_json(const NormFactor& f);
Json factorization_json(const Factorization& f);
Json sets_json(const IrreducibilitySets& s);
Json code_spec_json(const CodeSpec& spec);
Json cwe_json(const CWEnum& e);
Json hamming_json(const HammingDistribution& h);
Json auth_json(const AuthReport& r);

/// Inverse of cwe_json. Throws InvalidArgument on malformed input.
CWEnum cwe_from_json(const Json& j);

/// {format_version, command, field, payload}; field is null when absent.
Json envelope(std::string_view command, const FieldContext* ctx, Json payload);

/// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace irrcyc::report

#endif
