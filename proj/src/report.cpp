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

#include "irrcyc/report.hpp"

#include <sstream>

namespace irrcyc::report {

namespace {

std::string join(const std::vector<std::uint32_t>& v, std::string_view sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string braces(const std::vector<std::uint32_t>& v) { return "{" + join(v, ", ") + "}"; }

Json element_json(FqElem x) { return x.is_zero() ? Json(nullptr) : Json(x.exp()); }

}  // namespace

std::string element(FqElem x) { return x.is_zero() ? "0" : "a^" + std::to_string(x.exp()); }
std::string element(Fq2Elem x) { return x.is_zero() ? "0" : "g^" + std::to_string(x.exp()); }

std::string factor(const NormFactor& f) {
    return std::visit(
        [](const auto& g) -> std::string {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, LinearFactor>)
                return "x + " + element(g.constant);
            else if constexpr (std::is_same_v<T, PureQuadraticFactor>)
                return "x^2 + " + element(g.constant);
            else
                return "x^2 + " + element(g.linear) + "*x + " + element(g.constant);
        },
        f);
}

std::string factorization(const FieldContext& ctx, const Factorization& f) {
    std::string out = "x^" + std::to_string(ctx.q() + 1) + " - " + element(f.c) + " =";
    for (const auto& g : f.factors) out += " (" + factor(g) + ")";
    return out;
}

std::string sets(const IrreducibilitySets& s) {
    std::ostringstream os;
    if (s.q_even) {
        os << "R = " << braces(s.reducible) << "\n";
        os << "I = " << braces(s.irreducible) << "\n";
    } else {
        for (int v = 0; v < 2; ++v) {
            os << "R" << v << " = " << braces(s.reducible_odd[v]) << "\n";
            os << "I" << v << " = " << braces(s.irreducible_odd[v]) << "\n";
        }
        os << "s = " << s.two_index << "\n";
        os << "delta = " << (s.minus_one_nonsquare ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string cwe(const CWEnum& e, bool with_zero) {
    std::ostringstream os;
    os << "code: q=" << e.spec.q << " N=" << e.spec.N << " n=" << e.spec.n << " dim=" << e.spec.dim << "\n";
    for (const auto& t : e.terms) {
        os << t.frequency << " x (";
        if (with_zero) os << t.weight.zero_count(e.spec.n) << ";";
        os << join(t.weight.counts) << ")\n";
    }
    os << "total " << e.total() << "\n";
    return os.str();
}

std::string hamming(const HammingDistribution& h) {
    std::ostringstream os;
    for (const auto& t : h.terms) os << "weight " << t.weight << ": " << t.frequency << "\n";
    return os.str();
}

std::string auth(const AuthReport& r) {
    std::ostringstream os;
    os << "code: q=" << r.spec.q << " N=" << r.spec.N << " n=" << r.spec.n << " dim=" << r.spec.dim
       << " d=" << r.min_distance << "\n";
    os << "P_I = " << r.p_impersonation.str() << "\n";
    os << "P_S = " << r.p_substitution.str() << "\n";
    os << "1 - d/n = " << r.lower_bound.str() << "\n";
    os << "classification: " << to_string(r.classification) << "\n";
    return os.str();
}

Json field_json(const FieldContext& ctx) {
    Json j;
    j["p"] = ctx.p();
    j["m"] = ctx.m();
    j["q"] = ctx.q();
    j["fq_min_poly"] = ctx.fq_min_poly();
    j["gamma_min_poly"] = ctx.gamma_min_poly();
    j["seed"] = ctx.seed();
    return j;
}

Json factor_json(const NormFactor& f) {
    return std::visit(
        [](const auto& g) -> Json {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, LinearFactor>)
                return {{"kind", "linear"}, {"args", Json::array({element_json(g.constant)})}};
            else if constexpr (std::is_same_v<T, PureQuadraticFactor>)
                return {{"kind", "pure_quadratic"}, {"args", Json::array({element_json(g.constant)})}};
            else
                return {{"kind", "quadratic"},
                        {"args", Json::array({element_json(g.linear), element_json(g.constant)})}};
        },
        f);
}

Json factorization_json(const Factorization& f) {
    Json j;
    j["c"] = element_json(f.c);
    j["factors"] = Json::array();
    for (const auto& g : f.factors) j["factors"].push_back(factor_json(g));
    return j;
}

Json sets_json(const IrreducibilitySets& s) {
    Json j;
    j["parity"] = s.q_even ? "even" : "odd";
    if (s.q_even) {
        j["R"] = s.reducible;
        j["I"] = s.irreducible;
    } else {
        j["R0"] = s.reducible_odd[0];
        j["R1"] = s.reducible_odd[1];
        j["I0"] = s.irreducible_odd[0];
        j["I1"] = s.irreducible_odd[1];
        j["s"] = s.two_index;
        j["delta"] = s.minus_one_nonsquare ? 1 : 0;
    }
    return j;
}

Json code_spec_json(const CodeSpec& spec) {
    Json j;
    j["q"] = spec.q;
    j["N"] = spec.N;
    j["n"] = spec.n;
    j["dim"] = spec.dim;
    j["t"] = spec.t ? Json(*spec.t) : Json(nullptr);
    j["u"] = spec.u;
    return j;
}

Json cwe_json(const CWEnum& e) {
    Json j;
    j["code"] = code_spec_json(e.spec);
    j["terms"] = Json::array();
    for (const auto& t : e.terms) j["terms"].push_back({{"counts", t.weight.counts}, {"freq", t.frequency}});
    return j;
}

CWEnum cwe_from_json(const Json& j) {
    try {
        CWEnum e;
        const auto& c = j.at("code");
        e.spec.q = c.at("q").get<std::uint32_t>();
        e.spec.N = c.at("N").get<std::uint32_t>();
        e.spec.n = c.at("n").get<std::uint32_t>();
        e.spec.dim = c.at("dim").get<std::uint32_t>();
        if (!c.at("t").is_null()) e.spec.t = c.at("t").get<std::uint32_t>();
        e.spec.u = c.at("u").get<std::uint32_t>();
        for (const auto& t : j.at("terms"))
            e.terms.push_back({CompleteWeight{t.at("counts").get<std::vector<std::uint32_t>>()},
                               t.at("freq").get<std::uint64_t>()});
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::InvalidArgument, std::string("malformed enumerator: ") + ex.what());
    }
}

Json hamming_json(const HammingDistribution& h) {
    Json j = Json::array();
    for (const auto& t : h.terms) j.push_back({{"weight", t.weight}, {"freq", t.frequency}});
    return j;
}

Json auth_json(const AuthReport& r) {
    Json j;
    j["code"] = code_spec_json(r.spec);
    j["min_distance"] = r.min_distance;
    j["p_impersonation"] = r.p_impersonation.str();
    j["p_substitution"] = r.p_substitution.str();
    j["lower_bound"] = r.lower_bound.str();
    j["classification"] = to_string(r.classification);
    return j;
}

Json envelope(std::string_view command, const FieldContext* ctx, Json payload) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["command"] = command;
    j["field"] = ctx ? field_json(*ctx) : Json(nullptr);
    j["payload"] = std::move(payload);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace irrcyc::report
