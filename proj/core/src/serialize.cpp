/*
   Copyright 2026 The dtlsum Authors

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

#include "dtlsum/serialize.hpp"

#include <stdexcept>

namespace dtlsum {

json to_json(const Cyclo& c) { return json{{"a", c.a().to_string()}, {"b", c.b().to_string()}}; }

Cyclo cyclo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() || !j["b"].is_string()) {
        throw std::invalid_argument("expected {\"a\": \"p/q\", \"b\": \"r/s\"}");
    }
    return Cyclo(Rational::parse(j["a"].get<std::string>()), Rational::parse(j["b"].get<std::string>()));
}

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    const std::size_t n = p.vars()->size();
    for (const auto& [m, c] : p.terms()) {
        json e = json::array();
        for (std::size_t i = 0; i < n; ++i) e.push_back(m.e[i]);
        terms.push_back(json{{"exponents", std::move(e)}, {"coeff", to_json(c)}});
    }
    return json{{"vars", p.vars()->names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw std::invalid_argument("expected {\"vars\": [...], \"terms\": [...]}");
    }
    auto vars = VarSet::make(j["vars"].get<std::vector<std::string>>());
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j["terms"]) {
        const auto& e = t.at("exponents");
        if (!e.is_array() || e.size() != vars->size()) {
            throw std::invalid_argument("exponent vector length does not match vars");
        }
        Monomial m;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int v = e[i].get<int>();
            if (v < INT16_MIN || v > INT16_MAX) throw std::invalid_argument("exponent out of range");
            m.e[i] = static_cast<std::int16_t>(v);
        }
        terms.emplace_back(m, cyclo_from_json(t.at("coeff")));
    }
    return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

json to_json(const EvalPoint& pt) {
    json j = json::object();
    for (std::size_t i = 0; i < pt.values.size(); ++i) j[pt.vars->name(i)] = to_json(pt.values[i]);
    return j;
}

}  // namespace dtlsum
