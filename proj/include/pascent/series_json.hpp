#ifndef PASCENT_SERIES_JSON_HPP
#define PASCENT_SERIES_JSON_HPP

#include <array>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "series.hpp"

namespace pascent
{

// {"order": N, "vars": ["t","u","v","z","x"],
//  "terms": [{"exp": [n,eu,ev,ez,ex], "coeff": "<decimal>"}, ...]}
// Terms are sorted lexicographically by exponent vector. A u-truncated series
// additionally records "udeg".

inline nlohmann::ordered_json to_json(const TSeries &s)
{
    nlohmann::ordered_json j;
    j["order"] = s.order();
    j["vars"] = {"t", "u", "v", "z", "x"};
    if (s.ucap()) {
        j["udeg"] = *s.ucap();
    }
    auto terms = nlohmann::ordered_json::array();
    for (unsigned n = 0; n <= s.order(); ++n) {
        for (const auto &[m, c] : s.coefficient(n).terms()) {
            auto e = m.exponents();
            terms.push_back({{"exp", {n, e[0], e[1], e[2], e[3]}}, {"coeff", to_decimal(c)}});
        }
    }
    j["terms"] = std::move(terms);
    return j;
}

inline TSeries series_from_json(const nlohmann::json &j)
{
    try {
        unsigned order = j.at("order").get<unsigned>();
        if (j.at("vars") != nlohmann::json({"t", "u", "v", "z", "x"})) {
            throw invalid_input("unexpected variable list in series JSON");
        }
        std::vector<std::vector<MultiPoly::Term>> terms(order + 1);
        for (const auto &term : j.at("terms")) {
            auto e = term.at("exp").get<std::array<unsigned, 5>>();
            if (e[0] > order) {
                throw invalid_input("term beyond the declared order");
            }
            terms[e[0]].emplace_back(Monomial::from(e[1], e[2], e[3], e[4]),
                                     from_decimal(term.at("coeff").get<std::string>()));
        }
        std::vector<MultiPoly> coeffs;
        for (auto &t : terms) {
            coeffs.push_back(MultiPoly::from_terms(std::move(t)));
        }
        std::optional<unsigned> cap;
        if (j.contains("udeg")) {
            cap = j.at("udeg").get<unsigned>();
        }
        return TSeries(std::move(coeffs), order, cap);
    } catch (const nlohmann::json::exception &e) {
        throw invalid_input(std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace pascent

#endif
