#ifndef PERMSTAT_JSON_IO_HPP
#define PERMSTAT_JSON_IO_HPP

#include <vector>

#include "json.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/series.hpp"

namespace permstat {

// {"terms":[{"q":..,"p":..,"y":..,"coef":"<decimal>"}]}, terms ordered
// lexicographically by (q, p, y)
inline nlohmann::ordered_json to_json(const MultiPoly& poly) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : poly.terms()) {
        nlohmann::ordered_json t;
        t["q"] = e.q;
        t["p"] = e.p;
        t["y"] = e.y;
        t["coef"] = c.to_string();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json out;
    out["terms"] = std::move(terms);
    return out;
}

// array of MultiPoly objects indexed by x-degree
inline nlohmann::ordered_json to_json(const XSeries& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int d = 0; d <= s.order(); ++d) arr.push_back(to_json(s.coeff(d)));
    return arr;
}

inline nlohmann::ordered_json to_json(const std::vector<MultiPoly>& weights) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& w : weights) arr.push_back(to_json(w));
    return arr;
}

}  // namespace permstat

#endif
