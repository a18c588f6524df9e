#pragma once

#include <map>

#include <json.hpp>

#include "qhd/matrix.hpp"

namespace qhd {

// A rational path in the limit variable: each listed symbol is replaced by a
// rational function of t and the surviving symbols.
struct LimitPath {
    Symbol variable;
    std::map<Symbol, RatFunc> assignments;
};

inline MatRF substitute_path(const MatRF& m, const LimitPath& path) {
    for (auto it = path.assignments.begin(); it != path.assignments.end(); ++it) {
        auto jt = it;
        for (++jt; jt != path.assignments.end(); ++jt)
            if (it->second == jt->second)
                throw domain_error("limit path assigns '" + it->first.name() + "' and '" +
                                   jt->first.name() + "' the same value");
    }
    for (Symbol s : m.symbols())
        if (s == path.variable && !path.assignments.count(s))
            throw domain_error("limit variable '" + s.name() +
                               "' already occurs in the source matrix");
    return m.substitute(path.assignments);
}

// Entrywise evaluation at t = 0 after cancellation. Canonical rational
// functions are already reduced, so a vanishing denominator is a genuine pole.
inline MatRF limit_t0(const MatRF& m, Symbol t) {
    std::map<Symbol, RatFunc> at0{{t, RatFunc(0)}};
    MatRF out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const RatFunc& e = m.at(i, j);
            RatFunc den0 = RatFunc(e.den()).substitute(at0);
            if (den0.is_zero())
                throw domain_error("pole at " + t.name() + " = 0 in entry (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            out.at(i, j) = RatFunc(e.num()).substitute(at0) / den0;
        }
    return out;
}

// JSON form: {"var": "t", "assignments": {"q": "1+lambda4*t", ...}}. The
// expressions may use the limit variable, the assigned symbols, and any
// symbols of `extra_params`.
inline LimitPath path_from_json(const nlohmann::json& j, const std::vector<Symbol>& extra_params) {
    if (!j.is_object() || !j.contains("var") || !j.contains("assignments"))
        throw error("path JSON: expected {var, assignments}");
    LimitPath path;
    path.variable = sym(j.at("var").get<std::string>());
    std::vector<Symbol> params = extra_params;
    params.push_back(path.variable);
    for (const auto& [name, expr] : j.at("assignments").items()) params.push_back(sym(name));
    for (const auto& [name, expr] : j.at("assignments").items())
        path.assignments[sym(name)] = parse_expr(expr.get<std::string>(), params);
    return path;
}

} // namespace qhd
