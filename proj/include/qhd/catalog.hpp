#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhd/matrix.hpp"

namespace qhd {

// How an entry relates to the Yang-Baxter equation.
enum class YbeStatus {
    not_applicable,    // transformation matrices, the flip, ...
    exact,             // residual vanishes identically
    modulo_constraint, // residual numerators divisible by the attached constraint
};

struct CatalogEntry {
    std::string name;
    std::vector<Symbol> params;
    MatRF matrix;
    std::vector<std::pair<Polynomial, Symbol>> constraints; // side conditions = 0
    std::vector<Polynomial> nonvanishing;                   // must stay != 0
    std::string notes;
    YbeStatus ybe = YbeStatus::not_applicable;
};

// The rational chart for the three-parameter family: h and h' are expressed
// through (q, eta, zeta) so that eta^-1 h + eta h' = q - 1 holds identically
// and no square roots enter the coefficient field.
struct KupershmidtChart {
    Symbol q, eta, zeta;
    RatFunc h, hp, kappa1, kappa2, qprime;
};

struct KupershmidtFamily {
    KupershmidtChart chart;
    MatRF R;      // chart form of the three-parameter R with free kappa
    MatRF G;      // the 2x2 similarity transformation
    MatRF Ginv;
    MatRF Rprime; // conjugated form with diagonal blocks kappa/kappa1, kappa/kappa2
    Polynomial kappa_quadratic; // cleared-denominator side condition in kappa
    Symbol kappa;
};

namespace detail {

inline MatRF make_matrix(const std::vector<Symbol>& params,
                         const std::vector<std::vector<std::string>>& rows) {
    MatRF m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw error("catalog matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = parse_expr(rows[i][j], params);
    }
    return m;
}

inline std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;
    auto add = [&](CatalogEntry e) { cat.emplace(e.name, std::move(e)); };

    Symbol q = sym("q"), h = sym("h"), hp = sym("hp"), k = sym("k");
    Symbol eta = sym("eta"), zeta = sym("zeta"), p = sym("p"), g = sym("g");
    Symbol x = sym("x"), y = sym("y"), w = sym("w");
    Symbol x1 = sym("x1"), x2 = sym("x2"), x3 = sym("x3");

    Polynomial kq = Polynomial(k) * Polynomial(k) * (Polynomial(q) + Polynomial(h) * Polynomial(hp))
                    - Polynomial(k) * (Polynomial(q) + 1) + Polynomial(1);

    add({"kupershmidt_R",
         {q, h, hp, k},
         make_matrix({q, h, hp, k}, {{"1", "-h*k", "h*k", "0"},
                                     {"0", "q*k", "1-q*k", "0"},
                                     {"0", "1-k", "k", "0"},
                                     {"0", "-hp*k", "hp*k", "1"}}),
         {{kq, k}},
         {},
         "three-parameter deformation with free parameter k; satisfies the "
         "Yang-Baxter equation on the zero set of the attached quadratic",
         YbeStatus::modulo_constraint});

    add({"kupershmidt_G",
         {eta, zeta},
         make_matrix({eta, zeta}, {{"1", "eta"}, {"zeta", "1+eta*zeta"}}),
         {},
         {},
         "unimodular 2x2 transformation diagonalizing the k-family",
         YbeStatus::not_applicable});

    add({"upper_unipotent_G",
         {eta},
         make_matrix({eta}, {{"1", "eta"}, {"0", "1"}}),
         {},
         {},
         "upper unipotent transformation; also the contraction twist",
         YbeStatus::not_applicable});

    add({"lower_unipotent_G",
         {zeta},
         make_matrix({zeta}, {{"1", "0"}, {"zeta", "1"}}),
         {},
         {},
         "lower unipotent transformation for the h = 0 branch",
         YbeStatus::not_applicable});

    add({"kupershmidt_Rh",
         {q, h},
         make_matrix({q, h}, {{"1", "-h", "h", "0"},
                              {"0", "q", "1-q", "0"},
                              {"0", "0", "1", "0"},
                              {"0", "0", "0", "1"}}),
         {},
         {},
         "two-parameter (q,h) specialization: hp = 0, k = 1",
         YbeStatus::exact});

    add({"std_Rq",
         {q},
         make_matrix({q}, {{"1", "0", "0", "0"},
                           {"0", "q", "1-q^2", "0"},
                           {"0", "0", "q", "0"},
                           {"0", "0", "0", "1"}}),
         {},
         {},
         "standard one-parameter deformation",
         YbeStatus::exact});

    add({"bhp_Rqh",
         {q, h},
         make_matrix({q, h}, {{"1", "h", "-q*h", "h^2"},
                              {"0", "q", "1-q^2", "q*h"},
                              {"0", "0", "q", "-h"},
                              {"0", "0", "0", "1"}}),
         {},
         {},
         "two-parameter superposition of standard and Jordanian deformations; "
         "gauge-equivalent to std_Rq",
         YbeStatus::exact});

    add({"bhp_M",
         {x, q, h},
         make_matrix({x, q, h}, {{"x", "h/(q-1)"}, {"0", "1"}}),
         {},
         {Polynomial(q) - Polynomial(1), Polynomial(x)},
         "transformation carrying bhp_Rqh to std_Rq for any nonzero x",
         YbeStatus::not_applicable});

    add({"std_Rpq",
         {p, q},
         make_matrix({p, q}, {{"p", "0", "0", "0"},
                              {"0", "p*q", "p-q", "0"},
                              {"0", "0", "1", "0"},
                              {"0", "0", "0", "p"}}),
         {},
         {},
         "standard two-parameter deformation, homogeneous normalization",
         YbeStatus::exact});

    add({"std_Rpq_conjugated",
         {p, q, eta},
         make_matrix({p, q, eta}, {{"p", "p*(1-q)*eta", "(q-1)*eta", "(1-p)*(q-1)*eta^2"},
                                   {"0", "p*q", "p-q", "q*(p-1)*eta"},
                                   {"0", "0", "1", "(1-p)*eta"},
                                   {"0", "0", "0", "p"}}),
         {},
         {},
         "std_Rpq conjugated by the tensor square of upper_unipotent_G; the "
         "input to the singular contraction",
         YbeStatus::exact});

    add({"jordanian_Rgh",
         {g, h},
         make_matrix({g, h}, {{"1", "-h", "h", "g*h"},
                              {"0", "1", "0", "-g"},
                              {"0", "0", "1", "g"},
                              {"0", "0", "0", "1"}}),
         {},
         {},
         "two-parameter Jordanian deformation; triangular in the strong sense",
         YbeStatus::exact});

    add({"jordanian_Rh",
         {h},
         make_matrix({h}, {{"1", "-h", "h", "h^2"},
                           {"0", "1", "0", "-h"},
                           {"0", "0", "1", "h"},
                           {"0", "0", "0", "1"}}),
         {},
         {},
         "one-parameter Jordanian form, g = h",
         YbeStatus::exact});

    add({"jordanian_Rh0",
         {h},
         make_matrix({h}, {{"1", "-h", "h", "0"},
                           {"0", "1", "0", "0"},
                           {"0", "0", "1", "0"},
                           {"0", "0", "0", "1"}}),
         {},
         {},
         "one-parameter Jordanian form, g = 0",
         YbeStatus::exact});

    add({"hietarinta_S21",
         {p, q},
         make_matrix({p, q}, {{"1", "0", "0", "0"},
                              {"0", "p", "1-p*q", "0"},
                              {"0", "0", "q", "0"},
                              {"0", "0", "0", "1"}}),
         {},
         {},
         "triangular-form family 1 of 7: the two-parameter deformation of GL(2)",
         YbeStatus::exact});

    add({"hietarinta_S22",
         {p, q},
         make_matrix({p, q}, {{"1", "0", "0", "0"},
                              {"0", "p", "1-p*q", "0"},
                              {"0", "0", "q", "0"},
                              {"0", "0", "0", "-p*q"}}),
         {},
         {},
         "triangular-form family 2 of 7: the two-parameter deformation of GL(1|1)",
         YbeStatus::exact});

    add({"hietarinta_H13",
         {g, h},
         make_matrix({g, h}, {{"1", "-h", "h", "g*h"},
                              {"0", "1", "0", "-g"},
                              {"0", "0", "1", "g"},
                              {"0", "0", "0", "1"}}),
         {},
         {},
         "triangular-form family 3 of 7: the two-parameter Jordanian "
         "deformation (same matrix as jordanian_Rgh)",
         YbeStatus::exact});

    add({"hietarinta_H23",
         {x1, x2, x3},
         make_matrix({x1, x2, x3}, {{"1", "x1", "x2", "x3"},
                                    {"0", "1", "0", "x2"},
                                    {"0", "0", "1", "x1"},
                                    {"0", "0", "0", "1"}}),
         {},
         {},
         "triangular-form family 4 of 7: unipotent three-parameter family",
         YbeStatus::exact});

    add({"hietarinta_S01",
         {},
         make_matrix({}, {{"1", "0", "0", "1"},
                          {"0", "1", "0", "0"},
                          {"0", "0", "1", "0"},
                          {"0", "0", "0", "1"}}),
         {},
         {},
         "triangular-form family 5 of 7: hietarinta_H23 at x1 = x2 = 0, x3 = 1",
         YbeStatus::exact});

    add({"hietarinta_S02",
         {},
         make_matrix({}, {{"1", "0", "0", "1"},
                          {"0", "-1", "0", "0"},
                          {"0", "0", "-1", "0"},
                          {"0", "0", "0", "1"}}),
         {},
         {},
         "triangular-form family 6 of 7: a degenerate superalgebra case",
         YbeStatus::exact});

    add({"gl11_Rqh",
         {q, h},
         make_matrix({q, h}, {{"1", "0", "0", "h"},
                              {"0", "1", "1-q", "0"},
                              {"0", "0", "q", "0"},
                              {"0", "0", "0", "-q"}}),
         {},
         {},
         "triangular-form family 7 of 7: the hybrid deformation of GL(1|1); "
         "h cannot be removed by a tensor-square similarity",
         YbeStatus::exact});

    add({"gl11_R1h",
         {h},
         make_matrix({h}, {{"1", "0", "0", "h"},
                           {"0", "1", "0", "0"},
                           {"0", "0", "1", "0"},
                           {"0", "0", "0", "-1"}}),
         {},
         {},
         "gl11_Rqh at q = 1; still depends on h and satisfies R21 = R^-1",
         YbeStatus::exact});

    add({"gl11_M",
         {x, y},
         make_matrix({x, y}, {{"x", "y"}, {"0", "1/x"}}),
         {},
         {Polynomial(x)},
         "unimodular upper-triangular transformation used on gl11_Rqh",
         YbeStatus::not_applicable});

    add({"gl11_Rqh_transformed",
         {q, h, x, y},
         make_matrix({q, h, x, y},
                     {{"1", "0", "0", "h*x^4-(1+q)*(x*y)^2"},
                      {"0", "1", "1-q", "-2*x*y"},
                      {"0", "0", "q", "-2*q*x*y"},
                      {"0", "0", "0", "-q"}}),
         {},
         {},
         "gl11_Rqh conjugated by the tensor square of gl11_M; no choice of x, y "
         "reaches the h = 0 form",
         YbeStatus::exact});

    add({"gl11_Rqh_reduced",
         {q, x, w},
         make_matrix({q, x, w}, {{"1", "0", "0", "0"},
                                 {"0", "1", "1-q", "-2*x^2*w"},
                                 {"0", "0", "q", "-2*q*x^2*w"},
                                 {"0", "0", "0", "-q"}}),
         {},
         {},
         "gl11_Rqh_transformed on the rational chart h = (1+q)*w^2, y = x*w, "
         "which removes the corner entry",
         YbeStatus::exact});

    {
        CatalogEntry e;
        e.name = "flip_P";
        e.matrix = MatRF::flip(2);
        e.notes = "flip permutation on the tensor square";
        add(std::move(e));
    }

    return cat;
}

inline const std::map<std::string, CatalogEntry>& catalog_map() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

// Clear denominators of a rational function understood as an equation f = 0.
inline Polynomial clear_denominator(const RatFunc& f) { return normalize_sign(f.num()); }

} // namespace detail

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, e] : detail::catalog_map()) names.push_back(name);
    return names;
}

inline CatalogEntry get(const std::string& name, const std::map<Symbol, RatFunc>& bindings = {}) {
    const auto& cat = detail::catalog_map();
    auto it = cat.find(name);
    if (it == cat.end()) throw error("unknown catalog entry '" + name + "'");
    CatalogEntry e = it->second;
    if (bindings.empty()) return e;
    for (const Polynomial& nv : e.nonvanishing) {
        RatFunc s = RatFunc(nv).substitute(bindings);
        if (s.is_zero())
            throw domain_error("substitution violates a nonvanishing requirement of '" + name +
                               "': " + nv.str() + " = 0");
    }
    e.matrix = e.matrix.substitute(bindings);
    std::vector<std::pair<Polynomial, Symbol>> constraints;
    for (const auto& [c, v] : e.constraints) {
        if (bindings.count(v)) continue; // the constrained symbol was specialized
        RatFunc s = RatFunc(c).substitute(bindings);
        if (!s.is_zero()) constraints.emplace_back(detail::clear_denominator(s), v);
    }
    e.constraints = std::move(constraints);
    return e;
}

inline KupershmidtChart kupershmidt_chart() {
    KupershmidtChart c;
    c.q = sym("q");
    c.eta = sym("eta");
    c.zeta = sym("zeta");
    RatFunc q(c.q), eta(c.eta), zeta(c.zeta);
    RatFunc common = RatFunc(1) + RatFunc(2) * eta * zeta;
    c.h = (q - 1) * eta * (RatFunc(1) + eta * zeta) / common;
    c.hp = (q - 1) * zeta / common;
    c.kappa1 = (RatFunc(1) + c.h / eta).inverse();
    c.kappa2 = (RatFunc(1) + eta * c.hp).inverse();
    c.qprime = c.kappa2 / c.kappa1;
    return c;
}

inline KupershmidtFamily kupershmidt_family(const KupershmidtChart& chart) {
    KupershmidtFamily fam;
    fam.chart = chart;
    fam.kappa = sym("k");
    RatFunc q(chart.q), kk(fam.kappa);

    std::map<Symbol, RatFunc> to_chart{{sym("h"), chart.h}, {sym("hp"), chart.hp}};
    fam.R = get("kupershmidt_R").matrix.substitute(to_chart);
    fam.G = get("kupershmidt_G").matrix;
    fam.Ginv = inverse(fam.G);

    RatFunc r22 = kk / chart.kappa1, r33 = kk / chart.kappa2;
    fam.Rprime = MatRF{{1, 0, 0, 0},
                       {0, r22, RatFunc(1) - r22, 0},
                       {0, RatFunc(1) - r33, r33, 0},
                       {0, 0, 0, 1}};

    RatFunc quad = kk * kk * (q + chart.h * chart.hp) - kk * (q + 1) + RatFunc(1);
    fam.kappa_quadratic = detail::clear_denominator(quad);
    return fam;
}

} // namespace qhd
