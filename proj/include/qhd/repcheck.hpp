#pragma once

#include <cmath>

#include "qhd/numeric.hpp"

namespace qhd {

// Finite-dimensional representation of the standard one-parameter deformation
// of sl(2), with q = e^a. Basis vectors carry weights 2j, 2j-2, ..., -2j.
struct NumRep {
    double j = 0;
    std::size_t dim = 0;
    cplx a;
    NumMat J0, Jplus, Jminus;
    NumMat K, Kinv; // q^{J0/2} and its inverse
};

namespace detail {

inline cplx qnumber(double n, cplx a) {
    if (std::abs(a) < 1e-10) return cplx(n, 0.0);
    return std::sinh(n * a) / std::sinh(a);
}

} // namespace detail

// Symmetric matrix elements: J+ e_m = sqrt([j-m][j+m+1]) e_{m+1}.
inline NumRep build_rep(double j, cplx a) {
    double two_j = 2.0 * j;
    if (two_j < 0 || std::abs(two_j - std::round(two_j)) > 1e-12)
        throw error("build_rep: j must be a nonnegative half-integer");
    int tj = int(std::round(two_j));
    NumRep rep;
    rep.j = j;
    rep.dim = std::size_t(tj) + 1;
    rep.a = a;
    for (int n = 1; n <= tj; ++n)
        if (std::abs(detail::qnumber(n, a)) < 1e-8)
            throw domain_error("build_rep: degenerate q (vanishing q-number [" +
                               std::to_string(n) + "])");
    rep.J0 = NumMat(rep.dim);
    rep.Jplus = NumMat(rep.dim);
    rep.Jminus = NumMat(rep.dim);
    rep.K = NumMat(rep.dim);
    rep.Kinv = NumMat(rep.dim);
    for (std::size_t i = 0; i < rep.dim; ++i) {
        double m = j - double(i); // weight of e_i is 2m
        rep.J0.at(i, i) = 2.0 * m;
        rep.K.at(i, i) = std::exp(a * m);
        rep.Kinv.at(i, i) = std::exp(-a * m);
    }
    for (std::size_t i = 1; i < rep.dim; ++i) {
        // e_i -> e_{i-1} raises the weight; [j-m] = [i], [j+m+1] = [2j-i+1]
        cplx amp = std::sqrt(detail::qnumber(double(i), a) *
                             detail::qnumber(double(tj) - double(i) + 1.0, a));
        rep.Jplus.at(i - 1, i) = amp;
        rep.Jminus.at(i, i - 1) = amp;
    }
    return rep;
}

// Residual of the defining relations: [J0,J+-] = +-2J+- and [J+,J-] = [J0]_q.
inline double rep_algebra_residual(const NumRep& r) {
    double res = 0.0;
    res = std::max(res, (commutator(r.J0, r.Jplus) - r.Jplus * cplx(2.0)).max_abs());
    res = std::max(res, (commutator(r.J0, r.Jminus) + r.Jminus * cplx(2.0)).max_abs());
    NumMat j0q(r.dim);
    for (std::size_t i = 0; i < r.dim; ++i) {
        cplx k2 = r.K.at(i, i) * r.K.at(i, i);
        j0q.at(i, i) = std::abs(r.a) < 1e-10 ? r.J0.at(i, i)
                                             : (k2 - cplx(1.0) / k2) /
                                                   (std::exp(r.a) - std::exp(-r.a));
    }
    res = std::max(res, (commutator(r.Jplus, r.Jminus) - j0q).max_abs());
    return res;
}

// Coefficients of a generator map X' = cJm J- + cK K + cKinv K^-1 + cJp J+.
struct GenMap {
    cplx cJm, cK, cKinv, cJp;
};

inline NumMat apply_map(const NumRep& r, const GenMap& m) {
    return r.Jminus * m.cJm + r.K * m.cK + r.Kinv * m.cKinv + r.Jplus * m.cJp;
}

struct MappedGenerators {
    NumMat J0p, Jplusp, Jminusp;
    cplx a, a_plus;
};

// J'- = b1 J- + b2 (q^{J0/2} - q^{-J0/2}) + b3 J+ with b1 = sinh(a)/a,
// b2 = -a+/(2a^2), b3 = -a+^2/(4a^2); J'0 and J'+ are fixed.
inline GenMap bhp_coeffs(cplx a, cplx a_plus) {
    if (std::abs(a) < 1e-12) throw domain_error("bhp_map: a = 0 (coefficients singular)");
    cplx b1 = std::sinh(a) / a;
    cplx b2 = -a_plus / (2.0 * a * a);
    cplx b3 = -a_plus * a_plus / (4.0 * a * a);
    return {b1, b2, -b2, b3};
}

inline MappedGenerators bhp_map(const NumRep& rep, cplx a_plus) {
    MappedGenerators out;
    out.a = rep.a;
    out.a_plus = a_plus;
    out.J0p = rep.J0;
    out.Jplusp = rep.Jplus;
    out.Jminusp = apply_map(rep, bhp_coeffs(rep.a, a_plus));
    return out;
}

// Residual of the three deformed commutation relations:
//   [J'0,J'+] =  2J'+
//   [J'0,J'-] = -2J'- - (a+/a^2)(K - K^-1)*2/1 ... see below
//   [J'+,J'-] = sinh(a J'0)/a + (a+/a)((e^a-1)/(2a))(K^-1 J'+ + J'+ K)
inline double mapped_relations_residual(const NumRep& r, const MappedGenerators& m) {
    cplx a = r.a, ap = m.a_plus;
    double res = 0.0;
    res = std::max(res, (commutator(m.J0p, m.Jplusp) - m.Jplusp * cplx(2.0)).max_abs());

    // sinh(a J0 / 2) = (K - K^-1)/2, so (a+/a) sinh(a J0/2)/(a/2) = (a+/a^2)(K - K^-1)
    NumMat rhs2 = m.Jminusp * cplx(-2.0) - (r.K - r.Kinv) * (ap / (a * a)) -
                  m.Jplusp * (ap * ap / (a * a));
    res = std::max(res, (commutator(m.J0p, m.Jminusp) - rhs2).max_abs());

    NumMat sinh_aj0(r.dim);
    for (std::size_t i = 0; i < r.dim; ++i) {
        cplx k2 = r.K.at(i, i) * r.K.at(i, i);
        sinh_aj0.at(i, i) = (k2 - cplx(1.0) / k2) / 2.0;
    }
    NumMat rhs3 = sinh_aj0 * (cplx(1.0) / a) +
                  (r.Kinv * m.Jplusp + m.Jplusp * r.K) *
                      ((ap / a) * ((std::exp(a) - cplx(1.0)) / (2.0 * a)));
    res = std::max(res, (commutator(m.Jplusp, m.Jminusp) - rhs3).max_abs());
    return res;
}

// Coproduct residual for a J--type generator map: the image of
// Delta(J-) under the map, versus the primitive-like coproduct of the image.
inline double coproduct_residual(const NumRep& r1, const NumRep& r2, const GenMap& m) {
    NumMat via = kron(r1.K, r2.Jminus) * m.cJm + kron(r1.Jminus, r2.Kinv) * m.cJm +
                 kron(r1.K, r2.K) * m.cK + kron(r1.Kinv, r2.Kinv) * m.cKinv +
                 kron(r1.K, r2.Jplus) * m.cJp + kron(r1.Jplus, r2.Kinv) * m.cJp;
    NumMat x1 = apply_map(r1, m), x2 = apply_map(r2, m);
    NumMat direct = kron(r1.K, x2) + kron(x1, r2.Kinv);
    return (via - direct).max_abs();
}

// Max coproduct residual over J'-, J'+ and J'0 for the standard map. The map
// fixes J+ and J0, so their two coproduct routes agree term by term; the J'-
// route carries all the content.
inline double check_coproduct(double j1, double j2, cplx a, cplx a_plus) {
    NumRep r1 = build_rep(j1, a), r2 = build_rep(j2, a);
    double res = coproduct_residual(r1, r2, bhp_coeffs(a, a_plus));
    res = std::max(res, coproduct_residual(r1, r2, GenMap{0, 0, 0, 1}));
    return res;
}

// Same map but with the K and K^-1 coefficients no longer opposite; the
// coproduct is not preserved and the residual is of order |b2|.
inline double check_coproduct_violated(double j1, double j2, cplx a, cplx a_plus) {
    NumRep r1 = build_rep(j1, a), r2 = build_rep(j2, a);
    GenMap m = bhp_coeffs(a, a_plus);
    m.cKinv = m.cK; // breaks the single condition
    return coproduct_residual(r1, r2, m);
}

// Antipode consistency m(S (x) id)Delta(X') = eps(X') on the mapped
// generators, with S(X') = -K^-1 X' K and S(K) = K^-1.
inline double antipode_residual(const NumRep& r, const MappedGenerators& m) {
    auto check = [&](const NumMat& x) {
        NumMat lhs = r.Kinv * x + (r.Kinv * x * r.K) * cplx(-1.0) * r.Kinv;
        return lhs.max_abs();
    };
    return std::max(check(m.Jminusp), check(m.Jplusp));
}

} // namespace qhd
