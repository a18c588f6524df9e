#pragma once

#include <vector>

#include "qhd/matrix.hpp"

namespace qhd {

// Residual of the constant Yang-Baxter equation R12 R13 R23 - R23 R13 R12 on
// the triple tensor product. R13 is realized by conjugating R12 with the flip
// of the last two factors.
struct YbeResidual {
    MatRF residual; // 8x8 for 4x4 input
    bool is_zero() const { return residual.is_zero(); }
};

inline YbeResidual ybe_residual(const MatRF& r) {
    if (r.dim() != 4) throw error("ybe_residual: expected a 4x4 matrix");
    MatRF i2 = MatRF::identity(2);
    MatRF p23 = kron(i2, MatRF::flip(2));
    MatRF r12 = kron(r, i2);
    MatRF r23 = kron(i2, r);
    MatRF r13 = matmul(matmul(p23, r12), p23);
    MatRF lhs = matmul(matmul(r12, r13), r23);
    MatRF rhs = matmul(matmul(r23, r13), r12);
    return {lhs - rhs};
}

// Triangularity in the Hopf-algebra sense: R21 = R^-1.
inline bool is_triangular_R(const MatRF& r) {
    if (r.dim() != 4) throw error("is_triangular_R: expected a 4x4 matrix");
    if (det(r).is_zero()) throw domain_error("is_triangular_R: singular matrix");
    return matmul(r21(r), r) == MatRF::identity(4);
}

// True iff every entry numerator of the YBE residual has zero remainder under
// division by `constraint` in v. Denominators must not involve v.
inline bool residual_divisible(const MatRF& r, const Polynomial& constraint, Symbol v) {
    if (constraint.degree_in(v) == 0)
        throw domain_error("residual_divisible: constraint independent of '" + v.name() + "'");
    bool occurs = false;
    for (Symbol s : r.symbols())
        if (s == v) occurs = true;
    if (!occurs)
        throw domain_error("residual_divisible: '" + v.name() + "' does not occur in R");
    MatRF res = ybe_residual(r).residual;
    for (std::size_t i = 0; i < res.dim(); ++i)
        for (std::size_t j = 0; j < res.dim(); ++j) {
            const RatFunc& e = res.at(i, j);
            if (e.is_zero()) continue;
            if (e.den().depends_on(v))
                throw domain_error("residual_divisible: denominator depends on '" + v.name() + "'");
            auto [q, rem] = divmod_univar(e.num(), constraint, v);
            if (!rem.is_zero()) return false;
        }
    return true;
}

// tr((P R)^k) for k = 1..kmax followed by tr(R^k) for k = 1..kmax. These are
// invariant under conjugation by M (x) M because P commutes with M (x) M.
inline std::vector<RatFunc> gauge_invariants(const MatRF& r, int kmax) {
    if (r.dim() != 4) throw error("gauge_invariants: expected a 4x4 matrix");
    std::vector<RatFunc> out;
    MatRF pr = matmul(MatRF::flip(2), r);
    MatRF acc = pr;
    for (int k = 1; k <= kmax; ++k) {
        out.push_back(trace(acc));
        if (k < kmax) acc = matmul(acc, pr);
    }
    acc = r;
    for (int k = 1; k <= kmax; ++k) {
        out.push_back(trace(acc));
        if (k < kmax) acc = matmul(acc, r);
    }
    return out;
}

} // namespace qhd
